#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nvs/rational.hpp"

namespace nvs {

// z-word (k_1,...,k_d) <-> e-word e_1 e_0^{k_1-1} ... ; the evaluation map
// reads Z(z_{k_1}...z_{k_d}) = zeta(k_1,...,k_d) summed over m_1 < ... < m_d,
// so a word is admissible iff it is empty or its last entry is >= 2.
// This is the single conversion point for the index orientation.
using ZWord = std::vector<int>;
using EWord = std::vector<std::uint8_t>;  // letters 0 and 1

EWord zword_to_eword(const ZWord& w);
std::optional<ZWord> eword_to_zword(const EWord& w);
bool is_admissible(const ZWord& w);
std::string zword_str(const ZWord& w);

struct ZPoly {
  std::map<ZWord, Rational> terms;
  void add(const ZWord& w, const Rational& c);
  ZPoly& operator+=(const ZPoly& o);
  ZPoly operator*(const Rational& c) const;
  bool operator==(const ZPoly& o) const { return terms == o.terms; }
};

struct EPoly {
  std::map<EWord, Rational> terms;
  void add(const EWord& w, const Rational& c);
  EPoly& operator+=(const EPoly& o);
  EPoly operator*(const Rational& c) const;
  bool operator==(const EPoly& o) const { return terms == o.terms; }
};

// Quasi-shuffle on z-words, recursing on the last letter (matches the
// increasing-index orientation above).
ZPoly stuffle(const ZWord& a, const ZWord& b);
ZPoly stuffle(const ZPoly& a, const ZPoly& b);

// Letter shuffle on e-words.
EPoly shuffle(const EWord& a, const EWord& b);
EPoly shuffle(const EPoly& a, const EPoly& b);
ZPoly shuffle_z(const ZWord& a, const ZWord& b);  // convenience via e-words

// Polynomial in T with coefficients that are rational combinations of
// admissible z-words; numeric evaluation happens on demand elsewhere.
struct RegPolynomial {
  std::vector<ZPoly> coeff;  // coeff[i] multiplies T^i
  int degree() const;
  void add(int tpow, const ZWord& w, const Rational& c);
  RegPolynomial& operator+=(const RegPolynomial& o);
  RegPolynomial operator*(const Rational& c) const;
};

enum class RegSide { Stuffle, Shuffle };

// Triangular elimination on the trailing-z1 count: writes w as a polynomial
// in z1 under the chosen product with admissible coefficients, then maps
// z1 -> T.  Admissible words come back as constants.
RegPolynomial regularize(const ZWord& w, RegSide side);

}  // namespace nvs
