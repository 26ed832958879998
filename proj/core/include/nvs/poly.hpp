#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nvs/prime_field.hpp"
#include "nvs/rational.hpp"

namespace nvs {

// Process-wide append-only registry of polynomial variables.
std::uint32_t var_id(const std::string& name);
const std::string& var_name(std::uint32_t id);
std::size_t var_count();

// Sparse exponent vector, factors sorted by variable id, exponents > 0.
struct Monomial {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;

  bool empty() const { return factors.empty(); }
  std::uint32_t total_degree() const;
  Monomial operator*(const Monomial& o) const;
  // quotient this / o, or nullopt-like failure via `ok`
  Monomial divide(const Monomial& o, bool& ok) const;
  bool operator==(const Monomial& o) const { return factors == o.factors; }
  std::string str() const;
};

// Graded lex: total degree first, then lex with smaller-id variables ranked
// higher.  A monomial order, so leading terms behave under products.
struct MonoLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Multivariate polynomial over Rational.  No zero coefficients stored.
class SparsePoly {
 public:
  using TermMap = std::map<Monomial, Rational, MonoLess>;

  SparsePoly() = default;
  explicit SparsePoly(const Rational& c);
  static SparsePoly variable(std::uint32_t id);
  static SparsePoly variable(const std::string& name);
  static SparsePoly constant(const Rational& c) { return SparsePoly(c); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // requires is_constant()
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  std::uint32_t total_degree() const;

  void add_term(const Monomial& m, const Rational& c);

  SparsePoly operator-() const;
  SparsePoly operator+(const SparsePoly& o) const;
  SparsePoly operator-(const SparsePoly& o) const;
  SparsePoly operator*(const SparsePoly& o) const;
  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly operator*(const Rational& c) const;

  bool operator==(const SparsePoly& o) const { return terms_ == o.terms_; }

  // Exact division; throws std::domain_error when the division leaves a
  // remainder.  Used by fraction-free elimination and alternant quotients.
  SparsePoly exact_div(const SparsePoly& divisor) const;

  // Substitute x_{n+1},... -> values; ring homomorphism by construction.
  template <class R, class Assign>
  R eval(Assign&& value_of_var) const {
    R acc{};
    for (const auto& [m, c] : terms_) {
      R t = ring_from_rational<R>(c);
      for (auto [v, e] : m.factors) {
        R base = value_of_var(v);
        for (std::uint32_t k = 0; k < e; ++k) t = t * base;
      }
      acc = acc + t;
    }
    return acc;
  }

  // Partial substitution of some variables by rationals.
  SparsePoly substitute(const std::map<std::uint32_t, Rational>& values) const;

  std::string str() const;

 private:
  template <class R>
  static R ring_from_rational(const Rational& q);
  TermMap terms_;
};

template <>
inline Rational SparsePoly::ring_from_rational<Rational>(const Rational& q) {
  return q;
}
template <>
inline PFElem SparsePoly::ring_from_rational<PFElem>(const Rational& q) {
  return PFElem::from_rational(q);
}

}  // namespace nvs
