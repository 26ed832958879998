#include "nvs/words.hpp"

#include <sstream>
#include <stdexcept>

namespace nvs {

EWord zword_to_eword(const ZWord& w) {
  EWord e;
  for (int k : w) {
    if (k < 1) throw std::invalid_argument("word entries must be positive");
    e.push_back(1);
    for (int i = 1; i < k; ++i) e.push_back(0);
  }
  return e;
}

std::optional<ZWord> eword_to_zword(const EWord& w) {
  ZWord z;
  std::size_t i = 0;
  while (i < w.size()) {
    if (w[i] != 1) return std::nullopt;  // must start each block with e_1
    std::size_t j = i + 1;
    while (j < w.size() && w[j] == 0) ++j;
    z.push_back(static_cast<int>(j - i));
    i = j;
  }
  return z;
}

bool is_admissible(const ZWord& w) { return w.empty() || w.back() >= 2; }

std::string zword_str(const ZWord& w) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ",";
    os << w[i];
  }
  os << ")";
  return os.str();
}

void ZPoly::add(const ZWord& w, const Rational& c) {
  if (c == 0) return;
  auto it = terms.find(w);
  if (it == terms.end()) {
    terms.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
  for (const auto& [w, c] : o.terms) add(w, c);
  return *this;
}

ZPoly ZPoly::operator*(const Rational& c) const {
  ZPoly out;
  if (c == 0) return out;
  for (const auto& [w, k] : terms) out.terms.emplace(w, k * c);
  return out;
}

void EPoly::add(const EWord& w, const Rational& c) {
  if (c == 0) return;
  auto it = terms.find(w);
  if (it == terms.end()) {
    terms.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

EPoly& EPoly::operator+=(const EPoly& o) {
  for (const auto& [w, c] : o.terms) add(w, c);
  return *this;
}

EPoly EPoly::operator*(const Rational& c) const {
  EPoly out;
  if (c == 0) return out;
  for (const auto& [w, k] : terms) out.terms.emplace(w, k * c);
  return out;
}

ZPoly stuffle(const ZWord& a, const ZWord& b) {
  ZPoly out;
  if (a.empty()) {
    out.add(b, 1);
    return out;
  }
  if (b.empty()) {
    out.add(a, 1);
    return out;
  }
  ZWord ah(a.begin(), a.end() - 1), bh(b.begin(), b.end() - 1);
  int x = a.back(), y = b.back();
  auto append = [](const ZPoly& p, int k) {
    ZPoly out;
    for (const auto& [w, c] : p.terms) {
      ZWord e = w;
      e.push_back(k);
      out.add(e, c);
    }
    return out;
  };
  out += append(stuffle(ah, b), x);
  out += append(stuffle(a, bh), y);
  out += append(stuffle(ah, bh), x + y);
  return out;
}

ZPoly stuffle(const ZPoly& a, const ZPoly& b) {
  ZPoly out;
  for (const auto& [wa, ca] : a.terms)
    for (const auto& [wb, cb] : b.terms) out += stuffle(wa, wb) * (ca * cb);
  return out;
}

EPoly shuffle(const EWord& a, const EWord& b) {
  EPoly out;
  if (a.empty()) {
    out.add(b, 1);
    return out;
  }
  if (b.empty()) {
    out.add(a, 1);
    return out;
  }
  EWord at(a.begin() + 1, a.end()), bt(b.begin() + 1, b.end());
  auto prepend = [](const EPoly& p, std::uint8_t x) {
    EPoly out;
    for (const auto& [w, c] : p.terms) {
      EWord e;
      e.reserve(w.size() + 1);
      e.push_back(x);
      e.insert(e.end(), w.begin(), w.end());
      out.add(e, c);
    }
    return out;
  };
  out += prepend(shuffle(at, b), a[0]);
  out += prepend(shuffle(a, bt), b[0]);
  return out;
}

EPoly shuffle(const EPoly& a, const EPoly& b) {
  EPoly out;
  for (const auto& [wa, ca] : a.terms)
    for (const auto& [wb, cb] : b.terms) out += shuffle(wa, wb) * (ca * cb);
  return out;
}

ZPoly shuffle_z(const ZWord& a, const ZWord& b) {
  EPoly e = shuffle(zword_to_eword(a), zword_to_eword(b));
  ZPoly out;
  for (const auto& [w, c] : e.terms) {
    auto z = eword_to_zword(w);
    if (!z) throw std::logic_error("shuffle left the z-representable span");
    out.add(*z, c);
  }
  return out;
}

int RegPolynomial::degree() const {
  for (int i = static_cast<int>(coeff.size()); i-- > 0;)
    if (!coeff[static_cast<std::size_t>(i)].terms.empty()) return i;
  return 0;
}

void RegPolynomial::add(int tpow, const ZWord& w, const Rational& c) {
  if (tpow >= static_cast<int>(coeff.size()))
    coeff.resize(static_cast<std::size_t>(tpow) + 1);
  coeff[static_cast<std::size_t>(tpow)].add(w, c);
}

RegPolynomial& RegPolynomial::operator+=(const RegPolynomial& o) {
  if (o.coeff.size() > coeff.size()) coeff.resize(o.coeff.size());
  for (std::size_t i = 0; i < o.coeff.size(); ++i) coeff[i] += o.coeff[i];
  return *this;
}

RegPolynomial RegPolynomial::operator*(const Rational& c) const {
  RegPolynomial out;
  out.coeff.reserve(coeff.size());
  for (const auto& p : coeff) out.coeff.push_back(p * c);
  return out;
}

namespace {

int trailing_ones(const ZWord& w) {
  int m = 0;
  for (auto it = w.rbegin(); it != w.rend() && *it == 1; ++it) ++m;
  return m;
}

Rational factorial(int m) {
  Rational f(1);
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

RegPolynomial regularize_poly(const ZPoly& p, RegSide side);

RegPolynomial regularize_word_uncached(const ZWord& w, RegSide side);

RegPolynomial regularize_word(const ZWord& w, RegSide side) {
  static std::map<std::pair<ZWord, int>, RegPolynomial> cache;
  auto key = std::make_pair(w, static_cast<int>(side));
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  RegPolynomial out = regularize_word_uncached(w, side);
  cache.emplace(std::move(key), out);
  return out;
}

RegPolynomial regularize_word_uncached(const ZWord& w, RegSide side) {
  RegPolynomial out;
  int m = trailing_ones(w);
  if (m == 0) {
    out.add(0, w, 1);
    return out;
  }
  ZWord head(w.begin(), w.end() - m);
  if (side == RegSide::Stuffle) {
    // head * z1^{*m} = m! * w + lower trailing-z1 terms
    ZPoly prod;
    prod.add(head, 1);
    ZWord z1{1};
    for (int i = 0; i < m; ++i) prod = stuffle(prod, [&] {
      ZPoly p1;
      p1.add(z1, 1);
      return p1;
    }());
    prod.add(w, -factorial(m));
    RegPolynomial rest = regularize_poly(prod, side);
    out += rest * Rational(-1);
    out.add(m, head, 1);
    out = out * (1 / factorial(m));
  } else {
    // head sh e1^m = w + lower trailing-e1 terms; reg(head sh e1^m) = head T^m / m!
    EWord he = zword_to_eword(head);
    EWord ones(static_cast<std::size_t>(m), 1);
    EPoly prod = shuffle(he, ones);
    ZPoly zprod;
    for (const auto& [ew, c] : prod.terms) {
      auto z = eword_to_zword(ew);
      if (!z) throw std::logic_error("shuffle left the z span");
      zprod.add(*z, c);
    }
    zprod.add(w, -1);
    RegPolynomial rest = regularize_poly(zprod, side);
    out += rest * Rational(-1);
    out.add(m, head, 1 / factorial(m));
  }
  return out;
}

RegPolynomial regularize_poly(const ZPoly& p, RegSide side) {
  RegPolynomial out;
  for (const auto& [w, c] : p.terms) out += regularize_word(w, side) * c;
  return out;
}

}  // namespace

RegPolynomial regularize(const ZWord& w, RegSide side) {
  for (int k : w)
    if (k < 1) throw std::invalid_argument("word entries must be positive");
  return regularize_word(w, side);
}

}  // namespace nvs
