#include "nvs/poly.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace nvs {

namespace {
struct Registry {
  std::vector<std::string> names;
  std::unordered_map<std::string, std::uint32_t> ids;
  std::mutex mu;
};
Registry& registry() {
  static Registry r;
  return r;
}
}  // namespace

std::uint32_t var_id(const std::string& name) {
  Registry& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  auto it = r.ids.find(name);
  if (it != r.ids.end()) return it->second;
  std::uint32_t id = static_cast<std::uint32_t>(r.names.size());
  r.names.push_back(name);
  r.ids.emplace(name, id);
  return id;
}

const std::string& var_name(std::uint32_t id) {
  Registry& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  return r.names.at(id);
}

std::size_t var_count() {
  Registry& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  return r.names.size();
}

std::uint32_t Monomial::total_degree() const {
  std::uint32_t d = 0;
  for (auto [v, e] : factors) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out;
  out.factors.reserve(factors.size() + o.factors.size());
  std::size_t i = 0, j = 0;
  while (i < factors.size() && j < o.factors.size()) {
    if (factors[i].first == o.factors[j].first) {
      out.factors.emplace_back(factors[i].first,
                               factors[i].second + o.factors[j].second);
      ++i, ++j;
    } else if (factors[i].first < o.factors[j].first) {
      out.factors.push_back(factors[i++]);
    } else {
      out.factors.push_back(o.factors[j++]);
    }
  }
  for (; i < factors.size(); ++i) out.factors.push_back(factors[i]);
  for (; j < o.factors.size(); ++j) out.factors.push_back(o.factors[j]);
  return out;
}

Monomial Monomial::divide(const Monomial& o, bool& ok) const {
  Monomial out;
  ok = true;
  std::size_t i = 0, j = 0;
  while (j < o.factors.size()) {
    if (i >= factors.size() || factors[i].first > o.factors[j].first) {
      ok = false;
      return {};
    }
    if (factors[i].first < o.factors[j].first) {
      out.factors.push_back(factors[i++]);
      continue;
    }
    if (factors[i].second < o.factors[j].second) {
      ok = false;
      return {};
    }
    if (factors[i].second > o.factors[j].second)
      out.factors.emplace_back(factors[i].first,
                               factors[i].second - o.factors[j].second);
    ++i, ++j;
  }
  for (; i < factors.size(); ++i) out.factors.push_back(factors[i]);
  return out;
}

std::string Monomial::str() const {
  if (factors.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (auto [v, e] : factors) {
    if (!first) os << "*";
    first = false;
    os << var_name(v);
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

bool MonoLess::operator()(const Monomial& a, const Monomial& b) const {
  std::uint32_t da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  // lex with x_0 > x_1 > ...: walk ascending variable ids; the monomial
  // with the larger exponent on the first differing variable is larger.
  std::size_t i = 0, j = 0;
  while (i < a.factors.size() && j < b.factors.size()) {
    if (a.factors[i].first != b.factors[j].first)
      return a.factors[i].first > b.factors[j].first;
    if (a.factors[i].second != b.factors[j].second)
      return a.factors[i].second < b.factors[j].second;
    ++i, ++j;
  }
  return false;  // equal total degree and common prefix: equal monomials
}

SparsePoly::SparsePoly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

SparsePoly SparsePoly::variable(std::uint32_t id) {
  SparsePoly p;
  Monomial m;
  m.factors.emplace_back(id, 1);
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

SparsePoly SparsePoly::variable(const std::string& name) {
  return variable(var_id(name));
}

bool SparsePoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational SparsePoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::domain_error("polynomial is not constant");
  return terms_.begin()->second;
}

std::uint32_t SparsePoly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

void SparsePoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  SparsePoly out = *this;
  out += o;
  return out;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
  SparsePoly out = *this;
  out -= o;
  return out;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  SparsePoly out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

SparsePoly SparsePoly::operator*(const Rational& c) const {
  SparsePoly out;
  if (c == 0) return out;
  for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
  return out;
}

SparsePoly SparsePoly::exact_div(const SparsePoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  if (divisor.is_constant()) {
    Rational inv = 1 / divisor.constant_value();
    return *this * inv;
  }
  SparsePoly rem = *this, quot;
  const auto& lead = *divisor.terms_.rbegin();
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms_.rbegin();
    bool ok = false;
    Monomial q = rlead.first.divide(lead.first, ok);
    if (!ok) throw std::domain_error("polynomial division is not exact");
    Rational qc = rlead.second / lead.second;
    quot.add_term(q, qc);
    // rem -= (qc * q) * divisor
    for (const auto& [m, c] : divisor.terms_) rem.add_term(q * m, -qc * c);
  }
  return quot;
}

SparsePoly SparsePoly::substitute(
    const std::map<std::uint32_t, Rational>& values) const {
  SparsePoly out;
  for (const auto& [m, c] : terms_) {
    Rational coef = c;
    Monomial rest;
    for (auto [v, e] : m.factors) {
      auto it = values.find(v);
      if (it == values.end()) {
        rest.factors.emplace_back(v, e);
      } else {
        for (std::uint32_t k = 0; k < e; ++k) coef *= it->second;
      }
    }
    out.add_term(rest, coef);
  }
  return out;
}

std::string SparsePoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rational& c = it->second;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    Rational a = abs(c);
    if (a != 1 || it->first.empty()) {
      os << a.get_str();
      if (!it->first.empty()) os << "*";
    }
    if (!it->first.empty()) os << it->first.str();
  }
  return os.str();
}

}  // namespace nvs
