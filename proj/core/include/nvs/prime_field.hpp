#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>

#include "nvs/rational.hpp"

namespace nvs {

// Largest prime below 2^62; modulus is configurable at runtime.
inline constexpr std::uint64_t kDefaultPrime = 4611686018427387847ULL;

// Element of Z/pZ for a process-wide prime p.  Canonical residue in [0, p).
class PFElem {
 public:
  static std::uint64_t modulus() { return modulus_; }
  static void set_modulus(std::uint64_t p);

  PFElem() : v_(0) {}
  PFElem(long v) {
    long m = static_cast<long>(modulus_);
    long r = v % m;
    if (r < 0) r += m;
    v_ = static_cast<std::uint64_t>(r);
  }
  static PFElem from_u64(std::uint64_t v) {
    PFElem e;
    e.v_ = v % modulus_;
    return e;
  }

  static PFElem from_rational(const Rational& q);

  std::uint64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  friend PFElem operator+(PFElem a, PFElem b) {
    std::uint64_t s = a.v_ + b.v_;
    if (s >= modulus_) s -= modulus_;
    return raw(s);
  }
  friend PFElem operator-(PFElem a, PFElem b) {
    std::uint64_t s = a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + modulus_ - b.v_;
    return raw(s);
  }
  friend PFElem operator*(PFElem a, PFElem b) {
    unsigned __int128 p = static_cast<unsigned __int128>(a.v_) * b.v_;
    return raw(static_cast<std::uint64_t>(p % modulus_));
  }
  friend PFElem operator/(PFElem a, PFElem b) { return a * b.inverse(); }
  PFElem operator-() const { return v_ == 0 ? *this : raw(modulus_ - v_); }
  PFElem& operator+=(PFElem o) { return *this = *this + o; }
  PFElem& operator-=(PFElem o) { return *this = *this - o; }
  PFElem& operator*=(PFElem o) { return *this = *this * o; }

  PFElem pow(std::uint64_t e) const;
  PFElem inverse() const;

  friend bool operator==(PFElem a, PFElem b) { return a.v_ == b.v_; }
  friend bool operator!=(PFElem a, PFElem b) { return a.v_ != b.v_; }

 private:
  static PFElem raw(std::uint64_t v) {
    PFElem e;
    e.v_ = v;
    return e;
  }
  static std::uint64_t modulus_;
  std::uint64_t v_;
};

std::ostream& operator<<(std::ostream&, const PFElem&);

}  // namespace nvs
