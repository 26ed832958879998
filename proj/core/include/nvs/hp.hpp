#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "nvs/rational.hpp"

namespace nvs {

// Arbitrary-precision real; every value carries the process-default
// precision fixed at construction time (default 40 significant digits).
class HP {
 public:
  static void set_default_digits(int digits);
  static int default_digits();
  static mpfr_prec_t default_bits();

  HP() { mpfr_init2(v_, default_bits()); mpfr_set_zero(v_, 1); }
  HP(long n) : HP() { mpfr_set_si(v_, n, MPFR_RNDN); }
  HP(int n) : HP(static_cast<long>(n)) {}
  HP(double d) : HP() { mpfr_set_d(v_, d, MPFR_RNDN); }
  explicit HP(const Rational& q) : HP() {
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  HP(const HP& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  HP(HP&& o) noexcept { mpfr_init2(v_, default_bits()); mpfr_swap(v_, o.v_); }
  HP& operator=(const HP& o) {
    if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  HP& operator=(HP&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~HP() { mpfr_clear(v_); }

  friend HP operator+(const HP& a, const HP& b) { HP r; mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend HP operator-(const HP& a, const HP& b) { HP r; mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend HP operator*(const HP& a, const HP& b) { HP r; mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend HP operator/(const HP& a, const HP& b) { HP r; mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  HP operator-() const { HP r; mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }
  HP& operator+=(const HP& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  HP& operator-=(const HP& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  HP& operator*=(const HP& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  HP& operator/=(const HP& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

  friend bool operator<(const HP& a, const HP& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const HP& a, const HP& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator==(const HP& a, const HP& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

  bool is_zero() const { return mpfr_zero_p(v_); }
  HP abs() const { HP r; mpfr_abs(r.v_, v_, MPFR_RNDN); return r; }
  HP pow_int(long e) const { HP r; mpfr_pow_si(r.v_, v_, e, MPFR_RNDN); return r; }
  HP log() const { HP r; mpfr_log(r.v_, v_, MPFR_RNDN); return r; }
  HP exp() const { HP r; mpfr_exp(r.v_, v_, MPFR_RNDN); return r; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  static HP euler_gamma() { HP r; mpfr_const_euler(r.v_, MPFR_RNDN); return r; }
  static HP pi() { HP r; mpfr_const_pi(r.v_, MPFR_RNDN); return r; }
  static HP riemann_zeta(unsigned long k) {
    HP r;
    mpfr_zeta_ui(r.v_, k, MPFR_RNDN);
    return r;
  }
  static HP log_of(long n) { HP r; mpfr_set_si(r.v_, n, MPFR_RNDN); mpfr_log(r.v_, r.v_, MPFR_RNDN); return r; }

  // deterministic scientific form with explicit digit count
  std::string str(int digits = -1) const;

 private:
  mpfr_t v_;
};

HP binomial_hp(long n, long k);  // C(n, k), 0 outside the Pascal triangle
Rational binomial_rat(long n, long k);

}  // namespace nvs
