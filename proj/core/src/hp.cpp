#include "nvs/hp.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

namespace nvs {

namespace {
int g_digits = 40;
mpfr_prec_t bits_for(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873626)) + 64;
}
}  // namespace

void HP::set_default_digits(int digits) { g_digits = digits; }
int HP::default_digits() { return g_digits; }
mpfr_prec_t HP::default_bits() { return bits_for(g_digits); }

std::string HP::str(int digits) const {
  if (digits < 0) digits = g_digits;
  std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
  return std::string(buf.data());
}

Rational binomial_rat(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return Rational(r);
}

HP binomial_hp(long n, long k) { return HP(binomial_rat(n, k)); }

}  // namespace nvs
