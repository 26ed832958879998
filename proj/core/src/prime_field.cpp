#include "nvs/prime_field.hpp"

#include <ostream>

namespace nvs {

std::uint64_t PFElem::modulus_ = kDefaultPrime;

void PFElem::set_modulus(std::uint64_t p) {
  if (p < 3) throw std::invalid_argument("modulus must be an odd prime");
  modulus_ = p;
}

PFElem PFElem::from_rational(const Rational& q) {
  mpz_class num = q.get_num(), den = q.get_den();
  mpz_class p(static_cast<unsigned long>(modulus_));
  mpz_class n = num % p;
  if (n < 0) n += p;
  mpz_class d = den % p;
  if (d == 0) throw std::domain_error("denominator not invertible mod p");
  PFElem nn(static_cast<std::uint64_t>(n.get_ui()));
  PFElem dd(static_cast<std::uint64_t>(d.get_ui()));
  return nn / dd;
}

PFElem PFElem::pow(std::uint64_t e) const {
  PFElem base = *this, acc(static_cast<std::uint64_t>(1));
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

PFElem PFElem::inverse() const {
  if (v_ == 0) throw std::domain_error("inverse of zero in prime field");
  return pow(modulus_ - 2);
}

std::ostream& operator<<(std::ostream& os, const PFElem& e) {
  return os << e.value();
}

}  // namespace nvs
