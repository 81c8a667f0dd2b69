#include "fano/prime_field.hpp"

#include <limits>

namespace fano {

std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  if (n == 0) throw InvalidParameters("uniform_below: empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  for (;;) {
    std::uint64_t v = rng();
    if (v < limit) return v % n;
  }
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 3 || p >= (1u << 31) || !is_prime(p)) throw NotPrime(p);
}

PrimeField::Element PrimeField::from_integer(const mpz_class& v) const {
  mpz_class r = v % p_;
  if (r < 0) r += p_;
  return static_cast<Element>(r.get_ui());
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw ZeroInversion();
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return from_int(t);
}

PrimeField::Element PrimeField::pow(Element a, std::uint64_t e) const {
  Element result = 1;
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

}  // namespace fano
