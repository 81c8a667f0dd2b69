#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include <gmpxx.h>

#include "fano/errors.hpp"

namespace fano {

using Rng = std::mt19937_64;

// Unbiased draw from [0, n). Rejection sampling keeps the stream identical
// across standard libraries, unlike std::uniform_int_distribution.
std::uint64_t uniform_below(Rng& rng, std::uint64_t n);

bool is_prime(std::uint64_t n);

// Z/pZ for an odd prime p < 2^31. Elements are least residues.
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  std::uint64_t size() const { return p_; }
  unsigned degree() const { return 1; }
  bool is_finite() const { return true; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Element>(r < 0 ? r + p_ : r);
  }
  Element from_integer(const mpz_class& v) const;

  Element add(Element a, Element b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t e) const;

  bool is_zero(Element a) const { return a == 0; }
  bool equal(Element a, Element b) const { return a == b; }

  Element sample(Rng& rng) const { return static_cast<Element>(uniform_below(rng, p_)); }

  // Enumeration order of elements is the residue order.
  Element element_at(std::uint64_t index) const { return static_cast<Element>(index); }
  std::uint64_t index_of(Element a) const { return a; }

  std::string to_string(Element a) const { return std::to_string(a); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace fano
