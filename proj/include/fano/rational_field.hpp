#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "fano/errors.hpp"
#include "fano/prime_field.hpp"

namespace fano {

// Q with arbitrary-precision reduced fractions (GMP).
class RationalField {
 public:
  using Element = mpq_class;

  // Bound for sample(): uniform integers in [-bound, bound].
  explicit RationalField(std::uint32_t sample_bound = 50) : bound_(sample_bound) {}

  std::uint32_t characteristic() const { return 0; }
  bool is_finite() const { return false; }
  std::uint32_t sample_bound() const { return bound_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(std::int64_t v) const { return Element(static_cast<long>(v)); }
  Element from_integer(const mpz_class& v) const { return Element(v); }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const {
    if (a == 0) throw ZeroInversion();
    return 1 / a;
  }
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  Element sample(Rng& rng) const {
    const auto span = 2 * static_cast<std::uint64_t>(bound_) + 1;
    return from_int(static_cast<std::int64_t>(uniform_below(rng, span)) - bound_);
  }

  std::string to_string(const Element& a) const { return a.get_str(); }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }

 private:
  std::uint32_t bound_;
};

}  // namespace fano
