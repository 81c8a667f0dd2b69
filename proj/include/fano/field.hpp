#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <vector>

#include "fano/extension_field.hpp"
#include "fano/prime_field.hpp"
#include "fano/rational_field.hpp"
#include "fano/univariate.hpp"

namespace fano {

inline constexpr std::uint32_t kDefaultPrime = 10007;

template <class F>
concept Field = requires(const F& f, const typename F::Element& a, std::int64_t n, Rng& rng) {
  { f.zero() } -> std::same_as<typename F::Element>;
  { f.one() } -> std::same_as<typename F::Element>;
  { f.from_int(n) } -> std::same_as<typename F::Element>;
  { f.add(a, a) } -> std::same_as<typename F::Element>;
  { f.sub(a, a) } -> std::same_as<typename F::Element>;
  { f.neg(a) } -> std::same_as<typename F::Element>;
  { f.mul(a, a) } -> std::same_as<typename F::Element>;
  { f.inv(a) } -> std::same_as<typename F::Element>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.equal(a, a) } -> std::same_as<bool>;
  { f.sample(rng) } -> std::same_as<typename F::Element>;
  { f.to_string(a) } -> std::same_as<std::string>;
  { f.characteristic() } -> std::convertible_to<std::uint32_t>;
};

template <class F>
concept FiniteField = Field<F> && requires(const F& f, const typename F::Element& a) {
  { f.element_at(std::uint64_t{}) } -> std::same_as<typename F::Element>;
  { f.index_of(a) } -> std::same_as<std::uint64_t>;
  { f.degree() } -> std::convertible_to<unsigned>;
};

enum class FieldKind { kRationals, kPrime, kExtension };

// Plain descriptor of a field, used for reports and the command line.
struct FieldConfig {
  FieldKind kind = FieldKind::kPrime;
  std::uint32_t p = kDefaultPrime;
  unsigned k = 1;
  UPoly modulus;  // extension only, low-to-high

  std::string describe() const;
};

FieldConfig config_of(const PrimeField& F);
FieldConfig config_of(const ExtensionField& F);
FieldConfig config_of(const RationalField& F);

// Degree-k extension of F_p with a modulus found by seeded random search
// plus an irreducibility test. k = 1 yields F_p presented as F_p[t]/(t).
ExtensionField build_extension(std::uint32_t p, unsigned k, std::uint64_t seed = 0);

// Unchecked power for small exponents, usable with any field.
template <Field F>
typename F::Element power(const F& field, typename F::Element a, std::uint64_t e) {
  auto result = field.one();
  while (e) {
    if (e & 1) result = field.mul(result, a);
    a = field.mul(a, a);
    e >>= 1;
  }
  return result;
}

}  // namespace fano
