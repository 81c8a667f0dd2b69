#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "fano/prime_field.hpp"
#include "fano/univariate.hpp"

namespace fano {

inline constexpr unsigned kMaxExtensionDegree = 32;

// F_p[t]/(m) for a monic irreducible m of degree k <= kMaxExtensionDegree.
// k = 1 is allowed and behaves as F_p.
class ExtensionField {
 public:
  struct Element {
    std::array<std::uint32_t, kMaxExtensionDegree> c{};
    friend bool operator==(const Element&, const Element&) = default;
    friend auto operator<=>(const Element&, const Element&) = default;
  };

  // `modulus` is low-to-high, monic, irreducible; checked.
  ExtensionField(PrimeField base, UPoly modulus);

  const PrimeField& base() const { return data_->base; }
  std::uint32_t characteristic() const { return data_->base.characteristic(); }
  unsigned degree() const { return data_->k; }
  const UPoly& modulus() const { return data_->modulus; }
  bool is_finite() const { return true; }
  // q = p^k, or nullopt when it does not fit in 64 bits.
  std::optional<std::uint64_t> size() const;
  mpz_class cardinality() const;

  Element zero() const { return {}; }
  Element one() const {
    Element e;
    e.c[0] = 1;
    return e;
  }
  Element generator() const;  // class of t
  Element embed(PrimeField::Element a) const {
    Element e;
    e.c[0] = a;
    return e;
  }
  Element from_int(std::int64_t v) const { return embed(base().from_int(v)); }
  Element from_integer(const mpz_class& v) const { return embed(base().from_integer(v)); }
  Element from_upoly(const UPoly& f) const;
  UPoly to_upoly(const Element& a) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element inv(const Element& a) const;
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }
  Element pow(Element a, const mpz_class& e) const;
  Element frobenius(const Element& a) const { return pow(a, mpz_class(characteristic())); }

  bool is_zero(const Element& a) const { return a == Element{}; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  // True when a lies in F_p (all higher coefficients vanish).
  bool in_base(const Element& a) const;

  Element sample(Rng& rng) const;

  // Base-p digits of index become the coefficients; index < q.
  Element element_at(std::uint64_t index) const;
  std::uint64_t index_of(const Element& a) const;

  std::string to_string(const Element& a) const;

  friend bool operator==(const ExtensionField& a, const ExtensionField& b) {
    return a.data_ == b.data_ ||
           (a.data_->base == b.data_->base && a.data_->modulus == b.data_->modulus);
  }

 private:
  struct Data {
    PrimeField base;
    unsigned k;
    UPoly modulus;
  };
  std::shared_ptr<const Data> data_;
};

}  // namespace fano
