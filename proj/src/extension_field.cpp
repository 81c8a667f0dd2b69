#include "fano/extension_field.hpp"

#include <sstream>

namespace fano {

ExtensionField::ExtensionField(PrimeField base, UPoly modulus) {
  upoly::trim(modulus);
  const int k = upoly::degree(modulus);
  if (k < 1 || k > static_cast<int>(kMaxExtensionDegree))
    throw InvalidParameters("extension degree out of range: " + std::to_string(k));
  if (modulus.back() != 1) throw InvalidParameters("extension modulus must be monic");
  if (!upoly::is_irreducible(base, modulus))
    throw InvalidParameters("extension modulus is reducible: " + upoly::to_string(base, modulus));
  data_ = std::make_shared<const Data>(Data{base, static_cast<unsigned>(k), std::move(modulus)});
}

std::optional<std::uint64_t> ExtensionField::size() const {
  unsigned __int128 q = 1;
  for (unsigned i = 0; i < degree(); ++i) {
    q *= characteristic();
    if (q > static_cast<unsigned __int128>(UINT64_MAX)) return std::nullopt;
  }
  return static_cast<std::uint64_t>(q);
}

mpz_class ExtensionField::cardinality() const {
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), characteristic(), degree());
  return q;
}

ExtensionField::Element ExtensionField::generator() const {
  if (degree() == 1) return embed(base().neg(modulus()[0]));
  Element e;
  e.c[1] = 1;
  return e;
}

ExtensionField::Element ExtensionField::from_upoly(const UPoly& f) const {
  UPoly r = upoly::rem(base(), f, modulus());
  Element e;
  for (std::size_t i = 0; i < r.size(); ++i) e.c[i] = r[i];
  return e;
}

UPoly ExtensionField::to_upoly(const Element& a) const {
  UPoly f(a.c.begin(), a.c.begin() + degree());
  upoly::trim(f);
  return f;
}

ExtensionField::Element ExtensionField::add(const Element& a, const Element& b) const {
  Element r;
  const auto& F = base();
  for (unsigned i = 0; i < degree(); ++i) r.c[i] = F.add(a.c[i], b.c[i]);
  return r;
}

ExtensionField::Element ExtensionField::sub(const Element& a, const Element& b) const {
  Element r;
  const auto& F = base();
  for (unsigned i = 0; i < degree(); ++i) r.c[i] = F.sub(a.c[i], b.c[i]);
  return r;
}

ExtensionField::Element ExtensionField::neg(const Element& a) const {
  Element r;
  const auto& F = base();
  for (unsigned i = 0; i < degree(); ++i) r.c[i] = F.neg(a.c[i]);
  return r;
}

ExtensionField::Element ExtensionField::mul(const Element& a, const Element& b) const {
  const unsigned k = degree();
  const std::uint64_t p = characteristic();
  if (k == 1) {
    Element r;
    r.c[0] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.c[0]) * b.c[0] % p);
    return r;
  }
  std::array<std::uint64_t, 2 * kMaxExtensionDegree> acc{};
  for (unsigned i = 0; i < k; ++i) {
    if (a.c[i] == 0) continue;
    for (unsigned j = 0; j < k; ++j) acc[i + j] = (acc[i + j] + std::uint64_t{a.c[i]} * b.c[j]) % p;
  }
  // Reduce by the monic modulus: t^k = -sum m_i t^i.
  const auto& m = modulus();
  for (unsigned d = 2 * k - 2; d >= k; --d) {
    const std::uint64_t c = acc[d];
    if (c == 0) continue;
    acc[d] = 0;
    for (unsigned i = 0; i < k; ++i) acc[d - k + i] = (acc[d - k + i] + (p - m[i]) * c) % p;
  }
  Element r;
  for (unsigned i = 0; i < k; ++i) r.c[i] = static_cast<std::uint32_t>(acc[i]);
  return r;
}

ExtensionField::Element ExtensionField::inv(const Element& a) const {
  if (is_zero(a)) throw ZeroInversion();
  return from_upoly(upoly::invmod(base(), to_upoly(a), modulus()));
}

ExtensionField::Element ExtensionField::pow(Element a, const mpz_class& e) const {
  Element result = one();
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mul(result, result);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mul(result, a);
  }
  return result;
}

bool ExtensionField::in_base(const Element& a) const {
  for (unsigned i = 1; i < degree(); ++i)
    if (a.c[i] != 0) return false;
  return true;
}

ExtensionField::Element ExtensionField::sample(Rng& rng) const {
  Element e;
  for (unsigned i = 0; i < degree(); ++i) e.c[i] = base().sample(rng);
  return e;
}

ExtensionField::Element ExtensionField::element_at(std::uint64_t index) const {
  Element e;
  const std::uint64_t p = characteristic();
  for (unsigned i = 0; i < degree(); ++i) {
    e.c[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return e;
}

std::uint64_t ExtensionField::index_of(const Element& a) const {
  std::uint64_t idx = 0;
  for (unsigned i = degree(); i-- > 0;) idx = idx * characteristic() + a.c[i];
  return idx;
}

std::string ExtensionField::to_string(const Element& a) const {
  if (degree() == 1) return std::to_string(a.c[0]);
  return upoly::to_string(base(), to_upoly(a), "t");
}

}  // namespace fano
