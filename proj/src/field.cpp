#include "fano/field.hpp"

namespace fano {

std::string FieldConfig::describe() const {
  switch (kind) {
    case FieldKind::kRationals:
      return "QQ";
    case FieldKind::kPrime:
      return "GF(" + std::to_string(p) + ")";
    case FieldKind::kExtension:
      return "GF(" + std::to_string(p) + "^" + std::to_string(k) + ") = GF(" + std::to_string(p) +
             ")[t]/(" + upoly::to_string(PrimeField(p), modulus) + ")";
  }
  return "?";
}

FieldConfig config_of(const PrimeField& F) {
  return FieldConfig{FieldKind::kPrime, F.characteristic(), 1, {}};
}

FieldConfig config_of(const ExtensionField& F) {
  if (F.degree() == 1) return FieldConfig{FieldKind::kPrime, F.characteristic(), 1, {}};
  return FieldConfig{FieldKind::kExtension, F.characteristic(), F.degree(), F.modulus()};
}

FieldConfig config_of(const RationalField&) { return FieldConfig{FieldKind::kRationals, 0, 1, {}}; }

ExtensionField build_extension(std::uint32_t p, unsigned k, std::uint64_t seed) {
  if (!is_prime(p) || p == 2) throw NotPrime(p);
  if (k < 1) throw InvalidParameters("extension degree must be positive");
  PrimeField F(p);
  if (k == 1) return ExtensionField(F, UPoly{0, 1});
  Rng rng(seed ^ (std::uint64_t{p} << 20) ^ k);
  for (;;) {
    UPoly m(k + 1);
    for (unsigned i = 0; i < k; ++i) m[i] = F.sample(rng);
    m[k] = 1;
    if (m[0] == 0) continue;
    if (upoly::is_irreducible(F, m)) return ExtensionField(F, std::move(m));
  }
}

}  // namespace fano
