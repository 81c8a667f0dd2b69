#include "fano/projective.hpp"

namespace fano {

unsigned residue_degree(const ProjectivePoint<ExtensionField>& y) {
  const unsigned k = y.field().degree();
  auto z = y;
  for (unsigned j = 1; j < k; ++j) {
    z = frobenius(z);
    if (k % j == 0 && z == y) return j;
  }
  return k;
}

std::optional<std::uint64_t> projective_point_count(std::uint64_t q, std::size_t n) {
  unsigned __int128 total = 0, power = 1;
  for (std::size_t i = 0; i <= n; ++i) {
    total += power;
    if (total > UINT64_MAX) return std::nullopt;
    if (i == n) break;
    power *= q;
    if (power > UINT64_MAX) return std::nullopt;
  }
  return static_cast<std::uint64_t>(total);
}

}  // namespace fano
