#pragma once

#include <cstdint>
#include <vector>

#include "fano/monomial.hpp"

namespace fano {

// Integer polynomial in t, low degree first.
using IntPoly = std::vector<std::int64_t>;

// Numerator N(t) of the Hilbert series N(t) / (1 - t)^n of k[x]/I for a
// monomial ideal I = (gens) in n variables. Computed by pivot splitting
// N(I) = N(I + (x)) + t * N(I : x) on a variable x of a non-pure-power
// generator, down to ideals with pairwise coprime generators where
// N = prod (1 - t^deg). Results are memoized per minimal generating set.
IntPoly hilbert_numerator(std::vector<Monomial> gens, std::size_t nvars);

struct HilbertData {
  // Projective dimension; -1 for the empty scheme.
  int dimension = -1;
  // Degree (normalized leading coefficient of the Hilbert polynomial);
  // 0 for the empty scheme.
  std::int64_t degree = 0;
  IntPoly numerator;
  // numerator / (1 - t)^codepth, i.e. the reduced numerator.
  IntPoly reduced_numerator;
};

HilbertData hilbert_data_from_monomials(const std::vector<Monomial>& gens, std::size_t nvars);

// dim_k (k[x]/I)_d recovered from the series numerator.
std::int64_t hilbert_function(const IntPoly& numerator, std::size_t nvars, unsigned d);

}  // namespace fano
