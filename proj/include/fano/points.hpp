#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fano/ideal.hpp"
#include "fano/univariate.hpp"

namespace fano {

// Geometric point found over F_p, presented in its residue field F_{p^k}.
using GeometricPoint = ProjectivePoint<ExtensionField>;

enum class PointMethod { kAuto, kEnumeration, kElimination };

struct PointSearchOptions {
  unsigned k_max = 2;
  std::uint64_t budget = kDefaultEnumerationBudget;
  std::uint64_t seed = 0;
  PointMethod method = PointMethod::kAuto;
  unsigned elimination_attempts = 12;
  GroebnerOptions groebner;
};

// Result of solving a zero-dimensional homogeneous system over F_p by a
// random linear change of coordinates into shape position:
//   x = M (1, s_1(t), ..., s_{N-1}(t), t),  mu(t) = 0.
struct ZeroDimSolution {
  std::int64_t degree = 0;  // Hilbert degree of the input ideal
  UPoly eliminant;          // minimal polynomial of t on the quotient
  std::vector<UPoly> shape;
  std::optional<Matrix<PrimeField>> change;
  bool shape_position = false;
  bool squarefree = false;
  std::vector<UPoly> factors;  // irreducible factors of the eliminant
  std::vector<std::string> attempts;
};

ZeroDimSolution solve_zero_dimensional(const Ideal<PrimeField>& ideal,
                                       const PointSearchOptions& options = {});

struct RationalPoints {
  std::vector<GeometricPoint> points;  // each geometric point once
  std::map<unsigned, std::size_t> count_by_degree;
  // Geometric points known to exist with residue degree > k_max.
  std::size_t higher_extension = 0;
  // Distinct geometric points over the algebraic closure when the
  // elimination route established it.
  std::optional<std::size_t> geometric_count;
  std::string method;
  std::vector<std::string> log;
};

// Zeros of I in P^N(F_{p^k}) for k <= k_max, deduplicated across subfields.
// Exhaustive enumeration is used when every P^N(F_{p^k}) fits the budget;
// otherwise a zero-dimensional I goes through solve_zero_dimensional and its
// points are verified by substitution. Positive-dimensional ideals beyond
// the budget raise BudgetExceeded.
RationalPoints rational_points(const Ideal<PrimeField>& ideal, const PointSearchOptions& options = {});

// Exhaustive scan of P^N(F_p): indices (in ProjectiveEnumerator order) of
// the common zeros of `polys`. Uses the batch kernel.
std::vector<std::uint64_t> scan_common_zeros(const std::vector<Polynomial<PrimeField>>& polys,
                                             const ProjectiveEnumerator<PrimeField>& points,
                                             std::uint64_t begin, std::uint64_t end);

// Points of V(I) (searched as in rational_points) where the Jacobian of the
// generators has rank < codim.
std::vector<GeometricPoint> singular_points(const Ideal<PrimeField>& ideal, std::size_t codim,
                                            const PointSearchOptions& options = {});

// One cut of V(I) (dimension dim >= 1) by dim random hyperplanes. count is
// the number of distinct verified points of the cut, or -1 when the cut was
// not zero-dimensional or could not be solved; points are in the ambient
// coordinates of I.
struct SliceSample {
  std::int64_t count = -1;
  std::vector<GeometricPoint> points;
};

SliceSample random_slice(const Ideal<PrimeField>& ideal, int dim, Rng& rng,
                         const PointSearchOptions& options = {});

struct SliceResult {
  std::int64_t mode = 0;
  std::vector<std::int64_t> counts;  // per trial
};

// Cuts V(I) (of dimension dim >= 1) with dim random hyperplanes and counts
// the distinct verified points of each slice; returns the modal count.
// Throws Inconclusive when no count reaches a strict majority.
SliceResult slice_degree(const Ideal<PrimeField>& ideal, int dim, unsigned trials, Rng& rng,
                         const PointSearchOptions& options = {});

ExtensionField canonical_field(std::uint32_t p, unsigned k);

}  // namespace fano
