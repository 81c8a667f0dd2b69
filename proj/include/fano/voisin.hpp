#pragma once

#include <cstdint>
#include <vector>

#include "fano/report.hpp"

namespace fano {

// Cubic in P^{2r+1} of the form
//   f = x_{r+1}^2 x_0 + sum_{i=1}^{r} x_{r+1+i} Q_i(x_0, ..., x_{2r+1}).
struct NormalFormCubic {
  unsigned r = 1;
  Polynomial<PrimeField> f;
  std::vector<Polynomial<PrimeField>> Q;

  std::size_t nvars() const { return 2 * r + 2; }
};

// Q_i with every coefficient random. Throws InvalidParameters unless
// 1 <= r and 2r+2 fits in the variable limit.
NormalFormCubic normal_form_cubic(unsigned r, const PrimeField& field, std::uint64_t seed);

// f rebuilt from Q_1..Q_r equals the stored f.
bool has_normal_form(const NormalFormCubic& c);

// Restriction of f to H_{r+1} = {x_{r+2} = ... = x_{2r+1} = 0}, in the
// coordinates x_0..x_{r+1}. It should be x_{r+1}^2 x_0, so V(f) meets H_{r+1}
// in P = {x_{r+1} = 0} and P' = {x_0 = 0}, two r-planes.
Polynomial<PrimeField> hyperplane_section(const NormalFormCubic& c);
bool hyperplane_section_splits(const NormalFormCubic& c);

struct NodeCertificate {
  GeometricPoint point;
  bool on_surface = false;
  bool partials_vanish = false;
  unsigned multiplicity = 0;        // 2 when the Hessian is nonzero at a singular point
  std::size_t quadratic_part_rank = 0;  // rank of the Hessian at the point
  bool is_simple_double_point = false;  // multiplicity 2 and rank 2r+1
};

NodeCertificate certify_node(const NormalFormCubic& c, const GeometricPoint& y);

struct NodeSearchOptions {
  std::uint64_t seed = 0;
  GroebnerOptions groebner;
};

// Nodes from Q_1 = ... = Q_r = 0 in the P^r of x_0..x_r, every one
// certified. Throws DegenerateInstance when that system is not
// zero-dimensional of degree 2^r with 2^r distinct points, or a
// certificate fails.
std::vector<NodeCertificate> nodes(const NormalFormCubic& c, const NodeSearchOptions& options = {});

// Exhaustive scan: points of P^{2r+1}(F_{p^k}), k <= k_max, where f and all
// its partials vanish.
RationalPoints singular_scan(const NormalFormCubic& c, unsigned k_max,
                             std::uint64_t budget = kDefaultEnumerationBudget);

// Hilbert data of the ideal of partials of f. A general cubic has
// dimension 0 and degree 2^r here: the nodes and nothing else.
HilbertData cubic_singular_locus(const NormalFormCubic& c, const GroebnerOptions& options = {});

// (f_2, f_3) with f(node moved to [1:0:...:0]) = x0 f_2 + f_3, in the
// 2r+1 coordinates x_1..x_{2r+1} of P^{2r}. The node must be defined over
// F_p (DegenerateInstance otherwise); MultiplicityMismatch unless the
// components of degree 0 and 1 vanish.
Ideal<PrimeField> sigma_y_system(const NormalFormCubic& c, const GeometricPoint& node);

struct SigmaYOptions {
  unsigned slice_trials = 3;
  unsigned max_attempts = 5;
  GroebnerOptions groebner;
};

// Dimension and degree of Sigma_y, its slice degree, and the locus where the
// 2 x (2r+1) Jacobian of (f_2, f_3) drops rank.
VarietyReport analyze_sigma_y(const Ideal<PrimeField>& ideal, unsigned r, std::uint64_t seed,
                              const SigmaYOptions& options = {});

// Whole pipeline on normal_form_cubic(seed), reseeding with seed+1, ... on
// degenerate instances or failed certificates.
VarietyReport voisin_demo(unsigned r, const PrimeField& field, std::uint64_t seed, const SigmaYOptions& options = {});

}  // namespace fano
