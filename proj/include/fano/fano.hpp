#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fano/report.hpp"

namespace fano {

// Hypersurface V(f) in P^n with a claimed point y of multiplicity m.
struct PointedHypersurface {
  Polynomial<PrimeField> f;
  ProjectivePoint<PrimeField> y;
  unsigned m = 1;

  std::size_t n() const { return f.nvars() - 1; }
  unsigned d() const { return static_cast<unsigned>(f.degree()); }
};

// Validates 1 <= m <= d <= m+n-2. Larger d (excess intersection) is rejected.
void check_line_parameters(unsigned n, unsigned d, unsigned m);

// f = sum_{i=m}^{d} x0^{d-i} f_i(x1..xn) with every coefficient of every f_i
// random; y = [1:0:...:0].
PointedHypersurface random_pointed_hypersurface(unsigned n, unsigned d, unsigned m, const PrimeField& field,
                                                std::uint64_t seed);

// Lines through y, as the subscheme of the hyperplane H = P^{n-1} cut out
// by the components f_m..f_d of f(1, x1..xn) (after moving y to [1:0:...:0]).
struct SigmaSystem {
  std::vector<Polynomial<PrimeField>> generators;  // f_m..f_d, degree i at index i-m
  unsigned m = 1;
  unsigned d = 1;
  int expected_dim = 0;  // m+n-2-d
  std::optional<std::uint64_t> expected_count;  // d!/(m-1)! when expected_dim is 0

  Ideal<PrimeField> ideal() const;
};

SigmaSystem sigma_system(const PointedHypersurface& ph);

// prod_{i=m}^{d} i
std::uint64_t expected_count(unsigned d, unsigned m);

struct SigmaOptions {
  unsigned k_max = 6;
  std::uint64_t budget = kDefaultEnumerationBudget;
  unsigned slice_trials = 3;
  unsigned smoothness_samples = 50;
  unsigned max_attempts = 5;
  GroebnerOptions groebner;
};

// Dimension, degree and complete-intersection checks for Sigma; listed and
// certified solutions in the zero-dimensional case; slice degree and
// Jacobian rank at sliced sample points otherwise.
VarietyReport analyze_sigma(const PointedHypersurface& ph, std::uint64_t seed, const SigmaOptions& options = {});

// analyze_sigma on random_pointed_hypersurface(seed), resampling with
// seed+1, seed+2, ... while a certificate fails (max_attempts in total).
VarietyReport lines_through_random(unsigned n, unsigned d, unsigned m, const PrimeField& field,
                                   std::uint64_t seed, const SigmaOptions& options = {});

}  // namespace fano
