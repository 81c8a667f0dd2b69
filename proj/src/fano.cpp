#include "fano/fano.hpp"

#include <string>

namespace fano {

namespace {

using PPoly = Polynomial<PrimeField>;

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : ",") + p;
  return s;
}

}  // namespace

void check_line_parameters(unsigned n, unsigned d, unsigned m) {
  if (n < 2 || n + 1 > kMaxVariables) throw InvalidParameters("n must lie in [2, " + std::to_string(kMaxVariables - 1) + "]");
  if (m < 1 || m > d) throw InvalidParameters("need 1 <= m <= d");
  if (d > m + n - 2)
    throw InvalidParameters("d > m+n-2: the scheme of lines would be an excess intersection");
}

PointedHypersurface random_pointed_hypersurface(unsigned n, unsigned d, unsigned m, const PrimeField& field,
                                                std::uint64_t seed) {
  check_line_parameters(n, d, m);
  Rng rng(seed);
  std::vector<std::size_t> shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = i + 1;
  PPoly f(field, n + 1);
  const auto x0 = PPoly::variable(field, n + 1, 0);
  for (unsigned i = m; i <= d; ++i) {
    auto fi = rename_variables(random_homogeneous(field, n, i, rng), n + 1, shift);
    f += x0.pow(d - i) * fi;
  }
  std::vector<PrimeField::Element> y(n + 1, 0);
  y[0] = 1;
  return {std::move(f), ProjectivePoint<PrimeField>(field, std::move(y)), m};
}

Ideal<PrimeField> SigmaSystem::ideal() const {
  return Ideal<PrimeField>(generators.front().field(), generators.front().nvars(), generators);
}

SigmaSystem sigma_system(const PointedHypersurface& ph) {
  const auto& field = ph.f.field();
  const std::size_t n = ph.n();
  if (!ph.f.is_homogeneous()) throw InvalidParameters("hypersurface equation must be homogeneous");
  const auto moved = linear_substitute(ph.f, move_to_base_point(ph.y));
  std::vector<PPoly> images{PPoly::constant(field, n, field.one())};
  for (std::size_t i = 0; i < n; ++i) images.push_back(PPoly::variable(field, n, i));
  const auto parts = homogeneous_components(compose(moved, images));
  const unsigned lowest = parts.begin()->first;
  if (lowest != ph.m)
    throw MultiplicityMismatch("claimed multiplicity " + std::to_string(ph.m) + ", lowest component has degree " +
                               std::to_string(lowest));
  SigmaSystem sys;
  sys.m = ph.m;
  sys.d = ph.d();
  for (unsigned i = sys.m; i <= sys.d; ++i) {
    auto it = parts.find(i);
    sys.generators.push_back(it == parts.end() ? PPoly(field, n) : it->second);
  }
  sys.expected_dim = static_cast<int>(sys.m + n) - 2 - static_cast<int>(sys.d);
  if (sys.expected_dim == 0) sys.expected_count = expected_count(sys.d, sys.m);
  return sys;
}

std::uint64_t expected_count(unsigned d, unsigned m) {
  std::uint64_t c = 1;
  for (unsigned i = m; i <= d; ++i) c *= i;
  return c;
}

VarietyReport analyze_sigma(const PointedHypersurface& ph, std::uint64_t seed, const SigmaOptions& options) {
  const auto sys = sigma_system(ph);
  const auto ideal = sys.ideal();
  const std::size_t codim = sys.d - sys.m + 1;
  VarietyReport report;
  report.pipeline = "lines-through";
  report.parameters = {{"n", std::to_string(ph.n())},
                       {"d", std::to_string(sys.d)},
                       {"m", std::to_string(sys.m)},
                       {"point", join(ph.y.to_strings())},
                       {"seed", std::to_string(seed)}};
  std::vector<std::string> names;  // coordinates of the hyperplane x0 = 0
  for (std::size_t i = 1; i <= ph.n(); ++i) names.push_back("x" + std::to_string(i));
  describe_ideal(report, ideal, options.groebner, names);
  report.flags.push_back("uniqueness of the singular point is not enforced");
  report.check("dimension", sys.expected_dim, report.dimension);
  report.check("codimension", static_cast<std::int64_t>(codim),
               static_cast<std::int64_t>(ideal.ambient_dimension()) - report.dimension);
  report.check("complete_intersection", report.complete_intersection);

  const auto jac = jacobian(ideal.generators());
  PointSearchOptions search;
  search.k_max = options.k_max;
  search.budget = options.budget;
  search.seed = seed;
  search.groebner = options.groebner;

  if (sys.expected_count && report.dimension == 0) {
    report.check("degree", static_cast<std::int64_t>(*sys.expected_count), report.degree);
    const auto found = rational_points(ideal, search);
    report.point_method = found.method;
    for (const auto& line : found.log) report.attempts.push_back("solver " + line);
    std::size_t reduced = 0;
    for (const auto& y : found.points) {
      report.solutions.push_back(record_point(y, jac, codim));
      reduced += report.solutions.back().reduced;
    }
    report.smooth = reduced == found.points.size();
    const std::size_t geometric = found.geometric_count.value_or(found.points.size() + found.higher_extension);
    if (found.higher_extension > 0)
      report.flags.push_back("points in higher extension: " + std::to_string(found.higher_extension));
    report.check("geometric_points", static_cast<std::int64_t>(*sys.expected_count),
                 static_cast<std::int64_t>(geometric));
    report.check("listed_points_reduced", report.smooth);
  } else if (report.dimension > 0) {
    report.check("degree_bezout", ideal.bezout_bound(), report.degree);
    Rng rng(seed ^ 0x51ce5u);
    try {
      const auto slices = slice_degree(ideal, report.dimension, options.slice_trials, rng, search);
      report.check("slice_degree", report.degree, slices.mode);
    } catch (const Inconclusive& e) {
      report.check("slice_degree", std::to_string(report.degree), "inconclusive");
    }
    std::size_t sampled = 0, full = 0;
    for (unsigned trial = 0; trial < 4 * options.smoothness_samples && sampled < options.smoothness_samples;
         ++trial) {
      for (const auto& y : random_slice(ideal, report.dimension, rng, search).points) {
        if (sampled == options.smoothness_samples) break;
        ++sampled;
        full += jacobian_rank_at(jac, y) == codim;
      }
    }
    report.smooth = sampled > 0 && full == sampled;
    report.extra["smoothness_samples"] = std::to_string(sampled);
    report.check("sampled_points_smooth", report.smooth);
  } else {
    report.smooth = true;
  }
  return report;
}

VarietyReport lines_through_random(unsigned n, unsigned d, unsigned m, const PrimeField& field,
                                   std::uint64_t seed, const SigmaOptions& options) {
  check_line_parameters(n, d, m);
  std::vector<std::string> log;
  VarietyReport report;
  for (unsigned attempt = 0; attempt < options.max_attempts; ++attempt) {
    const std::uint64_t s = seed + attempt;
    try {
      report = analyze_sigma(random_pointed_hypersurface(n, d, m, field, s), s, options);
      if (report.all_ok()) break;
      log.push_back("seed " + std::to_string(s) + ": certificate failed");
    } catch (const DegenerateInstance& e) {
      log.push_back("seed " + std::to_string(s) + ": " + e.what());
      report = VarietyReport{};
      report.pipeline = "lines-through";
      report.check("nondegenerate_instance", false);
    }
  }
  report.attempts.insert(report.attempts.begin(), log.begin(), log.end());
  report.parameters["requested_seed"] = std::to_string(seed);
  return report;
}

}  // namespace fano
