#include "fano/voisin.hpp"

#include <algorithm>
#include <string>

namespace fano {

namespace {

using PPoly = Polynomial<PrimeField>;

std::vector<std::string> names_from(std::size_t first, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back("x" + std::to_string(first + i));
  return out;
}

Json certificate_json(const NodeCertificate& c) {
  Json j;
  j["point"] = c.point.to_strings();
  j["residue_degree"] = std::to_string(residue_degree(c.point));
  j["on_surface"] = c.on_surface;
  j["partials_vanish"] = c.partials_vanish;
  j["multiplicity"] = std::to_string(c.multiplicity);
  j["quadratic_part_rank"] = std::to_string(c.quadratic_part_rank);
  j["is_simple_double_point"] = c.is_simple_double_point;
  return j;
}

}  // namespace

NormalFormCubic normal_form_cubic(unsigned r, const PrimeField& field, std::uint64_t seed) {
  if (r < 1 || 2 * r + 2 > kMaxVariables) throw InvalidParameters("r must lie in [1, 11]");
  if (field.characteristic() <= 3) throw InvalidParameters("characteristic must exceed 3");
  Rng rng(seed);
  const std::size_t n = 2 * r + 2;
  NormalFormCubic c{r, PPoly(field, n), {}};
  for (unsigned i = 1; i <= r; ++i) c.Q.push_back(random_homogeneous(field, n, 2, rng));
  c.f = PPoly::variable(field, n, r + 1).pow(2) * PPoly::variable(field, n, 0);
  for (unsigned i = 1; i <= r; ++i) c.f += PPoly::variable(field, n, r + 1 + i) * c.Q[i - 1];
  return c;
}

bool has_normal_form(const NormalFormCubic& c) {
  const auto& field = c.f.field();
  const std::size_t n = c.nvars();
  if (c.Q.size() != c.r || c.f.nvars() != n) return false;
  auto g = PPoly::variable(field, n, c.r + 1).pow(2) * PPoly::variable(field, n, 0);
  for (unsigned i = 1; i <= c.r; ++i) {
    if (c.Q[i - 1].is_zero() || !c.Q[i - 1].is_homogeneous() || c.Q[i - 1].degree() != 2) return false;
    g += PPoly::variable(field, n, c.r + 1 + i) * c.Q[i - 1];
  }
  return g == c.f;
}

PPoly hyperplane_section(const NormalFormCubic& c) {
  const auto& field = c.f.field();
  const std::size_t m = c.r + 2;
  std::vector<PPoly> images;
  for (std::size_t j = 0; j < c.nvars(); ++j)
    images.push_back(j < m ? PPoly::variable(field, m, j) : PPoly(field, m));
  return compose(c.f, images);
}

bool hyperplane_section_splits(const NormalFormCubic& c) {
  const auto& field = c.f.field();
  const std::size_t m = c.r + 2;
  const auto x0 = PPoly::variable(field, m, 0);
  const auto xr1 = PPoly::variable(field, m, c.r + 1);
  return hyperplane_section(c) == xr1 * xr1 * x0;
}

NodeCertificate certify_node(const NormalFormCubic& c, const GeometricPoint& y) {
  const auto& E = y.field();
  NodeCertificate cert{y};
  cert.on_surface = E.is_zero(evaluate_in(c.f, E, y.coords()));
  const auto grad = gradient(c.f);
  cert.partials_vanish = std::all_of(grad.begin(), grad.end(),
                                     [&](const PPoly& g) { return E.is_zero(evaluate_in(g, E, y.coords())); });
  const auto hess = jacobian(grad);
  cert.quadratic_part_rank = jacobian_rank_at(hess, y);
  cert.multiplicity = !cert.on_surface ? 0 : !cert.partials_vanish ? 1 : cert.quadratic_part_rank > 0 ? 2 : 3;
  cert.is_simple_double_point = cert.multiplicity == 2 && cert.quadratic_part_rank == 2 * c.r + 1;
  return cert;
}

std::vector<NodeCertificate> nodes(const NormalFormCubic& c, const NodeSearchOptions& options) {
  const auto& field = c.f.field();
  const std::size_t m = c.r + 1;
  std::vector<PPoly> images;
  for (std::size_t j = 0; j < c.nvars(); ++j)
    images.push_back(j < m ? PPoly::variable(field, m, j) : PPoly(field, m));
  std::vector<PPoly> restricted;
  for (const auto& q : c.Q) restricted.push_back(compose(q, images));
  const Ideal<PrimeField> system(field, m, restricted);
  const std::int64_t expected = std::int64_t{1} << c.r;
  const auto hd = hilbert_data(system, options.groebner);
  if (hd.dimension != 0 || hd.degree != expected)
    throw DegenerateInstance("restricted quadrics: dimension " + std::to_string(hd.dimension) + ", degree " +
                             std::to_string(hd.degree));
  PointSearchOptions search;
  search.k_max = kMaxExtensionDegree;
  search.seed = options.seed;
  search.groebner = options.groebner;
  const auto found = rational_points(system, search);
  if (found.points.size() != static_cast<std::size_t>(expected))
    throw DegenerateInstance("restricted quadrics have " + std::to_string(found.points.size()) +
                             " distinct points");
  std::vector<NodeCertificate> out;
  for (const auto& z : found.points) {
    const auto& E = z.field();
    auto coords = z.coords();
    coords.resize(c.nvars(), E.zero());
    out.push_back(certify_node(c, GeometricPoint(E, std::move(coords))));
    if (!out.back().is_simple_double_point) throw DegenerateInstance("a node failed its certificate");
  }
  return out;
}

RationalPoints singular_scan(const NormalFormCubic& c, unsigned k_max, std::uint64_t budget) {
  auto gens = gradient(c.f);
  gens.push_back(c.f);
  PointSearchOptions search;
  search.k_max = k_max;
  search.budget = budget;
  search.method = PointMethod::kEnumeration;
  return rational_points(Ideal<PrimeField>(c.f.field(), c.nvars(), gens), search);
}

Ideal<PrimeField> sigma_y_system(const NormalFormCubic& c, const GeometricPoint& node) {
  const auto& field = c.f.field();
  const auto& E = node.field();
  std::vector<PrimeField::Element> coords;
  for (const auto& a : node.coords()) {
    if (!E.in_base(a)) throw DegenerateInstance("node is not defined over the prime field");
    coords.push_back(a.c[0]);
  }
  const ProjectivePoint<PrimeField> y(field, std::move(coords));
  const std::size_t n = c.nvars() - 1;
  const auto moved = linear_substitute(c.f, move_to_base_point(y));
  std::vector<PPoly> images{PPoly::constant(field, n, field.one())};
  for (std::size_t i = 0; i < n; ++i) images.push_back(PPoly::variable(field, n, i));
  const auto parts = homogeneous_components(compose(moved, images));
  if (parts.count(0) || parts.count(1) || !parts.count(2) || !parts.count(3))
    throw MultiplicityMismatch("point is not a double point of the cubic");
  return Ideal<PrimeField>(field, n, {parts.at(2), parts.at(3)});
}

VarietyReport analyze_sigma_y(const Ideal<PrimeField>& ideal, unsigned r, std::uint64_t seed,
                              const SigmaYOptions& options) {
  if (r < 1) throw InvalidParameters("r must be positive");
  VarietyReport report;
  report.pipeline = "sigma-y";
  report.parameters = {{"r", std::to_string(r)}, {"seed", std::to_string(seed)}};
  describe_ideal(report, ideal, options.groebner, names_from(1, ideal.nvars()));
  std::vector<std::int64_t> degrees;
  for (const auto& g : ideal.generators()) degrees.push_back(g.degree());
  report.check("generator_degrees", "2,3",
               degrees.size() == 2 ? std::to_string(degrees[0]) + "," + std::to_string(degrees[1]) : "?");
  const int expected_dim = 2 * static_cast<int>(r) - 2;
  report.check("dimension", expected_dim, report.dimension);
  report.check("degree", 6, report.degree);
  report.check("complete_intersection", report.complete_intersection);

  PointSearchOptions search;
  search.k_max = kMaxExtensionDegree;
  search.seed = seed;
  search.groebner = options.groebner;
  Rng rng(seed ^ 0x5167u);
  if (report.dimension >= 1) {
    try {
      const auto slices = slice_degree(ideal, report.dimension, options.slice_trials, rng, search);
      report.check("slice_degree", 6, slices.mode);
    } catch (const Inconclusive&) {
      report.check("slice_degree", "6", "inconclusive");
    }
  }

  const auto drop = rank_drop_ideal(ideal, 2);
  const auto hd = hilbert_data(drop, options.groebner);
  Json sing;
  sing["dimension"] = hd.dimension < 0 ? std::string("empty") : std::to_string(hd.dimension);
  sing["degree"] = std::to_string(hd.degree);
  sing["generators"] = std::to_string(drop.generators().size());
  report.extra["singular_locus"] = sing;
  report.smooth = hd.dimension < 0;
  // r = 1 carries no claim: there Sigma_y is non-reduced along the line to
  // the other node, which the report shows as one singular point.
  if (r == 2) {
    report.check("singular_locus_dimension", 0, hd.dimension);
    report.check("singular_locus_degree", 3, hd.degree);
    if (hd.dimension == 0) {
      const auto found = rational_points(drop, search);
      const auto jac = jacobian(drop.generators());
      bool reduced = true;
      for (const auto& y : found.points) {
        report.singular_points.push_back(record_point(y, jac, ideal.ambient_dimension()));
        reduced = reduced && report.singular_points.back().reduced;
      }
      report.check("singular_points", 3, static_cast<std::int64_t>(found.points.size()));
      report.check("singular_points_reduced", reduced);
    }
  } else if (r >= 3) {
    report.check("singular_locus_dimension_at_most_2r-4", hd.dimension <= expected_dim - 2);
  }
  return report;
}

HilbertData cubic_singular_locus(const NormalFormCubic& c, const GroebnerOptions& options) {
  return hilbert_data(Ideal<PrimeField>(c.f.field(), c.nvars(), gradient(c.f)), options);
}

VarietyReport voisin_demo(unsigned r, const PrimeField& field, std::uint64_t seed, const SigmaYOptions& options) {
  if (r < 1 || 2 * r + 2 > kMaxVariables) throw InvalidParameters("r must lie in [1, 11]");
  std::vector<std::string> log;
  VarietyReport report;
  for (unsigned attempt = 0; attempt < options.max_attempts; ++attempt) {
    const std::uint64_t s = seed + attempt;
    try {
      const auto cubic = normal_form_cubic(r, field, s);
      const auto certs = nodes(cubic, {s, options.groebner});
      auto rational = std::find_if(certs.begin(), certs.end(),
                                   [](const NodeCertificate& c) { return residue_degree(c.point) == 1; });
      if (rational == certs.end()) throw DegenerateInstance("no node is defined over the prime field");
      report = analyze_sigma_y(sigma_y_system(cubic, rational->point), r, s, options);
      report.pipeline = "voisin-demo";
      report.extra["cubic"] = to_string(cubic.f);
      report.extra["node"] = rational->point.to_strings();
      for (const auto& c : certs) report.certificates.push_back(certificate_json(c));
      report.check("normal_form", has_normal_form(cubic));
      report.check("hyperplane_section_is_two_planes", hyperplane_section_splits(cubic));
      report.check("nodes", std::int64_t{1} << r, static_cast<std::int64_t>(certs.size()));
      // Every singular point of V(f) is a node: the partials cut out a
      // zero-dimensional scheme of degree 2^r, which the 2^r distinct
      // certified nodes (each reduced there) exhaust.
      const auto jac_hd = cubic_singular_locus(cubic, options.groebner);
      report.check("cubic_singular_locus_dimension", 0, jac_hd.dimension);
      report.check("cubic_singular_locus_degree", std::int64_t{1} << r, jac_hd.degree);
      report.check("nodes_simple", std::all_of(certs.begin(), certs.end(), [](const NodeCertificate& c) {
                     return c.is_simple_double_point;
                   }));
      if (report.all_ok()) break;
      log.push_back("seed " + std::to_string(s) + ": certificate failed");
    } catch (const DegenerateInstance& e) {
      log.push_back("seed " + std::to_string(s) + ": " + e.what());
      report = VarietyReport{};
      report.pipeline = "voisin-demo";
      report.check("nondegenerate_instance", false);
    }
  }
  report.attempts.insert(report.attempts.begin(), log.begin(), log.end());
  report.parameters["requested_seed"] = std::to_string(seed);
  return report;
}

}  // namespace fano
