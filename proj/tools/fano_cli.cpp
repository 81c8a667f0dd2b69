#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fano/fano.hpp"
#include "fano/voisin.hpp"

namespace {

using namespace fano;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitVerification = 3;
constexpr int kExitBudget = 4;

struct RunConfig {
  std::uint64_t seed = 0;
  std::uint32_t prime = kDefaultPrime;
  unsigned k_max = 6;
  unsigned trials = 3;
  std::uint64_t budget = kDefaultEnumerationBudget;
  std::string json_path;
  bool quiet = false;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

struct PolyFile {
  std::vector<std::string> vars;
  std::vector<Polynomial<PrimeField>> polys;
};

PolyFile read_polys(const std::string& path, const std::string& vars, const PrimeField& field) {
  std::ifstream in(path);
  if (!in) throw InvalidParameters("cannot read " + path);
  std::vector<std::string> lines;
  std::string line, all;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(line);
    all += line + "\n";
  }
  if (lines.empty()) throw InvalidParameters(path + " holds no polynomial");
  PolyFile out;
  if (!vars.empty()) {
    out.vars = split(vars, ',');
  } else {
    std::size_t n = 0;
    static const std::regex var_re(R"(x(\d+))");
    for (auto it = std::sregex_iterator(all.begin(), all.end(), var_re); it != std::sregex_iterator(); ++it)
      n = std::max<std::size_t>(n, std::stoul((*it)[1]) + 1);
    out.vars = default_variable_names(std::max<std::size_t>(n, 2));
  }
  for (const auto& l : lines) out.polys.push_back(parse(l, out.vars, field));
  return out;
}

void write_atomic(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidParameters("cannot write " + tmp);
    out << text;
    if (!out.flush()) throw InvalidParameters("cannot write " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

int emit(const VarietyReport& report, const RunConfig& cfg) {
  const std::string text = report.to_json().dump(2) + "\n";
  if (cfg.json_path.empty()) {
    std::cout << text;
  } else {
    write_atomic(cfg.json_path, text);
    if (!cfg.quiet) {
      std::cout << report.pipeline << ": dimension " << (report.dimension < 0 ? "empty" : std::to_string(report.dimension))
                << ", degree " << report.degree << "\n";
      for (const auto& c : report.checks)
        std::cout << "  " << (c.ok ? "ok   " : "FAIL ") << c.name << ": predicted " << c.predicted << ", computed "
                  << c.computed << "\n";
    }
  }
  return report.all_ok() ? kExitOk : kExitVerification;
}

int run_lines_through(const RunConfig& cfg, const std::vector<unsigned>& random, const std::string& poly,
                      const std::string& point, int mult, const std::string& vars) {
  const PrimeField field(cfg.prime);
  SigmaOptions opts;
  opts.k_max = cfg.k_max;
  opts.budget = cfg.budget;
  opts.slice_trials = cfg.trials;
  if (!random.empty()) {
    if (!poly.empty()) throw InvalidParameters("--random excludes --poly");
    return emit(lines_through_random(random[0], random[1], random[2], field, cfg.seed, opts), cfg);
  }
  if (poly.empty() || point.empty()) throw InvalidParameters("need --random n d m or --poly FILE --point P");
  auto file = read_polys(poly, vars, field);
  if (file.polys.size() != 1) throw InvalidParameters("--poly file must hold exactly one polynomial");
  const auto& f = file.polys.front();
  std::vector<PrimeField::Element> coords;
  for (const auto& c : split(point, ',')) coords.push_back(field.from_integer(mpz_class(c)));
  if (coords.size() != f.nvars()) throw InvalidParameters("point has the wrong number of coordinates");
  PointedHypersurface ph{f, ProjectivePoint<PrimeField>(field, coords), 1};
  if (mult > 0) {
    ph.m = static_cast<unsigned>(mult);
  } else {
    // Lowest homogeneous degree after moving the point to [1:0:...:0].
    const auto moved = linear_substitute(f, move_to_base_point(ph.y));
    const std::size_t n = f.nvars() - 1;
    std::vector<Polynomial<PrimeField>> images{Polynomial<PrimeField>::constant(field, n, field.one())};
    for (std::size_t i = 0; i < n; ++i) images.push_back(Polynomial<PrimeField>::variable(field, n, i));
    ph.m = homogeneous_components(compose(moved, images)).begin()->first;
    if (ph.m == 0) throw InvalidParameters("the point does not lie on the hypersurface");
  }
  check_line_parameters(static_cast<unsigned>(ph.n()), ph.d(), ph.m);
  return emit(analyze_sigma(ph, cfg.seed, opts), cfg);
}

int run_voisin(const RunConfig& cfg, unsigned r) {
  SigmaYOptions opts;
  opts.slice_trials = cfg.trials;
  return emit(voisin_demo(r, PrimeField(cfg.prime), cfg.seed, opts), cfg);
}

int run_groebner(const RunConfig& cfg, const std::string& poly, const std::string& vars, bool lex) {
  const PrimeField field(cfg.prime);
  auto file = read_polys(poly, vars, field);
  const auto order = lex ? MonomialOrder::lex() : MonomialOrder::grevlex();
  Ideal<PrimeField> ideal(field, file.vars.size(), file.polys, order);
  VarietyReport report;
  report.pipeline = "groebner";
  report.parameters = {{"order", lex ? "lex" : "grevlex"}};
  const auto basis = buchberger(ideal);
  std::vector<std::string> gb;
  for (const auto& g : basis.generators()) gb.push_back(to_string(g, file.vars));
  report.extra["basis"] = gb;
  report.check("is_groebner_basis", is_groebner_basis(basis.generators()));
  bool reduces = true;
  for (const auto& g : ideal.generators()) reduces = reduces && ideal.contains(g, basis.generators());
  report.check("generators_reduce_to_zero", reduces);
  if (ideal.is_homogeneous()) {
    describe_ideal(report, ideal, {}, file.vars);
    const auto hd = hilbert_data(ideal);
    report.extra["hilbert_numerator"] = Json::array();
    for (auto c : hd.numerator) report.extra["hilbert_numerator"].push_back(std::to_string(c));
  } else {
    report.field = config_of(field).describe();
    report.ambient = file.vars.size() - 1;
    for (const auto& g : ideal.generators()) report.generators.push_back(to_string(g, file.vars));
    report.flags.push_back("inhomogeneous input: no projective dimension");
  }
  return emit(report, cfg);
}

int run_sing_locus(const RunConfig& cfg, const std::string& poly, const std::string& vars) {
  const PrimeField field(cfg.prime);
  auto file = read_polys(poly, vars, field);
  Ideal<PrimeField> ideal(field, file.vars.size(), file.polys);
  VarietyReport report;
  report.pipeline = "sing-locus";
  describe_ideal(report, ideal, {}, file.vars);
  report.parameters = {{"k_max", std::to_string(cfg.k_max)}, {"budget", std::to_string(cfg.budget)}};
  const std::size_t codim = ideal.ambient_dimension() - static_cast<std::size_t>(std::max(report.dimension, 0));
  PointSearchOptions search;
  search.k_max = cfg.k_max;
  search.budget = cfg.budget;
  search.seed = cfg.seed;
  const auto jac = jacobian(ideal.generators());
  for (const auto& y : singular_points(ideal, codim, search))
    report.singular_points.push_back(record_point(y, jac, codim));
  report.smooth = report.singular_points.empty();
  // The singular points found are themselves the output; the check only
  // records that the scan ran over the requested fields.
  report.check("scan_completed", true);
  return emit(report, cfg);
}

int run_bezout(const RunConfig& cfg, unsigned ambient, const std::string& degrees_text, unsigned samples) {
  const PrimeField field(cfg.prime);
  std::vector<unsigned> degrees;
  for (const auto& d : split(degrees_text, ',')) degrees.push_back(static_cast<unsigned>(std::stoul(d)));
  if (degrees.empty() || degrees.size() > ambient || ambient + 1 > kMaxVariables)
    throw InvalidParameters("need 1 <= #degrees <= ambient dimension");
  std::int64_t product = 1;
  for (auto d : degrees) {
    if (d < 1) throw InvalidParameters("degrees must be positive");
    product *= d;
  }
  VarietyReport report;
  report.pipeline = "bezout-check";
  report.parameters = {{"ambient", std::to_string(ambient)}, {"degrees", degrees_text},
                       {"trials", std::to_string(cfg.trials)}, {"seed", std::to_string(cfg.seed)}};
  Json instances = Json::array();
  for (unsigned t = 0; t < cfg.trials; ++t) {
    Rng rng(cfg.seed + t);
    std::vector<Polynomial<PrimeField>> gens;
    for (auto d : degrees) gens.push_back(random_homogeneous(field, ambient + 1, d, rng));
    Ideal<PrimeField> ideal(field, ambient + 1, gens);
    VarietyReport one;
    describe_ideal(one, ideal);
    const std::string tag = "instance_" + std::to_string(t) + "_";
    report.check(tag + "degree", product, one.degree);
    report.check(tag + "dimension", static_cast<std::int64_t>(ambient - degrees.size()), one.dimension);
    report.check(tag + "complete_intersection", one.complete_intersection);
    std::size_t sampled = 0, full = 0;
    const auto jac = jacobian(ideal.generators());
    PointSearchOptions search;
    search.seed = cfg.seed + t;
    if (one.dimension >= 1) {
      for (unsigned s = 0; s < 4 * samples && sampled < samples; ++s)
        for (const auto& y : random_slice(ideal, one.dimension, rng, search).points) {
          if (sampled == samples) break;
          ++sampled;
          full += jacobian_rank_at(jac, y) == degrees.size();
        }
    } else if (one.dimension == 0) {
      search.k_max = kMaxExtensionDegree;
      for (const auto& y : rational_points(ideal, search).points) {
        ++sampled;
        full += jacobian_rank_at(jac, y) == degrees.size();
      }
    }
    report.check(tag + "sampled_points_smooth", sampled > 0 && full == sampled);
    instances.push_back({{"generators", one.generators},
                         {"dimension", std::to_string(one.dimension)},
                         {"degree", std::to_string(one.degree)},
                         {"smoothness_samples", std::to_string(sampled)}});
  }
  report.field = config_of(field).describe();
  report.ambient = ambient;
  report.degree = product;
  report.dimension = static_cast<int>(ambient - degrees.size());
  report.complete_intersection = true;
  report.extra["instances"] = instances;
  return emit(report, cfg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lines through singular points of hypersurfaces, checked over finite fields"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  if (const char* env = std::getenv("FANO_SEED")) {
    try {
      cfg.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "FANO_SEED must be an unsigned integer\n";
      return kExitUsage;
    }
  }
  app.add_option("--seed", cfg.seed, "random seed (default: FANO_SEED or 0)");
  app.add_option("--prime", cfg.prime, "characteristic of the working field")->check(CLI::PositiveNumber);
  app.add_option("--kmax", cfg.k_max, "largest extension degree searched")->check(CLI::Range(1u, 32u));
  app.add_option("--trials", cfg.trials, "slice trials / random instances")->check(CLI::Range(1u, 1000u));
  app.add_option("--budget", cfg.budget, "enumeration budget in points")->check(CLI::PositiveNumber);
  app.add_option("--json", cfg.json_path, "write the report here instead of stdout");
  app.add_flag("--quiet", cfg.quiet, "no summary on stdout");

  std::vector<unsigned> random;
  std::string poly, point, vars;
  int mult = 0;
  auto* lines = app.add_subcommand("lines-through", "scheme of lines through a point of a hypersurface");
  lines->add_option("--random", random, "n d m: random hypersurface in P^n of degree d, point of multiplicity m")
      ->expected(3);
  lines->add_option("--poly", poly, "file with the hypersurface equation");
  lines->add_option("--point", point, "comma-separated coordinates of the point");
  lines->add_option("--mult", mult, "claimed multiplicity (default: computed)");
  lines->add_option("--vars", vars, "comma-separated variable names (default x0, x1, ...)");

  unsigned r = 2;
  auto* voisin = app.add_subcommand("voisin-demo", "nodes of the normal-form cubic and lines through a node");
  voisin->add_option("--r", r, "half the dimension of the cubic")->check(CLI::Range(1u, 11u));

  bool lex = false;
  auto* gb = app.add_subcommand("groebner", "reduced Groebner basis, dimension and degree");
  gb->add_option("--poly", poly, "file with one polynomial per line")->required();
  gb->add_option("--vars", vars, "comma-separated variable names");
  gb->add_flag("--lex", lex, "lexicographic order instead of grevlex");

  auto* sing = app.add_subcommand("sing-locus", "singular points found by exhaustive scan");
  sing->add_option("--poly", poly, "file with one polynomial per line")->required();
  sing->add_option("--vars", vars, "comma-separated variable names");

  unsigned ambient = 4, samples = 10;
  std::string degrees = "2,3";
  auto* bez = app.add_subcommand("bezout-check", "degrees of random complete intersections");
  bez->add_option("--ambient", ambient, "dimension of the projective space")->check(CLI::Range(1u, 23u));
  bez->add_option("--degrees", degrees, "comma-separated generator degrees");
  bez->add_option("--samples", samples, "sampled points per instance for the Jacobian check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*lines) return run_lines_through(cfg, random, poly, point, mult, vars);
    if (*voisin) return run_voisin(cfg, r);
    if (*gb) return run_groebner(cfg, poly, vars, lex);
    if (*sing) return run_sing_locus(cfg, poly, vars);
    if (*bez) return run_bezout(cfg, ambient, degrees, samples);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const InvalidParameters& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error at position " << e.position() << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnknownVariable& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotPrime& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const MultiplicityMismatch& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kExitVerification;
  } catch (const Error& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kExitVerification;
  }
  return kExitUsage;
}
