// One PASS/FAIL line per acceptance criterion. argv[1], when given, is the
// path of the fano executable used for the command-line determinism check.

#include <unistd.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "fano/fano.hpp"
#include "fano/voisin.hpp"

using namespace fano;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

void fail(Outcome& o, const std::string& why) {
  o.ok = false;
  if (!o.detail.empty()) o.detail += "; ";
  o.detail += why;
}

const Check* find_check(const VarietyReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

const PrimeField kField(10007);

Outcome lines_case(unsigned n, unsigned d, unsigned m, std::uint64_t expected) {
  Outcome o;
  auto report = lines_through_random(n, d, m, kField, 1);
  if (report.dimension != 0) fail(o, "dim " + std::to_string(report.dimension));
  if (report.degree != static_cast<std::int64_t>(expected)) fail(o, "degree " + std::to_string(report.degree));
  // Listed points plus those flagged as living beyond k_max.
  const auto* geo = find_check(report, "geometric_points");
  if (!geo || geo->computed != std::to_string(expected))
    fail(o, "geometric points " + (geo ? geo->computed : std::string("missing")));
  for (const auto& s : report.solutions)
    if (!s.reduced) fail(o, "non-reduced point");
  if (!report.all_ok()) fail(o, "report not ok");
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("(") + std::to_string(n) + "," + std::to_string(d) +
              "," + std::to_string(m) + ") degree " + std::to_string(report.degree) + ", listed " +
              std::to_string(report.solutions.size());
  return o;
}

Outcome merge(std::vector<Outcome> parts) {
  Outcome o;
  for (auto& p : parts) {
    o.ok = o.ok && p.ok;
    if (!o.detail.empty()) o.detail += " | ";
    o.detail += p.detail;
  }
  return o;
}

Outcome criterion1() { return lines_case(3, 3, 2, 6); }

Outcome criterion2() { return lines_case(4, 3, 1, 6); }

Outcome criterion3() {
  // (d, n, m) with d = m+n-2.
  return merge({lines_case(3, 2, 1, 2), lines_case(4, 4, 2, 24), lines_case(3, 4, 3, 12), lines_case(3, 5, 4, 20)});
}

Outcome criterion4() {
  Outcome o;
  SigmaOptions opts;
  opts.slice_trials = 3;
  opts.smoothness_samples = 50;
  int instances = 0, samples = 0;
  std::uint64_t seed = 1000;
  // Cycle through every (n, d, m) with n <= 6, d <= 4, d < m+n-2 until 30 instances.
  std::vector<std::array<unsigned, 3>> grid;
  for (unsigned n = 2; n <= 6; ++n)
    for (unsigned m = 1; m <= 4; ++m)
      for (unsigned d = m; d <= 4; ++d)
        if (d < m + n - 2) grid.push_back({n, d, m});
  for (std::size_t i = 0; instances < 30; ++i, ++instances) {
    const auto [n, d, m] = grid[i % grid.size()];
    auto report = lines_through_random(n, d, m, kField, seed++, opts);
    const std::string tag = "(" + std::to_string(n) + "," + std::to_string(d) + "," + std::to_string(m) + ")";
    if (report.dimension != static_cast<int>(m + n - 2 - d)) fail(o, tag + " dim " + std::to_string(report.dimension));
    if (!report.complete_intersection) fail(o, tag + " not a complete intersection");
    const auto* codim = find_check(report, "codimension");
    if (!codim || !codim->ok || codim->predicted != std::to_string(d - m + 1)) fail(o, tag + " codimension");
    const auto* smooth = find_check(report, "sampled_points_smooth");
    if (!smooth || !smooth->ok) fail(o, tag + " singular sample");
    if (report.extra.contains("smoothness_samples"))
      samples += std::stoi(report.extra["smoothness_samples"].get<std::string>());
    if (!report.all_ok()) fail(o, tag + " report not ok");
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(instances) + " instances over " +
              std::to_string(grid.size()) + " parameter triples";
  if (samples > 0) o.detail += ", " + std::to_string(samples) + " sampled points";
  return o;
}

Outcome criterion5() {
  Outcome o;
  Rng rng(5);
  for (auto degrees : {std::vector<unsigned>{2, 2}, std::vector<unsigned>{2, 3}}) {
    const std::int64_t expected = degrees[0] * degrees[1];
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Polynomial<PrimeField>> gens;
      for (auto d : degrees) gens.push_back(random_homogeneous(kField, 5, d, rng));
      Ideal<PrimeField> ideal(kField, 5, gens);
      const auto hd = hilbert_data(ideal);
      if (hd.degree != expected || hd.dimension != 2)
        fail(o, "degrees " + std::to_string(degrees[1]) + ": dim " + std::to_string(hd.dimension) + " degree " +
                    std::to_string(hd.degree));
      const auto jac = jacobian(gens);
      int sampled = 0;
      for (int s = 0; s < 20 && sampled < 10; ++s) {
        auto slice = random_slice(ideal, 2, rng);
        for (const auto& y : slice.points) {
          if (jacobian_rank_at(jac, y) != 2) fail(o, "singular sampled point");
          ++sampled;
        }
      }
      if (sampled == 0) fail(o, "no sampled points");
    }
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("(2,") + std::to_string(degrees[1]) +
                ") degree " + std::to_string(expected) + " on 5 instances";
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  const PrimeField small(31);
  std::ostringstream detail;
  std::vector<std::string> reseed_log;
  for (unsigned r = 1; r <= 3; ++r) {
    // r <= 2 runs over F_31 so the exhaustive scan is affordable.
    const PrimeField& field = r <= 2 ? small : kField;
    int done = 0, reseeds = 0, scanned = 0;
    std::uint64_t seed = 1;
    while (done < 10) {
      auto c = normal_form_cubic(r, field, seed);
      std::vector<NodeCertificate> certs;
      try {
        certs = nodes(c, {seed, {}});
        // Genericity gate shared with voisin-demo: the partials must cut out
        // exactly 2^r points. Small fields hit the special locus now and then.
        const auto sing = cubic_singular_locus(c);
        if (sing.dimension != 0 || sing.degree != (1 << r))
          throw DegenerateInstance("singular locus of degree " + std::to_string(sing.degree));
      } catch (const DegenerateInstance& e) {
        reseed_log.push_back("r=" + std::to_string(r) + " seed " + std::to_string(seed) + ": " + e.what());
        ++reseeds;
        ++seed;
        continue;
      }
      if (certs.size() != (1u << r)) fail(o, "r=" + std::to_string(r) + " found " + std::to_string(certs.size()));
      for (const auto& cert : certs)
        if (!cert.is_simple_double_point || cert.quadratic_part_rank != 2 * r + 1)
          fail(o, "r=" + std::to_string(r) + " uncertified node");
      if (r <= 2) {
        std::set<std::vector<std::string>> rational, found;
        for (const auto& cert : certs)
          if (residue_degree(cert.point) == 1) rational.insert(cert.point.to_strings());
        for (const auto& y : singular_scan(c, 1).points) found.insert(y.to_strings());
        if (found != rational) fail(o, "r=" + std::to_string(r) + " scan disagrees with nodes");
        ++scanned;
      }
      ++done;
      ++seed;
    }
    detail << (r > 1 ? "; " : "") << "r=" << r << " " << done << " seeds over GF(" << field.characteristic()
           << "), " << reseeds << " reseeded";
    if (scanned) detail << ", " << scanned << " scans";
  }
  for (const auto& line : reseed_log) detail << "; reseeded " << line;
  o.detail = o.detail.empty() ? detail.str() : o.detail + "; " + detail.str();
  return o;
}

Outcome sigma_y_case(unsigned r, int dim, std::uint64_t seed) {
  Outcome o;
  auto report = voisin_demo(r, kField, seed);
  if (report.dimension != dim) fail(o, "r=" + std::to_string(r) + " dim " + std::to_string(report.dimension));
  if (report.degree != 6) fail(o, "r=" + std::to_string(r) + " degree " + std::to_string(report.degree));
  const auto* slice = find_check(report, "slice_degree");
  if (!slice || slice->computed != "6") fail(o, "slice degree " + (slice ? slice->computed : std::string("missing")));
  if (!report.all_ok()) fail(o, "report not ok");
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("r=") + std::to_string(r) + " dim " +
              std::to_string(report.dimension) + " degree " + std::to_string(report.degree) + " slice " +
              (slice ? slice->computed : "?");
  return o;
}

Outcome criterion7() { return merge({sigma_y_case(2, 2, 1), sigma_y_case(3, 4, 1)}); }

Outcome criterion8() {
  Outcome o;
  int attempts = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto report = voisin_demo(2, kField, seed * 100);
    attempts += static_cast<int>(report.attempts.size());
    for (const char* name : {"singular_locus_dimension", "singular_locus_degree", "singular_points_reduced"}) {
      const auto* c = find_check(report, name);
      if (!c || !c->ok) fail(o, "seed " + std::to_string(seed * 100) + " " + name);
    }
    const auto* deg = find_check(report, "singular_locus_degree");
    if (!deg || deg->computed != "3") fail(o, "seed " + std::to_string(seed * 100) + " degree");
    if (!report.all_ok()) fail(o, "seed " + std::to_string(seed * 100) + " report not ok");
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("10 seeds, rank-drop ideal dim 0 degree 3, ") +
              std::to_string(attempts) + " logged attempts";
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::vector<std::string> xyz{"x", "y", "z"};
  std::vector<Polynomial<PrimeField>> gens{parse("x^2 + y^2 - z^2", xyz, kField), parse("x*y - z^2", xyz, kField)};
  Ideal<PrimeField> ideal(kField, 3, gens);
  const auto hd = hilbert_data(ideal);
  if (hd.dimension != 0 || hd.degree != 4) fail(o, "hilbert data");
  PointSearchOptions opts;
  opts.k_max = 6;
  const auto pts = rational_points(ideal, opts);
  if (pts.points.size() != 4) fail(o, "oracle found " + std::to_string(pts.points.size()));
  const auto jac = jacobian(gens);
  for (const auto& y : pts.points)
    if (jacobian_rank_at(jac, y) != 2) fail(o, "non-reduced point");
  std::map<unsigned, int> by_degree;
  for (const auto& y : pts.points) ++by_degree[residue_degree(y)];
  std::ostringstream s;
  s << "dim " << hd.dimension << " degree " << hd.degree << ", points by residue degree:";
  for (auto [k, c] : by_degree) s << " " << k << ":" << c;
  o.detail += (o.detail.empty() ? "" : "; ") + s.str();
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome criterion10(const char* cli) {
  Outcome o;
  // In-process reruns of each pipeline.
  const auto twice = [&](const std::string& name, const std::function<std::string()>& run) {
    if (run() != run()) fail(o, name + " differs between runs");
  };
  twice("lines-through", [] { return lines_through_random(4, 4, 2, kField, 3).to_json().dump(); });
  twice("voisin-demo", [] { return voisin_demo(2, kField, 3).to_json().dump(); });
  int commands = 2;
  if (cli) {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / ("fano_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    std::ofstream(dir / "cubic.txt") << "x0*x1^2 + x0*x2*x3 + x1^3 + x2^3 + x3^3\n";
    std::ofstream(dir / "sing.txt") << "x0*x1*x2 + x0*x3^2 + x1^3 + x2^3 + 2*x3^3 + x1*x2*x3\n";
    std::ofstream(dir / "gb.txt") << "x^2 + y^2 - z^2\nx*y - z^2\n";
    const std::vector<std::string> commands_list{
        "lines-through --random 3 3 2 --seed 4",
        "lines-through --poly " + (dir / "cubic.txt").string() + " --point 1,0,0,0",
        "voisin-demo --r 2 --seed 4",
        "groebner --poly " + (dir / "gb.txt").string() + " --vars x,y,z",
        "sing-locus --poly " + (dir / "sing.txt").string() + " --prime 11 --kmax 1",
        "bezout-check --ambient 4 --degrees 2,3 --trials 2 --seed 4",
    };
    int i = 0;
    for (const auto& args : commands_list) {
      std::string out[2];
      for (int run = 0; run < 2; ++run) {
        const auto path = dir / ("out" + std::to_string(i) + "_" + std::to_string(run) + ".json");
        const std::string cmd = std::string(cli) + " " + args + " --json " + path.string() + " --quiet";
        const int rc = std::system(cmd.c_str());
        if (rc != 0) fail(o, "'" + args + "' exited with " + std::to_string(rc));
        out[run] = slurp(path);
      }
      if (out[0].empty() || out[0] != out[1]) fail(o, "'" + args + "' output differs");
      ++i;
      ++commands;
    }
    fs::remove_all(dir);
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(commands) + " pipelines rerun, byte-identical JSON";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const char* cli = argc > 1 ? argv[1] : nullptr;
  struct Criterion {
    int id;
    const char* what;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "nodal cubic surface: 6 reduced lines through the node", 5, criterion1},
      {2, "cubic threefold, smooth point: 6 lines", 10, criterion2},
      {3, "count grid d = m+n-2: 2, 24, 12, 20", 120, criterion3},
      {4, "dimension, smoothness and codimension on 30 instances", 180, criterion4},
      {5, "complete intersections (2,2) and (2,3) in P^4: degrees 4 and 6", 60, criterion5},
      {6, "2^r certified nodes, r = 1, 2, 3, 10 seeds each; scan finds no others", 300, criterion6},
      {7, "Sigma_y: r=2 dim 2 degree 6 (Hilbert and slice), r=3 dim 4", 120, criterion7},
      {8, "Sigma_y r=2: rank-drop ideal 0-dimensional of degree 3, reduced", 120, criterion8},
      {9, "two conics: 0-dimensional of degree 4, four geometric points", 5, criterion9},
      {10, "determinism: reruns give byte-identical JSON", 600, [cli] { return criterion10(cli); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_s) fail(o, "over time limit");
    std::printf("%s criterion %d: %s [%.2fs / %.0fs] %s\n", o.ok ? "PASS" : "FAIL", c.id, c.what, secs, c.limit_s,
                o.detail.c_str());
    std::fflush(stdout);
    failed += !o.ok;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
