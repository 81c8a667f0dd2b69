#include <doctest.h>

#include "fano/fano.hpp"

using namespace fano;

namespace {

using P = Polynomial<PrimeField>;

const Check* find_check(const VarietyReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

// f = sum_i x0^{d-i} f_i with no term of x0-degree above d-m.
bool has_pointed_shape(const P& f, unsigned d, unsigned m) {
  if (!f.is_homogeneous() || f.degree() != static_cast<int>(d)) return false;
  for (const auto& t : f.terms())
    if (t.monomial[0] > d - m) return false;
  return true;
}

std::uint64_t factorial(unsigned n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_SUITE("fano") {
  TEST_CASE("random_pointed_hypersurface shapes") {
    PrimeField f(10007);
    struct Case {
      unsigned n, d, m;
    };
    for (auto c : {Case{3, 3, 2}, Case{4, 3, 1}, Case{3, 4, 3}}) {
      auto ph = random_pointed_hypersurface(c.n, c.d, c.m, f, 11);
      CHECK(ph.n() == c.n);
      CHECK(ph.d() == c.d);
      CHECK(ph.y.to_strings()[0] == "1");
      CHECK(has_pointed_shape(ph.f, c.d, c.m));
      // Multiplicity exactly m: some term has x0-degree d-m.
      bool attained = false;
      for (const auto& t : ph.f.terms()) attained = attained || t.monomial[0] == c.d - c.m;
      CHECK(attained);
      CHECK(random_pointed_hypersurface(c.n, c.d, c.m, f, 11).f == ph.f);
      CHECK_FALSE(random_pointed_hypersurface(c.n, c.d, c.m, f, 12).f == ph.f);
    }
  }

  TEST_CASE("parameter validation") {
    PrimeField f(10007);
    CHECK_THROWS_AS(random_pointed_hypersurface(3, 4, 1, f, 1), InvalidParameters);  // d > m+n-2
    CHECK_THROWS_AS(random_pointed_hypersurface(3, 2, 3, f, 1), InvalidParameters);  // m > d
    CHECK_THROWS_AS(random_pointed_hypersurface(1, 1, 1, f, 1), InvalidParameters);
    CHECK_THROWS_AS(random_pointed_hypersurface(3, 3, 0, f, 1), InvalidParameters);
    CHECK_NOTHROW(check_line_parameters(4, 4, 2));
  }

  TEST_CASE("sigma_system reads off components") {
    PrimeField f(10007);
    auto vars = default_variable_names(4);
    PointedHypersurface ph{parse("x0*x1^2 + x2^3", vars, f), ProjectivePoint<PrimeField>(f, {1, 0, 0, 0}), 2};
    auto sys = sigma_system(ph);
    REQUIRE(sys.generators.size() == 2);
    std::vector<std::string> names{"x1", "x2", "x3"};
    CHECK(sys.generators[0] == parse("x1^2", names, f));
    CHECK(sys.generators[1] == parse("x2^3", names, f));
    CHECK(sys.expected_dim == 0);

    PointedHypersurface top{parse("x1^3 + x2*x3^2", vars, f), ProjectivePoint<PrimeField>(f, {1, 0, 0, 0}), 3};
    auto single = sigma_system(top);
    REQUIRE(single.generators.size() == 1);
    CHECK(single.generators[0].degree() == 3);

    ph.m = 1;
    CHECK_THROWS_AS(sigma_system(ph), MultiplicityMismatch);
  }

  TEST_CASE("sigma_system moves the point first") {
    PrimeField f(10007);
    auto ph = random_pointed_hypersurface(3, 3, 2, f, 5);
    // Same surface with the node carried to y = M e0 by x -> M^{-1} x.
    ProjectivePoint<PrimeField> y(f, {3, 1, 4, 1});
    const auto M = move_to_base_point(y);
    const auto moved = compose(ph.f, linear_forms(inverse(M)));
    PointedHypersurface ph2{moved, y, 2};
    CHECK(sigma_system(ph2).generators == sigma_system(ph).generators);
  }

  TEST_CASE("expected_count identity") {
    CHECK(expected_count(3, 2) == 6);
    CHECK(expected_count(3, 1) == 6);
    CHECK(expected_count(2, 1) == 2);
    for (unsigned d = 1; d <= 8; ++d)
      for (unsigned m = 1; m <= d; ++m) CHECK(expected_count(d, m) * factorial(m - 1) == factorial(d));
  }

  TEST_CASE("lines on a quadric surface through a point: oracle count 2") {
    // Every point y' of P^3(F_25) other than y on a line through y inside Q
    // is counted; each such line contributes 25 of them.
    PrimeField f(5);
    const auto E = canonical_field(5, 2);
    int checked = 0;
    for (std::uint64_t seed = 1; checked < 3 && seed < 20; ++seed) {
      auto ph = random_pointed_hypersurface(3, 2, 1, f, seed);
      // Skip singular quadrics: the Gram determinant must be nonzero.
      const auto hess = jacobian(gradient(ph.f));
      Matrix<PrimeField> H(f, 4, 4);
      const std::vector<PrimeField::Element> origin(4, 0);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) H(i, j) = hess[i][j].evaluate(origin);
      if (rank(H) != 4) continue;
      const auto F = lift(ph.f, E);
      GeometricPoint y(E, {E.one(), E.zero(), E.zero(), E.zero()});
      ProjectiveEnumerator<ExtensionField> en(E, 3);
      std::uint64_t on_lines = 0;
      en.for_each(0, en.count(), [&](std::uint64_t, const std::vector<ExtensionField::Element>& c) {
        GeometricPoint y2(E, c);
        if (y2 == y) return;
        if (line_through(y, y2).restrict(F).is_zero()) ++on_lines;
      });
      CHECK(on_lines % 25 == 0);
      CHECK(on_lines / 25 == expected_count(2, 1));
      auto report = analyze_sigma(ph, seed);
      CHECK(report.all_ok());
      CHECK(report.solutions.size() == 2);
      ++checked;
    }
    CHECK(checked == 3);
  }

  TEST_CASE("nodal cubic surface: six reduced lines") {
    PrimeField f(10007);
    auto report = lines_through_random(3, 3, 2, f, 1);
    CHECK(report.all_ok());
    CHECK(report.dimension == 0);
    CHECK(report.degree == 6);
    CHECK(report.solutions.size() == 6);
    for (const auto& s : report.solutions) CHECK(s.reduced);
  }

  TEST_CASE("positive-dimensional example n=5 d=3 m=2") {
    PrimeField f(10007);
    auto report = lines_through_random(5, 3, 2, f, 1);
    CHECK(report.all_ok());
    // m+n-2-d = 2: a quadric and a cubic in P^4.
    CHECK(report.dimension == 2);
    CHECK(report.degree == 6);
    CHECK(report.complete_intersection);
    REQUIRE(find_check(report, "slice_degree"));
    CHECK(find_check(report, "slice_degree")->computed == "6");
  }

  TEST_CASE("n=4 d=4 m=2 gives 24 points with extensions") {
    PrimeField f(10007);
    auto report = lines_through_random(4, 4, 2, f, 1);
    CHECK(report.all_ok());
    CHECK(report.degree == 24);
    // Points past k_max are counted but not listed.
    REQUIRE(find_check(report, "geometric_points"));
    CHECK(find_check(report, "geometric_points")->computed == "24");
    CHECK(report.solutions.size() <= 24);
    SigmaOptions wide;
    wide.k_max = kMaxExtensionDegree;
    auto full = lines_through_random(4, 4, 2, f, 1, wide);
    CHECK(full.all_ok());
    CHECK(full.solutions.size() == 24);
  }

  TEST_CASE("dimension formula across the parameter grid") {
    PrimeField f(10007);
    SigmaOptions opts;
    opts.slice_trials = 1;
    opts.smoothness_samples = 5;
    int instances = 0;
    std::uint64_t seed = 100;
    for (unsigned n = 2; n <= 5 && instances < 30; ++n)
      for (unsigned m = 1; m <= 3 && instances < 30; ++m)
        for (unsigned d = m; d <= m + n - 2 && instances < 30; ++d) {
          if (expected_count(d, m) > 60 && d == m + n - 2) continue;  // keep it quick
          auto report = lines_through_random(n, d, m, f, seed++, opts);
          INFO("n=" << n << " d=" << d << " m=" << m);
          CHECK(report.dimension == static_cast<int>(m + n - 2 - d));
          CHECK(report.complete_intersection);
          CHECK(report.all_ok());
          ++instances;
        }
    CHECK(instances >= 20);
  }

  TEST_CASE("line membership: the line lies on V(f) iff every generator vanishes") {
    PrimeField f(7);
    auto ph = random_pointed_hypersurface(3, 3, 2, f, 9);
    const auto sys = sigma_system(ph);
    ProjectiveEnumerator<PrimeField> en(f, 3);
    int tested = 0;
    for (std::uint64_t idx = 1; idx < en.count() && tested < 100; ++idx) {
      auto y2 = en.point_at(idx);
      const std::vector<PrimeField::Element> rest(y2.coords().begin() + 1, y2.coords().end());
      bool all = true;
      for (const auto& g : sys.generators) all = all && f.is_zero(g.evaluate(rest));
      const bool contained = line_through(ph.y, y2).restrict(ph.f).is_zero();
      CHECK(all == contained);
      ++tested;
    }
    CHECK(tested == 100);
    // Also probe the points of Sigma itself, which the first 100 may miss.
    auto pts = rational_points(sys.ideal(), PointSearchOptions{});
    for (const auto& z : pts.points) {
      if (residue_degree(z) != 1) continue;
      std::vector<PrimeField::Element> c{1};
      for (const auto& v : z.coords()) c.push_back(static_cast<PrimeField::Element>(std::stoul(z.field().to_string(v))));
      CHECK(line_through(ph.y, ProjectivePoint<PrimeField>(f, c)).restrict(ph.f).is_zero());
    }
  }

  TEST_CASE("reports are deterministic") {
    PrimeField f(10007);
    auto a = lines_through_random(4, 3, 2, f, 7).to_json().dump(2);
    auto b = lines_through_random(4, 3, 2, f, 7).to_json().dump(2);
    CHECK(a == b);
  }
}
