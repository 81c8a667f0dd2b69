#include <doctest.h>

#include <set>

#include "fano/voisin.hpp"

using namespace fano;

namespace {

const Check* find_check(const VarietyReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

// Every monomial of x_{r+2} Q_i carries a variable with index >= r+1, so
// f vanishes on P = {x_{r+1} = ... = x_{2r+1} = 0}.
bool vanishes_on_plane(const NormalFormCubic& c) {
  for (const auto& t : c.f.terms()) {
    bool hit = false;
    for (std::size_t v = c.r + 1; v < c.nvars(); ++v) hit = hit || t.monomial[v] > 0;
    if (!hit) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("voisin") {
  TEST_CASE("normal form structure") {
    PrimeField f(10007);
    for (unsigned r = 1; r <= 3; ++r) {
      auto c = normal_form_cubic(r, f, 3);
      CHECK(c.nvars() == 2 * r + 2);
      CHECK(c.Q.size() == r);
      CHECK(c.f.degree() == 3);
      CHECK(c.f.is_homogeneous());
      CHECK(has_normal_form(c));
      CHECK(vanishes_on_plane(c));
      CHECK(hyperplane_section_splits(c));
      for (const auto& q : c.Q) CHECK(q.degree() == 2);
      CHECK(normal_form_cubic(r, f, 3).f == c.f);
    }
    CHECK_THROWS_AS(normal_form_cubic(0, f, 1), InvalidParameters);
    CHECK_THROWS_AS(normal_form_cubic(1, PrimeField(3), 1), InvalidParameters);
  }

  TEST_CASE("has_normal_form rejects a perturbed cubic") {
    PrimeField f(10007);
    auto c = normal_form_cubic(2, f, 4);
    auto vars = default_variable_names(6);
    c.f = c.f + parse("x0^3", vars, f);
    CHECK_FALSE(has_normal_form(c));
    CHECK_FALSE(hyperplane_section_splits(c));
  }

  TEST_CASE("nodes: 2^r certified simple double points") {
    PrimeField f(10007);
    for (unsigned r = 1; r <= 3; ++r) {
      int good = 0;
      for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        auto c = normal_form_cubic(r, f, seed);
        std::vector<NodeCertificate> certs;
        try {
          certs = nodes(c, {seed, {}});
        } catch (const DegenerateInstance&) {
          continue;
        }
        CHECK(certs.size() == (1u << r));
        std::set<std::vector<std::string>> distinct;
        for (const auto& cert : certs) {
          CHECK(cert.on_surface);
          CHECK(cert.partials_vanish);
          CHECK(cert.multiplicity == 2);
          CHECK(cert.quadratic_part_rank == 2 * r + 1);
          CHECK(cert.is_simple_double_point);
          // Nodes lie in P: x_{r+1} = ... = x_{2r+1} = 0.
          const auto s = cert.point.to_strings();
          for (std::size_t v = r + 1; v < c.nvars(); ++v) CHECK(s[v] == "0");
          distinct.insert(s);
        }
        CHECK(distinct.size() == certs.size());
        ++good;
      }
      CHECK(good >= 3);
    }
  }

  TEST_CASE("certify_node rejects a smooth point") {
    PrimeField f(10007);
    auto c = normal_form_cubic(1, f, 2);
    // [0:0:1:0] has x_{r+1}^2 x_0 vanishing but df/dx0 = x_2^2 = 1.
    const auto E = canonical_field(10007, 1);
    GeometricPoint y(E, {E.zero(), E.zero(), E.one(), E.zero()});
    auto cert = certify_node(c, y);
    CHECK_FALSE(cert.partials_vanish);
    CHECK_FALSE(cert.is_simple_double_point);
  }

  TEST_CASE("exhaustive scan finds exactly the rational nodes") {
    PrimeField f(31);
    for (unsigned r = 1; r <= 2; ++r)
      for (std::uint64_t seed = 1; seed <= 2; ++seed) {
        auto c = normal_form_cubic(r, f, seed);
        std::vector<NodeCertificate> certs;
        try {
          certs = nodes(c, {seed, {}});
        } catch (const DegenerateInstance&) {
          continue;
        }
        std::set<std::vector<std::string>> rational;
        for (const auto& cert : certs)
          if (residue_degree(cert.point) == 1) rational.insert(cert.point.to_strings());
        std::set<std::vector<std::string>> scanned;
        for (const auto& y : singular_scan(c, 1).points) scanned.insert(y.to_strings());
        CHECK(scanned == rational);
      }
  }

  TEST_CASE("a special cubic over a small field: extra singular point seen by both checks") {
    // Over F_31 this instance has one singular point off P besides its nodes.
    PrimeField f(31);
    auto c = normal_form_cubic(2, f, 6);
    const auto hd = cubic_singular_locus(c);
    CHECK(hd.dimension == 0);
    CHECK(hd.degree == 5);
    std::size_t off_plane = 0;
    for (const auto& y : singular_scan(c, 1).points) {
      const auto s = y.to_strings();
      off_plane += s[3] != "0" || s[4] != "0" || s[5] != "0";
    }
    CHECK(off_plane == 1);
  }

  TEST_CASE("general cubics: partials cut out exactly the nodes") {
    PrimeField f(10007);
    for (unsigned r = 1; r <= 2; ++r) {
      const auto hd = cubic_singular_locus(normal_form_cubic(r, f, 1));
      CHECK(hd.dimension == 0);
      CHECK(hd.degree == (1 << r));
    }
  }

  TEST_CASE("sigma_y system has a quadric and a cubic") {
    PrimeField f(10007);
    for (unsigned r = 1; r <= 3; ++r) {
      auto c = normal_form_cubic(r, f, 1);
      auto certs = nodes(c, {1, {}});
      const NodeCertificate* node = nullptr;
      for (const auto& cert : certs)
        if (residue_degree(cert.point) == 1) {
          node = &cert;
          break;
        }
      if (!node) continue;
      auto ideal = sigma_y_system(c, node->point);
      CHECK(ideal.nvars() == 2 * r + 1);
      REQUIRE(ideal.generators().size() == 2);
      CHECK(ideal.generators()[0].degree() == 2);
      CHECK(ideal.generators()[1].degree() == 3);
    }
  }

  TEST_CASE("sigma_y rejects a smooth point") {
    PrimeField f(10007);
    auto c = normal_form_cubic(1, f, 2);
    const auto E = canonical_field(10007, 1);
    GeometricPoint y(E, {E.zero(), E.zero(), E.one(), E.zero()});
    CHECK_THROWS_AS(sigma_y_system(c, y), MultiplicityMismatch);
  }

  TEST_CASE("voisin_demo r=2: Sigma_y has dim 2 and degree 6 with three singular points") {
    PrimeField f(10007);
    auto report = voisin_demo(2, f, 1);
    CHECK(report.all_ok());
    CHECK(report.dimension == 2);
    CHECK(report.degree == 6);
    REQUIRE(find_check(report, "singular_locus_degree"));
    CHECK(find_check(report, "singular_locus_degree")->computed == "3");
    REQUIRE(find_check(report, "nodes"));
    CHECK(find_check(report, "nodes")->computed == "4");
  }

  TEST_CASE("voisin_demo r=3: Sigma_y has dim 4") {
    PrimeField f(10007);
    SigmaYOptions opts;
    opts.slice_trials = 1;
    auto report = voisin_demo(3, f, 1, opts);
    CHECK(report.all_ok());
    CHECK(report.dimension == 4);
    CHECK(report.degree == 6);
  }

  TEST_CASE("voisin_demo is deterministic") {
    PrimeField f(10007);
    CHECK(voisin_demo(2, f, 5).to_json().dump() == voisin_demo(2, f, 5).to_json().dump());
  }
}
