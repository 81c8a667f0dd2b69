#include <doctest.h>

#include "fano/polynomial.hpp"

using namespace fano;

namespace {

using P = Polynomial<PrimeField>;

std::vector<PrimeField::Element> random_point(const PrimeField& f, std::size_t n, Rng& rng) {
  std::vector<PrimeField::Element> v(n);
  for (auto& x : v) x = f.sample(rng);
  return v;
}

// Random sparse polynomial of degree <= 3 with a handful of terms.
P random_poly(const PrimeField& f, std::size_t n, Rng& rng) {
  std::vector<P::Term> terms;
  const int count = 1 + static_cast<int>(uniform_below(rng, 6));
  for (int i = 0; i < count; ++i) {
    Monomial m(n);
    for (std::size_t v = 0; v < n; ++v) m.set(v, static_cast<unsigned>(uniform_below(rng, 2)));
    terms.push_back({m, f.sample(rng)});
  }
  return P::from_terms(f, n, std::move(terms));
}

}  // namespace

TEST_SUITE("poly") {
  TEST_CASE("parse examples") {
    PrimeField f(10007);
    auto vars = default_variable_names(3);
    auto g = parse("x0^2*x1 + 3*x2^3", vars, f);
    CHECK(g.size() == 2);
    CHECK(g.degree() == 3);
    CHECK(parse("x0 - x0", vars, f).is_zero());
    PrimeField f5(5);
    auto h = parse("7*x1^2*x0", vars, f5);
    REQUIRE(h.size() == 1);
    CHECK(h.terms()[0].coefficient == 2);
  }

  TEST_CASE("parse grammar details") {
    PrimeField f(101);
    std::vector<std::string> xyz{"x", "y", "z"};
    CHECK(parse("  -x * y ^ 2 +4 ", xyz, f) == parse("4 - x*y^2", xyz, f));
    CHECK(parse("3/2*x", xyz, f) == parse("x", xyz, f).scale(f.div(3, 2)));
    CHECK(parse("2**x", xyz, f) == parse("2*x", xyz, f));
    RationalField q;
    auto r = parse("-1/3*x^2 + 5/10*z", xyz, q);
    CHECK(r.coefficient(Monomial{0, 0, 1}) == mpq_class(1, 2));
    CHECK(r.coefficient(Monomial{2, 0, 0}) == mpq_class(-1, 3));
  }

  TEST_CASE("parse errors") {
    PrimeField f(101);
    std::vector<std::string> xy{"x", "y"};
    CHECK_THROWS_AS(parse("x + w", xy, f), UnknownVariable);
    CHECK_THROWS_AS(parse("x +", xy, f), SyntaxError);
    CHECK_THROWS_AS(parse("x ^", xy, f), SyntaxError);
    CHECK_THROWS_AS(parse("(x)", xy, f), SyntaxError);
    try {
      parse("x + y $", xy, f);
      FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
      CHECK(e.position() == 6);
    }
  }

  TEST_CASE("print and parse round-trip") {
    PrimeField f(10007);
    Rng rng(11);
    auto vars = default_variable_names(4);
    for (int i = 0; i < 50; ++i) {
      auto g = random_poly(f, 4, rng);
      CHECK(parse(to_string(g), vars, f) == g);
    }
    RationalField q(20);
    for (int i = 0; i < 20; ++i) {
      auto g = random_homogeneous(q, 3, 2, rng);
      g = g.scale(mpq_class(1, 7));
      CHECK(parse(to_string(g), default_variable_names(3), q) == g);
    }
    auto e = build_extension(31, 3);
    auto h = random_homogeneous(e, 3, 2, rng);
    CHECK_FALSE(to_string(h).empty());
  }

  TEST_CASE("homogeneous components") {
    PrimeField f(10007);
    std::vector<std::string> xs{"x1", "x2"};
    auto parts = homogeneous_components(parse("x1^2 + x2^3", xs, f));
    REQUIRE(parts.size() == 2);
    CHECK(parts.at(2) == parse("x1^2", xs, f));
    CHECK(parts.at(3) == parse("x2^3", xs, f));
    Rng rng(5);
    auto cubic = random_homogeneous(f, 4, 3, rng);
    auto one = homogeneous_components(cubic);
    REQUIRE(one.size() == 1);
    CHECK(one.at(3) == cubic);
    CHECK_THROWS_AS(homogeneous_components(P(f, 3)), ZeroPolynomial);
  }

  TEST_CASE("dehomogenized nodal cubic has no terms below degree 2") {
    PrimeField f(10007);
    Rng rng(8);
    std::vector<std::size_t> shift{1, 2, 3};
    auto f2 = rename_variables(random_homogeneous(f, 3, 2, rng), 4, shift);
    auto f3 = rename_variables(random_homogeneous(f, 3, 3, rng), 4, shift);
    auto cubic = P::variable(f, 4, 0) * f2 + f3;
    std::vector<P> images{P::constant(f, 3, 1)};
    for (std::size_t i = 0; i < 3; ++i) images.push_back(P::variable(f, 3, i));
    auto parts = homogeneous_components(compose(cubic, images));
    CHECK(parts.begin()->first == 2);
    CHECK(parts.rbegin()->first == 3);
    CHECK(parts.size() == 2);
  }

  TEST_CASE("components reassemble and have distinct degrees") {
    PrimeField f(10007);
    Rng rng(12);
    for (int i = 0; i < 30; ++i) {
      auto g = random_poly(f, 4, rng);
      if (g.is_zero()) continue;
      P sum(f, 4);
      for (const auto& [d, part] : homogeneous_components(g)) {
        CHECK(part.is_homogeneous());
        CHECK(part.degree() == static_cast<int>(d));
        sum += part;
      }
      CHECK(sum == g);
    }
  }

  TEST_CASE("linear substitution examples") {
    PrimeField f(10007);
    Rng rng(3);
    auto g = random_homogeneous(f, 3, 3, rng);
    CHECK(linear_substitute(g, Matrix<PrimeField>::identity(f, 3)) == g);
    Matrix<PrimeField> swap(f, 2, 2);
    swap(0, 1) = 1;
    swap(1, 0) = 1;
    CHECK(linear_substitute(P::variable(f, 2, 0), swap) == P::variable(f, 2, 1));
    Matrix<PrimeField> singular(f, 2, 2);
    singular(0, 0) = 1;
    CHECK_THROWS_AS(linear_substitute(P::variable(f, 2, 0), singular), SingularMatrix);
  }

  TEST_CASE("linear substitution agrees with evaluation at M v") {
    PrimeField f(10007);
    Rng rng(17);
    std::vector<std::string> xs{"x0", "x1"};
    auto g = parse("x0^2 + x1^2", xs, f);
    auto M = random_invertible(f, 2, rng);
    auto gm = linear_substitute(g, M);
    for (int i = 0; i < 20; ++i) {
      auto v = random_point(f, 2, rng);
      // Independent oracle: apply M by hand, then evaluate x0^2 + x1^2.
      const std::uint64_t p = 10007;
      const std::uint64_t a = (std::uint64_t{M(0, 0)} * v[0] + std::uint64_t{M(0, 1)} * v[1]) % p;
      const std::uint64_t b = (std::uint64_t{M(1, 0)} * v[0] + std::uint64_t{M(1, 1)} * v[1]) % p;
      CHECK(gm.evaluate(v) == (a * a + b * b) % p);
    }
  }

  TEST_CASE("substitution is a ring homomorphism and keeps degree") {
    PrimeField f(10007);
    Rng rng(21);
    for (int i = 0; i < 20; ++i) {
      auto a = random_poly(f, 3, rng), b = random_poly(f, 3, rng);
      auto M = random_invertible(f, 3, rng);
      CHECK(linear_substitute(a * b, M) == linear_substitute(a, M) * linear_substitute(b, M));
      CHECK(linear_substitute(a + b, M) == linear_substitute(a, M) + linear_substitute(b, M));
      if (!a.is_zero()) CHECK(linear_substitute(a, M).degree() == a.degree());
    }
  }

  TEST_CASE("partial derivatives") {
    PrimeField f(10007);
    auto vars = default_variable_names(2);
    CHECK(partial_derivative(parse("x0^2*x1", vars, f), 0) == parse("2*x0*x1", vars, f));
    CHECK(partial_derivative(P::constant(f, 2, 5), 1).is_zero());
    CHECK_THROWS_AS(partial_derivative(P::variable(f, 2, 0), 2), InvalidParameters);
  }

  TEST_CASE("Euler relation on random cubics") {
    PrimeField f(10007);
    Rng rng(30);
    for (int i = 0; i < 30; ++i) {
      auto g = random_homogeneous(f, 4, 3, rng);
      P euler(f, 4);
      for (std::size_t v = 0; v < 4; ++v) euler += P::variable(f, 4, v) * partial_derivative(g, v);
      CHECK(euler == g.scale(3));
    }
  }

  TEST_CASE("ring axioms and degree of products") {
    PrimeField f(10007);
    Rng rng(40);
    for (int i = 0; i < 100; ++i) {
      auto a = random_poly(f, 3, rng), b = random_poly(f, 3, rng), c = random_poly(f, 3, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK((a - a).is_zero());
      if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
    }
  }

  TEST_CASE("evaluation commutes with ring operations") {
    PrimeField f(10007);
    Rng rng(50);
    for (int i = 0; i < 10; ++i) {
      auto a = random_poly(f, 3, rng), b = random_poly(f, 3, rng);
      for (int k = 0; k < 100; ++k) {
        auto v = random_point(f, 3, rng);
        CHECK((a + b).evaluate(v) == f.add(a.evaluate(v), b.evaluate(v)));
        CHECK((a * b).evaluate(v) == f.mul(a.evaluate(v), b.evaluate(v)));
      }
    }
  }

  TEST_CASE("orders") {
    Monomial a{2, 0, 1}, b{1, 2, 0}, c{0, 0, 3};
    CHECK(MonomialOrder::lex().less(b, a));
    CHECK(MonomialOrder::grevlex().less(c, b));  // same degree, c has the larger last exponent
    CHECK(MonomialOrder::grevlex().less(Monomial{1, 0, 0}, Monomial{0, 0, 2}));
    auto elim = MonomialOrder::elimination(1);
    CHECK(elim.less(Monomial{0, 5, 5}, Monomial{1, 0, 0}));
    PrimeField f(7);
    auto g = parse("x0*x1 + x2^3", default_variable_names(3), f, MonomialOrder::lex());
    CHECK(g.leading_monomial() == Monomial{1, 1, 0});
    CHECK(g.with_order(MonomialOrder::grevlex()).leading_monomial() == Monomial{0, 0, 3});
  }
}
