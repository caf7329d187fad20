#include <doctest.h>

#include <random>

#include "polyharm/expr_parser.hpp"
#include "polyharm/linsolve.hpp"
#include "polyharm/quadext.hpp"
#include "polyharm/serialize.hpp"

using namespace polyharm;

namespace {

Poly1 random_poly1(std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> c(-5, 5), d(0, max_deg);
  std::vector<Rational> v;
  for (int k = d(rng); k >= 0; --k) v.push_back(make_rational(c(rng), 1 + (c(rng) + 5) % 3));
  return Poly1(v);
}

Poly2 random_poly2(std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> c(-6, 6);
  Poly2 p;
  for (int a = 0; a <= max_deg; ++a)
    for (int b = 0; a + b <= max_deg; ++b) p += Poly2::monomial(make_rational(c(rng), 1 + (c(rng) + 6) % 4), a, b);
  return p;
}

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(Rational(5)) == "5/1");
  CHECK(parse_rational("-7/21") == make_rational(-1, 3));
  CHECK_THROWS_AS(make_rational(1, 0), DomainError);
  CHECK_THROWS_AS(parse_rational("1/x"), ParseError);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(5, 7) == 0);
  CHECK(pow(make_rational(2, 3), -2) == make_rational(9, 4));
}

TEST_CASE("Poly1 ring laws at random points") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const Poly1 p = random_poly1(rng, 5), q = random_poly1(rng, 4);
    const Rational t = make_rational(static_cast<long>(trial) - 13, 7);
    CHECK((p * q)(t) == p(t) * q(t));
    CHECK((p + q)(t) == p(t) + q(t));
    CHECK(p.compose(q)(t) == p(q(t)));
    if (!q.is_zero()) {
      const auto [quo, rem] = Poly1::divmod(p, q);
      CHECK(quo * q + rem == p);
      CHECK(rem.degree() < q.degree());
    }
  }
  CHECK(Poly1::variable().pow(3).derivative() == Poly1::monomial(3, 2));
  CHECK(gcd(parse_poly1("(t-1)*(t+2)"), parse_poly1("(t-1)*(t+5)*3")) == parse_poly1("t-1"));
  CHECK_THROWS_AS(Poly1::divmod(Poly1::variable(), Poly1()), DomainError);
}

TEST_CASE("Poly2 arithmetic, shifts and derivatives") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const Poly2 p = random_poly2(rng, 4), q = random_poly2(rng, 3);
    const Rational x = make_rational(trial - 7, 3), y = make_rational(5 - trial, 2);
    CHECK((p * q)(x, y) == p(x, y) * q(x, y));
    CHECK(p.shift(1, -1)(x, y) == p(x + 1, y - 1));
    CHECK((p * q).diff_x() == p.diff_x() * q + p * q.diff_x());
    if (!q.is_zero()) CHECK(Poly2::exact_divide(p * q, q) == p);
  }
  CHECK_FALSE(Poly2::exact_divide(Poly2::x() + 1, Poly2::y()).has_value());
  const Poly2 p = parse_poly2("x^3*y + 2*x*y^2 - 1");
  CHECK(p.degree() == 4);
  CHECK(p.truncate_total_degree(3) == parse_poly2("2*x*y^2 - 1"));
  CHECK(p.coeffs_in_x().size() == 4);
}

TEST_CASE("RatFun1 normalization") {
  const RatFun1 f(parse_poly1("2*t^2-2"), parse_poly1("4*t+4"));
  CHECK(f == RatFun1(parse_poly1("t/2-1/2")));
  CHECK(f.is_polynomial());
  const RatFun1 g(parse_poly1("1"), parse_poly1("1-t"));
  CHECK(g.derivative() == RatFun1(parse_poly1("1"), parse_poly1("(1-t)^2")));
  CHECK(g.compose(RatFun1(parse_poly1("t^2"))) == RatFun1(1, parse_poly1("1-t^2")));
  CHECK_THROWS_AS(g(1), DomainError);
}

TEST_CASE("quadratic extension is a field with an automorphism") {
  const Poly1 delta = parse_poly1("t^4 - 3*t + 1");
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const QuadExtFun u(RatFun1(random_poly1(rng, 3), parse_poly1("t+2")), RatFun1(random_poly1(rng, 2)), delta);
    const QuadExtFun v(RatFun1(random_poly1(rng, 2)), RatFun1(random_poly1(rng, 3), parse_poly1("t^2+1")), delta);
    CHECK((u * v).conj() == u.conj() * v.conj());
    CHECK((u + v).conj() == u.conj() + v.conj());
    CHECK((u * v).norm() == u.norm() * v.norm());
    if (!v.is_zero()) CHECK((u / v) * v == u);
  }
  const QuadExtFun s = QuadExtFun::sqrt_delta(delta);
  CHECK(s * s == QuadExtFun::rational(RatFun1(delta), delta));
  CHECK(evaluate(parse_poly1("t^2 - 1"), s) == QuadExtFun::rational(RatFun1(delta - 1), delta));
  CHECK_THROWS_AS(s + QuadExtFun::sqrt_delta(parse_poly1("t")), CompositionError);
  CHECK_THROWS_AS(compose(RatFun1(1, parse_poly1("t")), QuadExtFun::rational(RatFun1(), delta)), PoleError);
}

TEST_CASE("exact linear solve") {
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<int> c(-9, 9);
  for (int n = 1; n <= 6; ++n) {
    RationalMatrix a(n, std::vector<Rational>(n));
    std::vector<Rational> x(n), b(n);
    for (auto& row : a)
      for (auto& v : row) v = c(rng);
    for (auto& v : x) v = make_rational(c(rng), 3);
    for (int r = 0; r < n; ++r)
      for (int k = 0; k < n; ++k) b[r] += a[r][k] * x[k];
    const LinearSolution s = solve_exact(a, b);
    REQUIRE(s.solution);
    for (int r = 0; r < n; ++r) {
      Rational acc = 0;
      for (int k = 0; k < n; ++k) acc += a[r][k] * (*s.solution)[k];
      CHECK(acc == b[r]);
    }
  }
  const LinearSolution inconsistent = solve_exact({{1, 1}, {2, 2}}, {1, 3});
  CHECK_FALSE(inconsistent.solution);
  const LinearSolution rank1 = solve_exact({{1, 1}, {2, 2}}, {1, 2});
  CHECK(rank1.solution);
  CHECK_FALSE(rank1.unique());
}

TEST_CASE("expression parser") {
  CHECK(parse_poly2("(i+1)*(j+1)") == (Poly2::x() + 1) * (Poly2::y() + 1));
  CHECK(parse_poly2("x^2 - y/3") == parse_poly2("i^2 - 1/3*j"));
  CHECK(parse_poly2("-(i - 2)^3") == -(Poly2::x() - 2).pow(3));
  CHECK(parse_poly1("t^2/2 + 1") == Poly1(std::vector<Rational>{1, 0, make_rational(1, 2)}));
  CHECK_THROWS_AS(parse_poly2("i^-1"), ParseError);
  CHECK_THROWS_AS(parse_poly2("i/j"), ParseError);
  CHECK_THROWS_AS(parse_poly2("(i+1"), ParseError);
  CHECK_THROWS_AS(parse_poly2("k+1"), ParseError);
  CHECK_THROWS_AS(parse_poly2("1/0"), ParseError);
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 10; ++trial) {
    const Poly2 p = random_poly2(rng, 3);
    CHECK(parse_poly2(to_string(p)) == p);
  }
}

TEST_CASE("serialization round trip") {
  const Poly2 p = parse_poly2("1/4*(i+1)*(j-2)^2");
  CHECK(poly2_from_json(poly2_to_json(p)) == p);
  CHECK(poly2_to_json(p)[0]["c"] == "1/1");  // constant term first
  CHECK(poly1_to_json(parse_poly1("t/3-1")) == Json::array({"-1/1", "1/3"}));
}
