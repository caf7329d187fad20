#include <doctest.h>

#include <algorithm>
#include <random>

#include "polyharm/expr_parser.hpp"
#include "polyharm/fit.hpp"
#include "polyharm/grid.hpp"
#include "polyharm/operators.hpp"
#include "polyharm/step_model.hpp"

using namespace polyharm;

TEST_CASE("built-in models satisfy the model invariants") {
  for (const char* name : {"simple", "diagonal", "tandem"}) {
    const StepModel m = StepModel::builtin(name);
    Rational total = 0, dx = 0, dy = 0;
    for (std::size_t k = 0; k < m.steps().size(); ++k) {
      total += m.weights()[k];
      dx += m.weights()[k] * m.steps()[k].dx;
      dy += m.weights()[k] * m.steps()[k].dy;
    }
    CHECK(total == 1);
    CHECK(dx == 0);
    CHECK(dy == 0);
    CHECK(StepModel::from_json(m.to_json()).weights() == m.weights());
  }
  CHECK(StepModel::simple().gamma() == 4);
  CHECK(StepModel::tandem().gamma() == 3);
  CHECK(StepModel::tandem().weight(-1, 1) == make_rational(1, 3));
  CHECK(StepModel::tandem().weight(1, 1) == 0);
  CHECK_THROWS_AS(StepModel::builtin("king"), DomainError);
}

TEST_CASE("invalid models are rejected") {
  const Rational third = make_rational(1, 3), half = make_rational(1, 2);
  // drift
  CHECK_THROWS_AS(StepModel("drift", {{1, 0}, {0, 1}, {-1, 0}}, {third, third, third}, 3), DomainError);
  // three consecutive zero weights around the compass
  CHECK_THROWS_AS(StepModel("line", {{1, 0}, {-1, 0}}, {half, half}, 2), DomainError);
  // weights not summing to one
  CHECK_THROWS(StepModel("mass", {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {third, third, third, third}, 4));
  CHECK_THROWS_AS(StepModel::from_json(Json::parse(R"({"name":"x","steps":[[1]],"weights":["1"],"gamma":"1"})")), ParseError);
}

TEST_CASE("operator L on the harmonic polynomials") {
  CHECK(polyharmonic_order(StepModel::simple(), parse_poly2("(i+1)*(j+1)")) == 1);
  CHECK(polyharmonic_order(StepModel::simple(), expansion_term("simple", 1)) == 2);
  CHECK(polyharmonic_order(StepModel::diagonal(), expansion_term("diagonal", 1)) == 2);
  CHECK(polyharmonic_order(StepModel::tandem(), expansion_term("tandem", 1)) == 2);
  CHECK(polyharmonic_order(StepModel::simple(), Poly2()) == 0);
  CHECK(apply_P(StepModel::simple(), 1) == Poly2(1));
  CHECK_THROWS_AS(polyharmonic_order(StepModel::simple(), Poly2::x(), 0), DomainError);
  // apply_L_power agrees with iteration
  const Poly2 f = parse_poly2("i^4*j^2 + 3*i*j^3");
  CHECK(apply_L_power(StepModel::tandem(), f, 2) == apply_L(StepModel::tandem(), apply_L(StepModel::tandem(), f)));
}

TEST_CASE("zero drift lowers degree by two, so order <= floor(d/2)+1") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> c(-4, 4);
  for (const char* name : {"simple", "diagonal", "tandem"}) {
    const StepModel m = StepModel::builtin(name);
    for (int d = 0; d <= 7; ++d) {
      Poly2 f;
      for (int a = 0; a <= d; ++a) f += Poly2::monomial(c(rng), a, d - a);
      f += Poly2::monomial(1, d, 0);
      if (f.degree() < d) continue;
      CHECK(apply_L(m, f).degree() <= std::max(d - 2, -1));
      const auto order = polyharmonic_order(m, f);
      REQUIRE(order);
      CHECK(*order <= d / 2 + 1);
      CHECK(*order <= default_order_cap(f));
    }
  }
}

TEST_CASE("L is linear") {
  const StepModel m = StepModel::diagonal();
  const Poly2 f = parse_poly2("i^3*j - 2*j^2"), g = parse_poly2("(i+j)^4");
  CHECK(apply_L(m, Rational(3) * f - g) == Rational(3) * apply_L(m, f) - apply_L(m, g));
}

TEST_CASE("grid harmonicity with Dirichlet boundary") {
  for (const char* name : {"simple", "diagonal", "tandem"}) {
    const StepModel m = StepModel::builtin(name);
    const GridFunction v0 = GridFunction::tabulate(12, 12, expansion_term(name, 0));
    const GridCheckReport r = check_harmonic_grid(m, v0);
    CHECK(r.harmonic());
    CHECK(r.checked_cells == 12 * 12);
    // L v1 as a grid equals the polynomial identity because v1 vanishes on i = -1 and j = -1
    const GridFunction v1 = GridFunction::tabulate(12, 12, expansion_term(name, 1));
    CHECK(apply_L_grid(m, v1) == GridFunction::tabulate(11, 11, apply_L(m, expansion_term(name, 1))));
  }
  // a polynomial that is harmonic but not zero on the boundary fails on the grid
  const GridFunction c = GridFunction::tabulate(6, 6, Poly2(1));
  const GridCheckReport r = check_harmonic_grid(StepModel::simple(), c);
  CHECK_FALSE(r.harmonic());
  CHECK(r.violations.front().i == 0);
  CHECK_THROWS_AS(check_harmonic_grid(StepModel::simple(), c, 6, 6), DomainError);
}
