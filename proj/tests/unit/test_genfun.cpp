#include <doctest.h>

#include "polyharm/expr_parser.hpp"
#include "polyharm/fit.hpp"
#include "polyharm/genfun.hpp"
#include "polyharm/kernel.hpp"
#include "polyharm/operators.hpp"

using namespace polyharm;

namespace {

const Poly1 t = Poly1::variable();

RatFun1 minus_y_over_1my4() { return RatFun1(-t, (Poly1(1) - t).pow(4)); }

// Coefficient array of an arbitrary GF by the recurrence den * g = num, as an oracle
// independent of gf_extract_coeffs.
GridFunction series_by_recurrence(const GFRat& gf, int order) {
  const Rational d00 = gf.den.coeff(0, 0);
  return [&] {
    GridFunction g(order, order);
    for (int i = 0; i <= order; ++i)
      for (int j = 0; j <= order; ++j) {
        Rational acc = gf.num.coeff(i, j);
        for (const auto& [e, c] : gf.den.terms())
          if ((e.a || e.b) && e.a <= i && e.b <= j) acc -= c * g.at(i - e.a, j - e.b);
        g.at(i, j) = acc / d00;
      }
    return g;
  }();
}

}  // namespace

TEST_CASE("kernel polynomials") {
  CHECK(kernel_poly(StepModel::simple()) == parse_poly2("(x^2*y + x*y^2 + x + y)/4 - x*y"));
  CHECK(kernel_poly(StepModel::tandem()) == parse_poly2("(x^2 + y + x*y^2)/3 - x*y"));
  CHECK(kernel_poly(StepModel::diagonal()) == parse_poly2("(x^2*y^2 + x^2 + y^2 + 1)/4 - x*y"));
}

TEST_CASE("branches are roots and conjugate") {
  for (const char* name : {"simple", "diagonal", "tandem"}) {
    const KernelData kd = kernel_data(StepModel::builtin(name));
    const Branches br = branches_x(kd);
    CHECK(kernel_at(kd, br.plus).is_zero());
    CHECK(kernel_at(kd, br.minus).is_zero());
    CHECK(br.plus.conj() == br.minus);
    CHECK(br.plus.delta() == kd.deltilde);
    // the kernel is the product through its leading coefficient
    const QuadExtFun y = QuadExtFun::rational(RatFun1(t), kd.deltilde);
    const QuadExtFun u = y + QuadExtFun::rational(RatFun1(2), kd.deltilde);
    CHECK(kernel_at(kd, u) == QuadExtFun::rational(RatFun1(kd.altilde), kd.deltilde) * (u - br.plus) * (u - br.minus));
  }
}

TEST_CASE("conformal invariants") {
  const OmegaCheck s = verify_omega_invariance(StepModel::simple());
  CHECK(s.ok());
  CHECK(s.negates.value_or(false));
  const OmegaCheck td = verify_omega_invariance(StepModel::tandem());
  CHECK(td.invariant);
  REQUIRE(td.value);
  CHECK(*td.value == RatFun1(-t, (Poly1(1) - t).pow(3)));
  CHECK_THROWS_AS(omega(StepModel::diagonal()), DomainError);
  CHECK_FALSE(verify_omega_invariance(StepModel::tandem(), RatFun1(t, (Poly1(1) - t).pow(2))).invariant);
}

TEST_CASE("X+ H(X+) for the simple walk") {
  CHECK(x_plus_h_at_x_plus(StepModel::simple(), parse_poly1("t/4")) == minus_y_over_1my4());
  CHECK(x_plus_h_at_x_plus(StepModel::simple(), t) == RatFun1(4) * minus_y_over_1my4());
}

TEST_CASE("decoupling function") {
  CHECK(verify_decoupling_tandem(tandem_decoupling_function()));
  // adding any function of omega keeps the identity; a non-invariant perturbation breaks it
  const RatFun1 w = omega(StepModel::tandem());
  CHECK(verify_decoupling_tandem(tandem_decoupling_function() + RatFun1(5) * w * w));
  CHECK_FALSE(verify_decoupling_tandem(tandem_decoupling_function() + RatFun1(t)));
}

TEST_CASE("harmonic generating functions") {
  const GFRat h = harmonic_gf(StepModel::simple(), parse_poly1("t/4"));
  const GridFunction g = gf_extract_coeffs(h, 10, 10);
  CHECK(g == GridFunction::tabulate(10, 10, parse_poly2("(i+1)*(j+1)")));
  CHECK(g == series_by_recurrence(h, 10));
  const GFRat ht = harmonic_gf(StepModel::tandem(), parse_poly1("t/3"));
  // P = t/3 gives v0 = (i+1)(j+1)(i+j+2)/2
  CHECK(gf_extract_coeffs(ht, 10, 10) == GridFunction::tabulate(10, 10, make_rational(1, 2) * expansion_term("tandem", 0)));
  // linear in P
  const GridFunction g2 = gf_extract_coeffs(harmonic_gf(StepModel::simple(), parse_poly1("t/2")), 10, 10);
  CHECK(g2 == GridFunction::tabulate(10, 10, parse_poly2("2*(i+1)*(j+1)")));
}

TEST_CASE("bi-harmonic generating functions for the simple walk") {
  const StepModel m = StepModel::simple();
  for (const char* q : {"0", "t^2", "-2*t^2-5*t/2", "t^3-t"}) {
    const GFRat v = biharmonic_gf_simple(t, parse_poly1(q));
    const GridFunction g = gf_extract_coeffs(v, 14, 14);
    CHECK(g == series_by_recurrence(v, 14));
    const GridFunction lg = apply_L_grid(m, g);
    CHECK(apply_L_grid(m, lg) == GridFunction(12, 12));
    const GridFunction h = gf_extract_coeffs(harmonic_gf(m, t), 13, 13);
    const Proportionality p = fit_proportional(lg, h);
    CHECK(p.holds());
    CHECK(*p.constant == -1);
  }
  const GFRat v = biharmonic_gf_simple(t, parse_poly1("-2*t^2-5*t/2"));
  const Poly2 cand = make_rational(-2, 3) * parse_poly2("(i+1)*(j+1)*(2*i^2+2*j^2+4*i+4*j+15)");
  CHECK(gf_verify_coeffs(v, cand, 12).ok);
  const CoeffCheck bad = gf_verify_coeffs(v, cand + Poly2::monomial(1, 3, 0), 12);
  CHECK_FALSE(bad.ok);
  // adding i^3 to the candidate changes every coefficient with i >= 1
  CHECK(bad.i + bad.j == 1);
}

TEST_CASE("bi-harmonic generating functions for tandem") {
  const StepModel m = StepModel::tandem();
  const GFRat v = biharmonic_gf_tandem(t, 0);
  const GridFunction g = gf_extract_coeffs(v, 12, 12);
  const Poly2 ref =
      parse_poly2("(j+1)*(i+1)*(i+j+2)*(2*i^3+3*i^2*j+14*i^2+5*i*j+24*i-3*i*j^2-2*j^3-4*j^2+6*j)");
  const Proportionality p = fit_proportional(g, GridFunction::tabulate(12, 12, ref));
  REQUIRE(p.holds());
  CHECK(*p.constant == make_rational(-3, 80));
  CHECK(polyharmonic_order(m, ref) == 2);
  // the corrected Q gives -v1; the printed one does not
  const GFRat good = biharmonic_gf_tandem(parse_poly1("-8*t/9"), parse_poly1("-8*t^2/3+76*t/27"));
  CHECK(gf_extract_coeffs(good, 12, 12) == GridFunction::tabulate(12, 12, -expansion_term("tandem", 1)));
  const GFRat printed = biharmonic_gf_tandem(parse_poly1("-8*t/9"), parse_poly1("8*t^2/3+76*t/27"));
  CHECK_FALSE(fit_proportional(gf_extract_coeffs(printed, 12, 12), GridFunction::tabulate(12, 12, expansion_term("tandem", 1))).holds());
}

TEST_CASE("generating function error paths") {
  const GFRat odd{Poly2(1), parse_poly2("1 - x - y")};
  CHECK_THROWS_AS(gf_extract_coeffs(odd, 3, 3), DomainError);
  CHECK(gf_verify_coeffs(odd, Poly2(1), 0).ok);
  const Proportionality none = fit_proportional(GridFunction::tabulate(3, 3, Poly2(1)), GridFunction(3, 3));
  CHECK_FALSE(none.holds());
  CHECK(fit_proportional(GridFunction(3, 3), GridFunction(3, 3)).constant == Rational(0));
}
