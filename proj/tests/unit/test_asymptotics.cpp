#include <doctest.h>

#include <cmath>

#include "polyharm/ballot.hpp"
#include "polyharm/counts.hpp"
#include "polyharm/expr_parser.hpp"
#include "polyharm/fit.hpp"
#include "polyharm/operators.hpp"

using namespace polyharm;

namespace {

using Series = std::vector<Rational>;

// Truncated power series quotient a / b with b[0] != 0.
Series divide(const Series& a, const Series& b) {
  Series q(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    Rational acc = a[n];
    for (std::size_t k = 1; k <= n && k < b.size(); ++k) acc -= b[k] * q[n - k];
    q[n] = acc / b[0];
  }
  return q;
}

}  // namespace

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == make_rational(-1, 2));
  CHECK(bernoulli(2) == make_rational(1, 6));
  CHECK(bernoulli(4) == make_rational(-1, 30));
  CHECK(bernoulli(12) == make_rational(-691, 2730));
  for (int n = 3; n <= 21; n += 2) CHECK(bernoulli(n) == 0);
}

TEST_CASE("alpha(m) are the coefficients of -log cos") {
  // (-log cos y)' = tan y = sin y / cos y
  constexpr int kTerms = 14;
  Series sin_s(kTerms), cos_s(kTerms);
  for (int n = 0; n < kTerms; ++n) {
    const Rational inv = Rational(1) / Rational(factorial(static_cast<unsigned long>(n)));
    if (n % 2) sin_s[n] = (n / 2) % 2 ? -inv : inv;
    else cos_s[n] = (n / 2) % 2 ? -inv : inv;
  }
  const Series tan_s = divide(sin_s, cos_s);
  for (int m = 1; 2 * m - 1 < kTerms; ++m) CHECK(alpha(m) == tan_s[2 * m - 1] / (2 * m));
  CHECK(alpha(1) == make_rational(1, 2));
  CHECK(alpha(3) == make_rational(1, 45));
  CHECK_THROWS_AS(alpha(0), DomainError);
}

TEST_CASE("Bell table and derived constants") {
  const BellTable bell(6);
  CHECK(bell.at(0, 0) == 1);
  CHECK(bell.at(1, 1) == make_rational(1, 12));
  CHECK(bell.at(2, 2) == make_rational(1, 144));
  CHECK(bell.at(2, 3) == 0);
  CHECK_THROWS_AS(bell.at(7, 1), DomainError);
  // B_{s,s} = x_1^s
  for (int s = 0; s <= 6; ++s) CHECK(bell.at(s, s) == pow(make_rational(1, 12), s));
  CHECK(c_alpha(0, 0) == 1);
  CHECK(c_alpha(0, 1) == make_rational(1, 6));
  CHECK(c_alpha(1, 1) == make_rational(-1, 12));
  CHECK(gaussian_moment(0) == 1);
  CHECK(gaussian_moment(3) == 15);
}

TEST_CASE("h_j and v_diag polynomials") {
  CHECK(h_poly(0) == parse_poly1("t+1"));
  CHECK(h_poly(1) == parse_poly1("(t+1)*(2*t^2+4*t+9)/4"));
  for (int j = 0; j <= 4; ++j) {
    CHECK(h_poly(j).degree() == 2 * j + 1);
    // odd symmetry about lambda = -1: each h_j vanishes there
    CHECK(h_poly(j)(-1) == 0);
    // 1-D polyharmonic of order j+1
    Poly1 f = h_poly(j);
    for (int k = 0; k < j; ++k) f = laplacian_1d(f);
    CHECK_FALSE(f.is_zero());
    CHECK(laplacian_1d(f).is_zero());
  }
  CHECK(v_diag(0) == parse_poly2("(i+1)*(j+1)"));
  CHECK(v_diag(1) == parse_poly2("(i+1)*(j+1)*(i^2+j^2+2*i+2*j+9)/2"));
  for (int p = 0; p <= 3; ++p) CHECK(polyharmonic_order(StepModel::diagonal(), v_diag(p)) == p + 1);
}

TEST_CASE("ballot truncation error shrinks with J and n") {
  for (long lambda : {0L, 3L}) {
    const long n = 400 + lambda % 2;
    double previous = 1;
    for (int big_j = 0; big_j <= 3; ++big_j) {
      const double e = dyck_truncation_error(lambda, n, big_j);
      CHECK(e < previous);
      previous = e;
    }
    CHECK(dyck_truncation_error(lambda, 2 * n - lambda % 2, 1) < dyck_truncation_error(lambda, n, 1));
  }
  CHECK_THROWS_AS(dyck_truncation_error(1, 400, 0), DomainError);
}

TEST_CASE("fit recovers a synthetic expansion exactly") {
  ExpansionSpec spec = expansion_spec("simple");
  const std::vector<Rational> truth = {make_rational(3, 2), make_rational(-7, 5), make_rational(11, 3)};
  auto count = [&](long n) -> Rational {
    const Rational big_n = Rational(n) / spec.scale;
    Rational s = 0;
    for (std::size_t p = 0; p < truth.size(); ++p) s += truth[p] / pow(big_n, static_cast<long>(p));
    return s * pow(spec.gamma, n) / pow(big_n, spec.alpha0);
  };
  CHECK(fit_exact(spec, count, {40, 42, 44}) == truth);
  CHECK_THROWS_AS(fit_exact(spec, count, {40, 40, 44}), DomainError);
  CHECK_THROWS_AS(fit_expansion(spec, 0, 0, count, {41, 43}, {}, [](long n) { return n % 2 == 0; }), DomainError);
}

TEST_CASE("fit of closed-form counts reproduces v0 and v1") {
  for (const char* name : {"simple", "diagonal", "tandem"}) {
    const ExpansionFit fit = fit_builtin(name, 1, 3, 4, 1200);
    const double v0 = to_double(expansion_term(name, 0)(1, 3)), v1 = to_double(expansion_term(name, 1)(1, 3));
    CHECK(fit.values[0] == doctest::Approx(v0).epsilon(1e-6));
    CHECK(fit.values[1] == doctest::Approx(v1).epsilon(1e-3));
    for (long n : fit.nodes) CHECK(reachable(name, 1, 3, n));
    CHECK(fit.nodes2.back() < fit.nodes.front());
  }
  CHECK_THROWS_AS(default_nodes([](long) { return false; }, 2, 100), DomainError);
  // i and j of different parity are never reachable for the diagonal walk
  CHECK_THROWS_AS(fit_builtin("diagonal", 1, 2, 3, 500), DomainError);
  CHECK_THROWS_AS(expansion_term("simple", 2), DomainError);
}
