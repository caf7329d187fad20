#include <doctest.h>

#include <cmath>
#include <numbers>

#include "polyharm/almansi.hpp"
#include "polyharm/expr_parser.hpp"
#include "polyharm/heat_kernel.hpp"
#include "polyharm/laplace.hpp"
#include "polyharm/monte_carlo.hpp"
#include "polyharm/wedge.hpp"

using namespace polyharm;

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("eigenfunctions are orthonormal on the arc") {
  const Wedge w(2.0);
  constexpr int kN = 4000;
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) {
      double s = 0;
      for (int k = 0; k < kN; ++k) {
        const double th = (k + 0.5) * w.xi / kN;
        s += m_j(w, a, th) * m_j(w, b, th);
      }
      CHECK(s * w.xi / kN == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-6));
    }
  CHECK(eigen(w, 3).beta == doctest::Approx(3 * kPi / 2.0));
  CHECK_THROWS_AS(m_j(w, 1, 2.5), DomainError);
}

TEST_CASE("f_{mu,j} Laplacian identity") {
  const Wedge w = Wedge::quadrant();
  const std::vector<PolarPoint> pts = {{0.7, 0.3}, {1.3, 1.1}, {1.9, 0.8}};
  CHECK(laplacian_check_fmuj(w, eigen(w, 2).b, 2, pts, 1e-4) < 1e-6);
  // central-difference truncation grows like mu^4 r^(mu-4) h^2
  CHECK(laplacian_check_fmuj(w, eigen(w, 2).b + 2, 2, pts, 1e-4) < 1e-5);
}

TEST_CASE("polynomial harmonics") {
  CHECK(f2jj_cartesian(1) == parse_poly2("2*x*y"));
  CHECK(f2jj_cartesian(2) == parse_poly2("4*x^3*y - 4*x*y^3"));
  for (int j = 1; j <= 4; ++j) {
    const double r = 1.3, th = 0.4;
    CHECK(f2jj_cartesian(j).eval(r * std::cos(th), r * std::sin(th)) == doctest::Approx(std::pow(r, 2 * j) * std::sin(2 * j * th)));
  }
}

TEST_CASE("exponent set merges collisions") {
  const auto e = exponent_set(Wedge::quadrant(), 6.0);
  // beta_j = 2j: values 3, 4, 5, 6 with 5 and 6 reached from j = 1 and 2
  REQUIRE(e.size() == 4);
  CHECK(e.front().value == doctest::Approx(3));
  CHECK_FALSE(e.front().collision());
  CHECK(e[2].collision());
}

TEST_CASE("Almansi decomposition") {
  const Poly2 r2 = radius_squared();
  const Poly2 h0 = parse_poly2("x^2 - y^2 + 3*x"), h1 = f2jj_cartesian(2), h2 = parse_poly2("y");
  const std::vector<Poly2> parts = almansi_decompose(h0 + r2 * h1 + r2 * r2 * h2, 3);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == h0);
  CHECK(parts[1] == h1);
  CHECK(parts[2] == h2);
  CHECK(almansi_recompose(parts) == h0 + r2 * h1 + r2 * r2 * h2);
  CHECK_THROWS_AS(almansi_decompose(r2 * r2, 2), DomainError);
  CHECK_THROWS_AS(almansi_decompose(Poly2::x(), 0), DomainError);
}

TEST_CASE("modified Bessel function") {
  CHECK(bessel_I(0, 1.0) == doctest::Approx(1.2660658777520084).epsilon(1e-14));
  CHECK(bessel_I(0.5, 2.0) == doctest::Approx(std::sqrt(2 / (kPi * 2.0)) * std::sinh(2.0)).epsilon(1e-14));
  CHECK(bessel_I(2, 0.0) == 0);
}

TEST_CASE("heat kernel of the half plane matches the image formula") {
  const Wedge half(kPi);
  const PolarPoint x{1.2, 0.9}, y{0.7, 2.1};
  const double t = 0.8;
  const double x1 = x.r * std::cos(x.theta), x2 = x.r * std::sin(x.theta);
  const double y1 = y.r * std::cos(y.theta), y2 = y.r * std::sin(y.theta);
  auto g = [&](double a, double b) { return std::exp(-(a * a + b * b) / (2 * t)) / (2 * kPi * t); };
  const double image = g(x1 - y1, x2 - y2) - g(x1 - y1, x2 + y2);
  CHECK(heat_kernel(half, x, y, t) == doctest::Approx(image).epsilon(1e-12));
  // symmetric in its two points
  CHECK(heat_kernel(Wedge(2.3), x, {0.7, 1.5}, t) == doctest::Approx(heat_kernel(Wedge(2.3), {0.7, 1.5}, x, t)).epsilon(1e-13));
}

TEST_CASE("survival quadrature against reflection") {
  const PolarPoint s{std::sqrt(2.0), kPi / 4};
  CHECK(survival_quadrature(Wedge::quadrant(), s, 1.0) == doctest::Approx(std::pow(std::erf(1 / std::sqrt(2.0)), 2)).epsilon(1e-8));
  CHECK(survival_quadrature(Wedge(kPi), {0.5, kPi / 2}, 2.0) == doctest::Approx(std::erf(0.5 / 2.0)).epsilon(1e-8));
}

TEST_CASE("Monte Carlo is deterministic and thread independent") {
  McOptions o;
  o.paths = 4000;
  o.dt = 1e-3;
  o.seed = 99;
  o.threads = 1;
  const McResult a = mc_survival(Wedge::quadrant(), {1.0, 0.8}, 1.0, o);
  o.threads = 3;
  const McResult b = mc_survival(Wedge::quadrant(), {1.0, 0.8}, 1.0, o);
  CHECK(a.estimate == b.estimate);
  CHECK(a.std_error == b.std_error);
  CHECK(a.steps == 1000);
  o.dt = 0.1;
  CHECK_THROWS_AS(mc_survival(Wedge::quadrant(), {1.0, 0.8}, 1.0, o), DomainError);
  CHECK_THROWS_AS(mc_survival(Wedge(4.0), {1.0, 0.8}, 1.0, McOptions{}), DomainError);
}

TEST_CASE("Laplace transform of a harmonic function, numerically") {
  // h = xy has transform 1/(x^2 y^2), obtained from P(t) = t
  const double got = laplace_transform_numeric([](double u, double v) { return u * v; }, 1.5, 2.0, 1e-10);
  CHECK(got == doctest::Approx(1 / (1.5 * 1.5 * 4.0)).epsilon(1e-8));
  CHECK(std::abs(laplace_h(CovMatrix::identity(), parse_poly1("t"), 1.5, 2.0) - got) < 1e-8);
}

TEST_CASE("Brownian kernel roots") {
  const CovMatrix cov(1, -0.5, 1);
  const BmRoots r = bm_roots(cov);
  CHECK(r.theta == doctest::Approx(kPi / 3));
  CHECK(std::abs(bm_kernel_gamma(cov, 1.0, r.c_plus)) < 1e-14);
  CHECK(std::abs(bm_kernel_gamma(cov, 1.0, r.c_minus)) < 1e-14);
  // (c_+ x)^{pi/theta} = (c_- x)^{pi/theta} = -(c x)^{pi/theta}
  const double a = kPi / r.theta;
  CHECK(std::abs(principal_pow(r.c_plus * 1.3, a) - principal_pow(r.c_minus * 1.3, a)) < 1e-12);
  CHECK(std::abs(principal_pow(r.c_plus * 1.3, a) + std::pow(r.c * 1.3, a)) < 1e-12);
  CHECK_THROWS_AS(CovMatrix(1, 1, 1), DomainError);
}

TEST_CASE("laplace_h is continuous across the kernel roots") {
  const CovMatrix cov(2, 0.4, 1);
  const BmRoots r = bm_roots(cov);
  const Poly1 p = parse_poly1("t + 3*t^2");
  for (int sign : {1, -1}) {
    const Complex root = (sign > 0 ? r.c_plus : r.c_minus) * 1.1;
    const Complex near = laplace_h(cov, p, 1.1, root + Complex(1e-6, 1e-6));
    CHECK(std::abs(near - laplace_h_on_root(cov, p, 1.1, sign)) < 1e-4 * std::abs(near));
  }
}
