#include "polyharm/laplace.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "polyharm/rational.hpp"

namespace polyharm {

CovMatrix::CovMatrix(double a, double b, double c) : s11(a), s12(b), s22(c) {
  if (!(s11 > 0) || !(s22 > 0)) throw DomainError("covariance needs s11 > 0 and s22 > 0");
  if (!(det() > 0)) throw DomainError("covariance determinant must be positive");
}

BmRoots bm_roots(const CovMatrix& cov) {
  const double sd = std::sqrt(cov.det());
  BmRoots r;
  r.c_plus = Complex(-cov.s12, sd) / cov.s22;
  r.c_minus = Complex(-cov.s12, -sd) / cov.s22;
  r.c = std::sqrt(cov.s11 / cov.s22);
  r.theta = std::acos(-cov.s12 / std::sqrt(cov.s11 * cov.s22));
  return r;
}

Complex bm_kernel_gamma(const CovMatrix& cov, Complex x, Complex y) {
  return 0.5 * (cov.s11 * x * x + 2.0 * cov.s12 * x * y + cov.s22 * y * y);
}

Complex eval_complex(const Poly1& p, Complex z) {
  Complex acc = 0;
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + to_double(c[k]);
  return acc;
}

Complex principal_pow(Complex z, double a) {
  if (z == Complex(0, 0)) throw DomainError("power of zero on the branch point");
  double arg = std::atan2(z.imag(), z.real());
  if (z.imag() == 0 && z.real() < 0) arg = std::numbers::pi;
  return std::polar(std::pow(std::abs(z), a), a * arg);
}

namespace {

double exponent_a(const BmRoots& r) { return std::numbers::pi / r.theta; }

bool near(Complex u, Complex v, Complex scale) { return std::abs(u - v) <= 1e-12 * std::max(1.0, std::abs(scale)); }

}  // namespace

Complex laplace_h_on_root(const CovMatrix& cov, const Poly1& p, Complex x, int sign) {
  const BmRoots r = bm_roots(cov);
  const double a = exponent_a(r);
  const Complex cs = sign > 0 ? r.c_plus : r.c_minus;
  const Complex co = sign > 0 ? r.c_minus : r.c_plus;
  const Complex y0 = cs * x;
  const Complex dp = eval_complex(p.derivative(), principal_pow(y0, -a));
  return -(cov.s11 / cov.s22) * a / (cs * x - co * x) * dp * principal_pow(y0, -a - 1);
}

Complex laplace_h(const CovMatrix& cov, const Poly1& p, Complex x, Complex y) {
  const BmRoots r = bm_roots(cov);
  if (near(y, r.c_plus * x, x)) return laplace_h_on_root(cov, p, x, +1);
  if (near(y, r.c_minus * x, x)) return laplace_h_on_root(cov, p, x, -1);
  const double a = exponent_a(r);
  const Complex g = bm_kernel_gamma(cov, x, y);
  const Complex inner = -1.0 / (std::pow(r.c, a) * principal_pow(x, a));
  return 0.5 * cov.s11 * (eval_complex(p, principal_pow(y, -a)) - eval_complex(p, inner)) / g;
}

Complex big_f(const CovMatrix& cov, const Poly1& p, Complex y) {
  const BmRoots r = bm_roots(cov);
  const double a = exponent_a(r);
  const Complex k = r.c_plus * r.c_minus / ((r.c_plus - r.c_minus) * (r.c_plus - r.c_minus));
  return -(cov.s11 / cov.s22) * a * k * eval_complex(p.derivative(), principal_pow(y, -a)) * principal_pow(y, -a - 2);
}

Complex laplace_v(const CovMatrix& cov, const Poly1& p, const Poly1& q, Complex x, Complex y) {
  const BmRoots r = bm_roots(cov);
  const double a = exponent_a(r);
  const Complex cx = r.c_plus * x;
  const Complex g = big_f(cov, p, y) - big_f(cov, p, cx) - laplace_h_on_root(cov, p, x, +1);
  const Complex num = eval_complex(q, principal_pow(y, -a)) - eval_complex(q, principal_pow(cx, -a)) + g + laplace_h(cov, p, x, y);
  return num / bm_kernel_gamma(cov, x, y);
}

Complex laplace_v_quadrant(const Poly1& p, const Poly1& q, Complex x, Complex y) {
  const CovMatrix id = CovMatrix::identity();
  const Complex x2 = x * x, y2 = y * y;
  const Complex num = eval_complex(q, 1.0 / y2) - eval_complex(q, -1.0 / x2) +
                      2.0 / (x2 * x2) * eval_complex(p.derivative(), -1.0 / x2) + 2.0 * laplace_h(id, p, x, y);
  return num / (x2 + y2);
}

Poly1 quadrant_q_to_general_q(const Poly1& p, const Poly1& q) {
  return q * make_rational(1, 2) - Poly1::monomial(make_rational(1, 2), 2) * p.derivative();
}

FunctionalResiduals verify_functional_eqs(const CovMatrix& cov, const Poly1& p, const Poly1& q,
                                          const std::vector<Complex>& samples, double f_scale) {
  const BmRoots r = bm_roots(cov);
  const double a = exponent_a(r);
  auto l1h = [&](Complex y) { return eval_complex(p, principal_pow(y, -a)); };
  auto l2h = [&](Complex x) { return -(cov.s11 / cov.s22) * eval_complex(p, -1.0 / (std::pow(r.c, a) * principal_pow(x, a))); };
  auto half_l1v = [&](Complex y) { return eval_complex(q, principal_pow(y, -a)) + f_scale * big_f(cov, p, y); };
  auto half_l2v = [&](Complex x) {
    const Complex cx = r.c_plus * x;
    return -eval_complex(q, principal_pow(cx, -a)) - f_scale * big_f(cov, p, cx) - laplace_h_on_root(cov, p, x, +1);
  };
  FunctionalResiduals res;
  for (const Complex& x : samples) {
    for (int sign : {+1, -1}) {
      const Complex y = (sign > 0 ? r.c_plus : r.c_minus) * x;
      res.h_equation = std::max(res.h_equation, std::abs(0.5 * cov.s11 * l1h(y) + 0.5 * cov.s22 * l2h(x)));
      res.v_equation = std::max(res.v_equation, std::abs(half_l1v(y) + half_l2v(x) + laplace_h_on_root(cov, p, x, sign)));
    }
    res.boundary = std::max(res.boundary, std::abs(l1h(r.c_plus * x) - l1h(r.c_minus * x)));
  }
  return res;
}

double mu2_from_mu1(const CovMatrix& cov, double mu1) {
  const double a = exponent_a(bm_roots(cov));
  return mu1 * std::pow(cov.s11 / cov.s22, 1 - a / 2);
}

double degree1_residual(const CovMatrix& cov, double mu1, double mu2, const std::vector<Complex>& samples) {
  const BmRoots r = bm_roots(cov);
  const double a = exponent_a(r);
  double worst = 0;
  for (const Complex& x : samples)
    for (const Complex& c : {r.c_plus, r.c_minus})
      worst = std::max(worst, std::abs(cov.s22 * mu2 * principal_pow(x, -a) + cov.s11 * mu1 * principal_pow(c * x, -a)));
  return worst;
}

double laplace_transform_numeric(const std::function<double(double, double)>& f, double x, double y, double tol) {
  if (!(x > 0) || !(y > 0) || !(tol > 0)) throw DomainError("numeric Laplace transform needs x, y, tol > 0");
  const double big_r = std::log(1.0 / (1e-3 * tol)) / std::min(x, y);
  using gk = boost::math::quadrature::gauss_kronrod<double, 31>;
  auto outer = [&](double u) {
    auto inner = [&](double v) { return f(u, v) * std::exp(-(x * u + y * v)); };
    return gk::integrate(inner, 0.0, big_r, 10, 1e-13);
  };
  return gk::integrate(outer, 0.0, big_r, 10, 1e-12);
}

}  // namespace polyharm
