#include "polyharm/heat_kernel.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "polyharm/rational.hpp"

namespace polyharm {

double bessel_I(double beta, double z, double eps) {
  if (beta < 0 || z < 0) throw DomainError("bessel_I needs beta >= 0 and z >= 0");
  if (eps <= 0) throw DomainError("bessel_I needs eps > 0");
  if (z == 0) return beta == 0 ? 1.0 : 0.0;
  const double lz = std::log(z / 2);
  double sum = 0;
  for (int m = 0; m < 1000000; ++m) {
    const double lt = (2.0 * m + beta) * lz - std::lgamma(m + 1.0) - std::lgamma(m + beta + 1.0);
    if (lt > 700) throw DomainError("bessel_I overflows double range; evaluate a rescaled kernel instead");
    const double term = std::exp(lt);
    sum += term;
    if (m + 1 > z / 2 && term < eps * sum) return sum;
  }
  throw DomainError("bessel_I series did not converge");
}

namespace {

void require_inside(const Wedge& w, PolarPoint p) {
  if (!(p.r > 0) || !(p.theta > 0) || !(p.theta < w.xi)) throw DomainError("point must lie strictly inside the wedge");
}

}  // namespace

double heat_kernel(const Wedge& w, PolarPoint x, PolarPoint y, double t, const HeatKernelParams& params) {
  if (!(t > 0)) throw DomainError("time must be positive");
  require_inside(w, x);
  require_inside(w, y);
  const double z = x.r * y.r / t;
  const double lz = std::log(z / 2);
  double sum = 0;
  for (int j = 1; j <= params.max_j; ++j) {
    const EigenData e = eigen(w, j);
    sum += bessel_I(e.beta, z, params.eps) * m_j(w, j, x.theta) * m_j(w, j, y.theta);
    // I_beta(z) <= (z/2)^beta e^{z^2/(4(beta+1))} / Gamma(beta+1), |m_j| <= sqrt(2/xi)
    const double next_beta = eigen(w, j + 1).beta;
    const double lbound = next_beta * lz + z * z / (4 * (next_beta + 1)) - std::lgamma(next_beta + 1) + std::log(2 / w.xi);
    if (next_beta + 1 > z / 2 && std::exp(lbound) < params.eps * std::fabs(sum)) {
      return std::exp(-(x.r * x.r + y.r * y.r) / (2 * t)) / t * sum;
    }
  }
  throw DomainError("spectral sum did not converge within max_j terms");
}

double heat_kernel_expansion(const Wedge& w, PolarPoint x, PolarPoint y, double t, double cutoff) {
  if (!(t > 0)) throw DomainError("time must be positive");
  require_inside(w, x);
  require_inside(w, y);
  double total = 0;
  for (int j = 1;; ++j) {
    const EigenData e = eigen(w, j);
    if (1 + e.beta > cutoff + 1e-12) break;
    const double mm = m_j(w, j, x.theta) * m_j(w, j, y.theta);
    for (int k = 0; 1 + e.beta + k <= cutoff + 1e-12; ++k)
      for (int m = 0; 1 + e.beta + k + 2 * m <= cutoff + 1e-12; ++m) {
        const double expo = 1 + e.beta + k + 2 * m;
        double inner = 0;
        for (int n = 0; n <= k; ++n)
          inner += to_double(Rational(binomial(k, n))) * std::pow(x.r, e.b + 2.0 * (m + n)) * std::pow(y.r, e.b + 2.0 * (m + k - n));
        const double lcoef = -k * std::log(2.0) - std::lgamma(k + 1.0) - std::lgamma(m + 1.0) - std::lgamma(m + e.beta + 1) -
                             (2 * m + e.beta) * std::log(2.0) - expo * std::log(t);
        total += (k % 2 ? -1.0 : 1.0) * std::exp(lcoef) * inner * mm;
      }
  }
  return total;
}

double survival_quadrature(const Wedge& w, PolarPoint x, double t, const HeatKernelParams& params) {
  if (!(t > 0)) throw DomainError("time must be positive");
  require_inside(w, x);
  const double upper = x.r + 40 * std::sqrt(t);
  double total = 0;
  int quiet = 0;
  for (int j = 1; j <= params.max_j; ++j) {
    const EigenData e = eigen(w, j);
    const double ang = std::sqrt(2 / w.xi) * (w.xi / (j * std::numbers::pi)) * (1 - std::cos(j * std::numbers::pi));
    if (ang == 0) continue;
    auto radial = [&](double r) {
      if (r <= 0) return 0.0;
      return std::exp(-(x.r * x.r + r * r) / (2 * t)) * bessel_I(e.beta, x.r * r / t, 1e-17) * r / t;
    };
    const double rad = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(radial, 0.0, upper, 15, 1e-14);
    const double term = m_j(w, j, x.theta) * ang * rad;
    total += term;
    if (std::fabs(term) < params.eps * std::fabs(total)) {
      if (++quiet >= 3) return total;
    } else {
      quiet = 0;
    }
  }
  throw DomainError("survival series did not converge within max_j terms");
}

}  // namespace polyharm
