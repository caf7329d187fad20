#pragma once

#include "polyharm/wedge.hpp"

namespace polyharm {

/// I_beta(z) = sum_m (z/2)^{2m+beta} / (m! Gamma(m+beta+1)), terms via log-gamma.
/// Stops once past the largest term and the next term is below eps times the sum.
double bessel_I(double beta, double z, double eps = 1e-17);

struct HeatKernelParams {
  double eps = 1e-16;  // relative truncation of the spectral and Bessel sums
  int max_j = 2000;
  int max_m = 100000;
};

/// Dirichlet heat kernel of standard planar Brownian motion in the wedge
/// (density with respect to area), x = (rho, theta), y = (r, eta):
/// exp(-(rho^2+r^2)/2t)/t * sum_j I_{beta_j}(rho r / t) m_j(theta) m_j(eta).
double heat_kernel(const Wedge& w, PolarPoint x, PolarPoint y, double t, const HeatKernelParams& params = {});

/// Large-time expansion truncated to exponents 1+beta_j+k+2m <= cutoff:
/// sum t^{-(1+beta_j+k+2m)} (-1)^k C(k,n) / (2^k k! m! Gamma(m+beta_j+1) 2^{2m+beta_j})
///     f_{b_j+2(m+n),j}(x) f_{b_j+2(m+k-n),j}(y).
double heat_kernel_expansion(const Wedge& w, PolarPoint x, PolarPoint y, double t, double cutoff);

/// P_x(tau > t) = integral of the heat kernel over the wedge; angular integrals
/// in closed form, radial integrals by adaptive Gauss-Kronrod quadrature.
double survival_quadrature(const Wedge& w, PolarPoint x, double t, const HeatKernelParams& params = {});

}  // namespace polyharm
