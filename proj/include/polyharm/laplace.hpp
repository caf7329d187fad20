#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "polyharm/poly1.hpp"

namespace polyharm {

using Complex = std::complex<double>;

/// Covariance (s11 s12; s12 s22) with s11, s22 > 0 and det > 0.
struct CovMatrix {
  CovMatrix(double s11, double s12, double s22);
  static CovMatrix identity() { return {1, 0, 1}; }
  double det() const { return s11 * s22 - s12 * s12; }
  double s11;
  double s12;
  double s22;
};

struct BmRoots {
  Complex c_plus;   // (-s12 + i sqrt(det)) / s22
  Complex c_minus;  // conjugate of c_plus
  double c;         // sqrt(s11/s22)
  double theta;     // cos theta = -s12 / sqrt(s11 s22)
};

BmRoots bm_roots(const CovMatrix& cov);

/// gamma(x,y) = (s11 x^2 + 2 s12 x y + s22 y^2) / 2.
Complex bm_kernel_gamma(const CovMatrix& cov, Complex x, Complex y);

/// P evaluated at a complex point.
Complex eval_complex(const Poly1& p, Complex z);

/// Principal branch z^a, arg z in (-pi, pi]. Throws DomainError at z = 0.
Complex principal_pow(Complex z, double a);

/// L(h)(x,y) = s11/2 (P(y^{-a}) - P(-1/(c^a x^a))) / gamma(x,y), a = pi/theta.
/// On the kernel roots y = c_pm x the removable singularity is replaced by its limit.
Complex laplace_h(const CovMatrix& cov, const Poly1& p, Complex x, Complex y);

/// The limit of laplace_h at y = c_plus x (sign = +1) or y = c_minus x (sign = -1).
Complex laplace_h_on_root(const CovMatrix& cov, const Poly1& p, Complex x, int sign);

/// F(y) = -(s11/s22) a c+ c- / (c+ - c-)^2 P'(y^{-a}) / y^{a+2}.
Complex big_f(const CovMatrix& cov, const Poly1& p, Complex y);

/// [Q(y^{-a}) - Q((c+ x)^{-a}) + G(x,y) + L(h)(x,y)] / gamma(x,y),
/// G(x,y) = F(y) - F(c+ x) - L(h)(x, c+ x).
Complex laplace_v(const CovMatrix& cov, const Poly1& p, const Poly1& q, Complex x, Complex y);

/// Identity-covariance parametrization written directly from the quadrant functional equation:
/// [Q(1/y^2) - Q(-1/x^2) + (2/x^4) P'(-1/x^2) + 2 L(h)(x,y)] / (x^2 + y^2).
Complex laplace_v_quadrant(const Poly1& p, const Poly1& q, Complex x, Complex y);

/// Q for laplace_v (identity covariance) giving the same transform as laplace_v_quadrant
/// with q: Q(t) = q(t)/2 - t^2 P'(t)/2.
Poly1 quadrant_q_to_general_q(const Poly1& p, const Poly1& q);

struct FunctionalResiduals {
  double h_equation = 0;  // s11 L1(h)(c_pm x) + s22 L2(h)(x) at both roots
  double v_equation = 0;  // numerator of the v-equation at both roots
  double boundary = 0;    // L1(h)(c+ x) - L1(h)(c- x)
};

/// Plugs the closed forms of L1, L2 for h and v into the functional equations
/// at the kernel roots y = c_pm x, for each sample x. f_scale multiplies F
/// (1 for the genuine solution).
FunctionalResiduals verify_functional_eqs(const CovMatrix& cov, const Poly1& p, const Poly1& q,
                                          const std::vector<Complex>& samples, double f_scale = 1.0);

/// mu2 making s22 mu2 / x^a + s11 mu1 / y^a vanish on both kernel roots:
/// mu2 = mu1 (s11/s22)^{1 - a/2}.
double mu2_from_mu1(const CovMatrix& cov, double mu1);

/// max |s22 mu2 x^{-a} + s11 mu1 (c_pm x)^{-a}| over samples.
double degree1_residual(const CovMatrix& cov, double mu1, double mu2, const std::vector<Complex>& samples);

/// Numerical Laplace transform of f over [0,R]^2 (real x, y > 0) by nested
/// adaptive Gauss-Kronrod, R chosen so that exp(-min(x,y) R) < 1e-3 tol.
double laplace_transform_numeric(const std::function<double(double, double)>& f, double x, double y, double tol);

}  // namespace polyharm
