#pragma once

#include <vector>

#include "polyharm/poly1.hpp"
#include "polyharm/poly2.hpp"
#include "polyharm/rational.hpp"

namespace polyharm {

/// B_n from sum_{k=0}^{n} C(n+1,k) B_k = 0, B_0 = 1 (so B_1 = -1/2).
Rational bernoulli(int n);

/// alpha(m) = (4^m - 1)|B_{2m}| 2^{2m} / (2m (2m)!), m >= 1. These are the
/// coefficients of -log cos y = sum_m alpha(m) y^{2m}.
Rational alpha(int m);

/// Partial ordinary Bell polynomials evaluated at x_m = alpha(m+1):
/// B_{s,k} = sum_{m>=1} x_m B_{s-m,k-1}, B_{0,0} = 1.
class BellTable {
 public:
  explicit BellTable(int smax);
  int smax() const { return smax_; }
  /// Zero for k > s; throws DomainError outside 0 <= k, 0 <= s <= smax.
  const Rational& at(int s, int k) const;

 private:
  int smax_;
  std::vector<std::vector<Rational>> table_;
};

Rational bell_alpha(int s, int k);

/// C^alpha_{k,p} = (1/k!) sum_{j=k}^{p} (-1)^j / (2p-2j+1)! B^alpha_{j,k}.
Rational c_alpha(int k, int p);

/// Gaussian moment m_{2k} = (2k)! / (2^k k!).
BigInt gaussian_moment(int k);

/// h_j(lambda) of the complete expansion of the ballot numbers, degree 2j+1.
Poly1 h_poly(int j);

/// v_p(i,j) = sum_{k=0}^{p} h_k(i) h_{p-k}(j).
Poly2 v_diag(int p);

/// Lf(l) = (f(l+1) + f(l-1)) / 2 - f(l).
Poly1 laplacian_1d(const Poly1& f);

/// |m(lambda,n) sqrt(pi) n^{3/2} / (2 sqrt 2 2^n) - sum_{j<=J} (-1)^j h_j(lambda) / n^j|,
/// evaluated with 512-bit MPFR arithmetic. Needs lambda = n mod 2.
double dyck_truncation_error(long lambda, long n, int J);

}  // namespace polyharm
