#pragma once

#include <utility>
#include <vector>

#include "polyharm/poly2.hpp"

namespace polyharm {

/// Planar wedge {0 < theta < xi} with Dirichlet boundary.
struct Wedge {
  explicit Wedge(double opening);
  static Wedge quadrant();
  double xi;
};

/// Dirichlet eigen-data of the arc (0, xi): lambda_j = (j pi / xi)^2, beta_j = b_j = j pi / xi.
struct EigenData {
  int j;
  double lambda;
  double beta;
  double b;
};

EigenData eigen(const Wedge& w, int j);

/// sqrt(2/xi) sin(j pi theta / xi); throws DomainError for theta outside [0, xi].
double m_j(const Wedge& w, int j, double theta);

struct PolarPoint {
  double r;
  double theta;
};

/// max |Delta f - (mu^2 - lambda_j) f_{mu-2,j}| over the samples, f_{mu,j} = r^mu m_j(theta),
/// with the polar Laplacian approximated by central differences of step h.
double laplacian_check_fmuj(const Wedge& w, double mu, int j, const std::vector<PolarPoint>& samples, double h);

/// f_{2j,j}(x,y) = sum_{k<j} (-1)^k C(2j,2k+1) y^{2k+1} x^{2j-2k-1}, i.e. rho^{2j} sin(2j theta).
Poly2 f2jj_cartesian(int j);

/// d^2/dx^2 + d^2/dy^2.
Poly2 continuous_laplacian(const Poly2& p);

/// x^2 + y^2.
Poly2 radius_squared();

struct Exponent1 {
  double value;
  std::vector<int> sources;  // spectral indices j producing this exponent
  bool collision() const { return sources.size() > 1; }
};

/// union_j (beta_j + 1 + N) intersected with (0, cutoff], sorted, equal values merged.
std::vector<Exponent1> exponent_set(const Wedge& w, double cutoff);

}  // namespace polyharm
