#include "polyharm/wedge.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace polyharm {

Wedge::Wedge(double opening) : xi(opening) {
  if (!std::isfinite(opening) || opening <= 0 || opening >= 2 * std::numbers::pi)
    throw DomainError("wedge opening must lie in (0, 2 pi)");
}

Wedge Wedge::quadrant() { return Wedge(std::numbers::pi / 2); }

EigenData eigen(const Wedge& w, int j) {
  if (j < 1) throw DomainError("eigen index must be >= 1");
  const double beta = j * std::numbers::pi / w.xi;
  return {j, beta * beta, beta, beta};
}

double m_j(const Wedge& w, int j, double theta) {
  if (j < 1) throw DomainError("eigen index must be >= 1");
  if (theta < 0 || theta > w.xi) throw DomainError("angle outside the wedge");
  return std::sqrt(2 / w.xi) * std::sin(j * std::numbers::pi * theta / w.xi);
}

double laplacian_check_fmuj(const Wedge& w, double mu, int j, const std::vector<PolarPoint>& samples, double h) {
  if (h <= 0) throw DomainError("finite-difference step must be positive");
  const long double xi = w.xi, k = j * std::numbers::pi_v<long double> / xi;
  const long double norm = std::sqrt(2.0L / xi);
  auto f = [&](long double r, long double th) { return std::pow(r, static_cast<long double>(mu)) * norm * std::sin(k * th); };
  const long double lam = k * k;
  const long double hh = h;
  double worst = 0;
  for (const auto& s : samples) {
    if (s.r <= h || s.theta <= h || s.theta >= w.xi - h) throw DomainError("sample too close to the wedge boundary or apex");
    const long double r = s.r, th = s.theta;
    const long double f0 = f(r, th);
    const long double frr = (f(r + hh, th) - 2 * f0 + f(r - hh, th)) / (hh * hh);
    const long double fr = (f(r + hh, th) - f(r - hh, th)) / (2 * hh);
    const long double ftt = (f(r, th + hh) - 2 * f0 + f(r, th - hh)) / (hh * hh);
    const long double lap = frr + fr / r + ftt / (r * r);
    const long double rhs = (static_cast<long double>(mu) * mu - lam) * std::pow(r, static_cast<long double>(mu) - 2) * norm * std::sin(k * th);
    worst = std::max(worst, static_cast<double>(std::fabs(lap - rhs)));
  }
  return worst;
}

Poly2 f2jj_cartesian(int j) {
  if (j < 1) throw DomainError("f_{2j,j} needs j >= 1");
  Poly2 p;
  for (int k = 0; k < j; ++k) {
    Rational c(binomial(2 * j, 2 * k + 1));
    if (k % 2) c = -c;
    p += Poly2::monomial(c, 2 * j - 2 * k - 1, 2 * k + 1);
  }
  return p;
}

Poly2 continuous_laplacian(const Poly2& p) { return p.diff_x().diff_x() + p.diff_y().diff_y(); }

Poly2 radius_squared() { return Poly2::monomial(1, 2, 0) + Poly2::monomial(1, 0, 2); }

std::vector<Exponent1> exponent_set(const Wedge& w, double cutoff) {
  if (cutoff <= 0) throw DomainError("cutoff must be positive");
  std::vector<std::pair<double, int>> raw;
  for (int j = 1;; ++j) {
    const double start = eigen(w, j).beta + 1;
    if (start > cutoff + 1e-9) break;
    for (int n = 0; start + n <= cutoff + 1e-9; ++n) raw.emplace_back(start + n, j);
  }
  std::sort(raw.begin(), raw.end());
  std::vector<Exponent1> out;
  for (const auto& [v, j] : raw) {
    if (!out.empty() && std::fabs(out.back().value - v) < 1e-9) out.back().sources.push_back(j);
    else out.push_back({v, {j}});
  }
  return out;
}

}  // namespace polyharm
