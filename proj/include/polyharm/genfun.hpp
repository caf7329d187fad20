#pragma once

#include <optional>

#include "polyharm/grid.hpp"
#include "polyharm/kernel.hpp"
#include "polyharm/poly1.hpp"
#include "polyharm/poly2.hpp"
#include "polyharm/ratfun.hpp"

namespace polyharm {

/// Bivariate rational generating function num/den, read as a power series at the origin.
struct GFRat {
  Poly2 num;
  Poly2 den;
};

/// H = (P(omega(x)) - P(omega(X+(y)))) / K, with K cancelled exactly.
/// Throws IdentityError if P(omega(X+)) leaves the rational subfield.
GFRat harmonic_gf(const StepModel& model, const Poly1& p);

/// X+(y) H(X+(y), y) = X+ P'(omega(X+)) omega'(X+) / (altilde (X+ - X-)), reduced to Q(y).
RatFun1 x_plus_h_at_x_plus(const StepModel& model, const Poly1& p);

/// V = (Q(omega(x)) - Q(omega(X+)) + G(x) - G(X+) + X+ y H(X+,y) - x y H(x,y)) / K,
/// G = 3 F P'(omega) when a decoupling function F is given, G = 0 otherwise.
GFRat biharmonic_gf(const StepModel& model, const Poly1& p, const Poly1& q, const std::optional<RatFun1>& decoupling);

/// Simple walk, no decoupling term.
GFRat biharmonic_gf_simple(const Poly1& p, const Poly1& q);

/// Tandem walk with F(x) = -x^3/(1-x)^6.
GFRat biharmonic_gf_tandem(const Poly1& p, const Poly1& q);

/// -x^3/(1-x)^6.
RatFun1 tandem_decoupling_function();

/// y X+ w'(X+)/(X+ - X-) - y X- w'(X-)/(X- - X+) == F(X+) - F(X-), exactly.
bool verify_decoupling(const StepModel& model, const RatFun1& w, const RatFun1& f);
bool verify_decoupling_tandem(const RatFun1& f);

/// Coefficients on [0,imax] x [0,jmax] when den = c (1-x)^a (1-y)^b.
/// Throws DomainError otherwise (use gf_verify_coeffs instead).
GridFunction gf_extract_coeffs(const GFRat& gf, int imax, int jmax);

struct CoeffCheck {
  bool ok = true;
  int i = -1;  // first mismatching coefficient of den * series - num
  int j = -1;
};

/// Checks den * sum_{i+j<=order} candidate(i,j) x^i y^j == num modulo total degree > order.
CoeffCheck gf_verify_coeffs(const GFRat& gf, const Poly2& candidate, int order);

struct Proportionality {
  std::optional<Rational> constant;  // g = constant * ref on the whole box
  int base_i = -1;                    // cell the constant was fitted at
  int base_j = -1;
  int bad_i = -1;                     // first cell where the fitted constant fails
  int bad_j = -1;
  bool holds() const { return constant.has_value(); }
};

/// Fits g = c * ref at the first cell (row-major from (0,0)) where ref is
/// nonzero, then checks every cell of the common box.
Proportionality fit_proportional(const GridFunction& g, const GridFunction& ref);

}  // namespace polyharm
