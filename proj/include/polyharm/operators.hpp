#pragma once

#include <optional>
#include <vector>

#include "polyharm/grid.hpp"
#include "polyharm/poly2.hpp"
#include "polyharm/step_model.hpp"

namespace polyharm {

/// (P f)(i,j) = sum_s p_s f(i+dx_s, j+dy_s) as an exact polynomial identity
/// on the whole plane (no boundary indicator).
Poly2 apply_P(const StepModel& model, const Poly2& f);

/// L = P - I.
Poly2 apply_L(const StepModel& model, const Poly2& f);

/// L^power f.
Poly2 apply_L_power(const StepModel& model, const Poly2& f, int power);

/// ceil((deg f + 1) / 2) + 1, the default search cap.
int default_order_cap(const Poly2& f);

/// Smallest p <= cap with L^p f = 0 (0 for the zero polynomial), or nullopt.
std::optional<int> polyharmonic_order(const StepModel& model, const Poly2& f, std::optional<int> cap = std::nullopt);

struct HarmonicViolation {
  int i = 0;
  int j = 0;
  Rational value;    // g(i,j)
  Rational average;  // sum_s p_s g((i,j)+s) with g = 0 off the quadrant
};

struct GridCheckReport {
  int checked_cells = 0;
  std::vector<HarmonicViolation> violations;
  bool harmonic() const { return violations.empty(); }
};

/// Checks the Dirichlet harmonicity g(x) = sum_s p_s g(x+s) 1{x+s in quadrant}
/// on the cells [0, test_imax] x [0, test_jmax]. Throws DomainError naming the
/// cells whose successors leave the box while staying in the quadrant.
GridCheckReport check_harmonic_grid(const StepModel& model, const GridFunction& g, int test_imax, int test_jmax);

/// Same, testing every cell whose successors are known: [0, imax-1] x [0, jmax-1].
GridCheckReport check_harmonic_grid(const StepModel& model, const GridFunction& g);

/// (L g)(i,j) with g extended by zero off the quadrant, on [0, imax-1] x [0, jmax-1].
GridFunction apply_L_grid(const StepModel& model, const GridFunction& g);

}  // namespace polyharm
