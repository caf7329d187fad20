#pragma once

#include <optional>
#include <string>

#include "polyharm/poly2.hpp"
#include "polyharm/quadext.hpp"
#include "polyharm/step_model.hpp"

namespace polyharm {

/// K(x,y) = xy (sum_s p_s x^{-dx} y^{-dy} - 1).
Poly2 kernel_poly(const StepModel& model);

/// K written as altilde(y) x^2 + betilde(y) x + gamtilde(y), with the
/// discriminant deltilde = betilde^2 - 4 altilde gamtilde.
struct KernelData {
  std::string model;
  Poly2 kernel;
  Poly1 altilde;
  Poly1 betilde;
  Poly1 gamtilde;
  Poly1 deltilde;
};

/// Throws DomainError when deltilde vanishes identically.
KernelData kernel_data(const StepModel& model);

struct Branches {
  QuadExtFun plus;   // (-betilde + sqrt(deltilde)) / (2 altilde)
  QuadExtFun minus;  // (-betilde - sqrt(deltilde)) / (2 altilde)
};

/// Throws DomainError when altilde is identically zero.
Branches branches_x(const KernelData& kd);

/// K(u, y) for u in Q(y)[sqrt(deltilde)].
QuadExtFun kernel_at(const KernelData& kd, const QuadExtFun& u);

/// simple: x/(1-x)^2; tandem: x^2/(1-x)^3. Throws DomainError for other models.
RatFun1 omega(const StepModel& model);

struct OmegaCheck {
  bool invariant = false;          // omega(X+) lies in Q(y), hence equals omega(X-)
  std::optional<RatFun1> value;    // omega(X+(y)) when invariant
  std::optional<bool> negates;     // simple only: omega(X+(y)) == -omega(y)
  bool ok() const { return invariant && negates.value_or(true); }
};

OmegaCheck verify_omega_invariance(const StepModel& model);
/// Same check with a caller-supplied map (perturbation controls).
OmegaCheck verify_omega_invariance(const StepModel& model, const RatFun1& w);

}  // namespace polyharm
