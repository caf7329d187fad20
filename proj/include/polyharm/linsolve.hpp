#pragma once

#include <optional>
#include <vector>

#include "polyharm/rational.hpp"

namespace polyharm {

/// Dense row-major matrix of rationals.
using RationalMatrix = std::vector<std::vector<Rational>>;

struct LinearSolution {
  /// One particular solution (free variables set to zero) when consistent.
  std::optional<std::vector<Rational>> solution;
  int rank = 0;
  int unknowns = 0;
  bool unique() const { return solution.has_value() && rank == unknowns; }
};

/// Exact Gauss-Jordan elimination of A x = b; A may be rectangular.
LinearSolution solve_exact(RationalMatrix a, std::vector<Rational> b);

}  // namespace polyharm
