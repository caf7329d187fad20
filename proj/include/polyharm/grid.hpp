#pragma once

#include <functional>
#include <vector>

#include "polyharm/poly2.hpp"
#include "polyharm/rational.hpp"

namespace polyharm {

/// Dense table of rationals on [0, imax] x [0, jmax]; reads outside the
/// quadrant return 0 (Dirichlet convention), reads past imax/jmax throw.
class GridFunction {
 public:
  GridFunction(int imax, int jmax);
  static GridFunction tabulate(int imax, int jmax, const std::function<Rational(int, int)>& f);
  static GridFunction tabulate(int imax, int jmax, const Poly2& p);

  int imax() const { return imax_; }
  int jmax() const { return jmax_; }

  Rational& at(int i, int j);
  const Rational& at(int i, int j) const;
  /// Zero for i < 0 or j < 0.
  Rational value(int i, int j) const;

  bool operator==(const GridFunction& o) const = default;

 private:
  int imax_;
  int jmax_;
  std::vector<Rational> values_;
};

}  // namespace polyharm
