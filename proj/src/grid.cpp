#include "polyharm/grid.hpp"

#include <string>

namespace polyharm {

GridFunction::GridFunction(int imax, int jmax) : imax_(imax), jmax_(jmax) {
  if (imax < 0 || jmax < 0) throw DomainError("grid box must contain at least one cell");
  values_.resize(static_cast<std::size_t>(imax + 1) * static_cast<std::size_t>(jmax + 1));
}

GridFunction GridFunction::tabulate(int imax, int jmax, const std::function<Rational(int, int)>& f) {
  GridFunction g(imax, jmax);
  for (int i = 0; i <= imax; ++i)
    for (int j = 0; j <= jmax; ++j) g.at(i, j) = f(i, j);
  return g;
}

GridFunction GridFunction::tabulate(int imax, int jmax, const Poly2& p) {
  return tabulate(imax, jmax, [&](int i, int j) { return p(Rational(i), Rational(j)); });
}

Rational& GridFunction::at(int i, int j) {
  if (i < 0 || j < 0 || i > imax_ || j > jmax_)
    throw DomainError("grid index (" + std::to_string(i) + "," + std::to_string(j) + ") outside box");
  return values_[static_cast<std::size_t>(i) * static_cast<std::size_t>(jmax_ + 1) + static_cast<std::size_t>(j)];
}

const Rational& GridFunction::at(int i, int j) const {
  return const_cast<GridFunction*>(this)->at(i, j);
}

Rational GridFunction::value(int i, int j) const {
  if (i < 0 || j < 0) return 0;
  return at(i, j);
}

}  // namespace polyharm
