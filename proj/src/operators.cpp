#include "polyharm/operators.hpp"

#include <string>

namespace polyharm {

Poly2 apply_P(const StepModel& model, const Poly2& f) {
  Poly2 acc;
  const auto& steps = model.steps();
  for (std::size_t k = 0; k < steps.size(); ++k)
    acc += model.weights()[k] * f.shift(Rational(steps[k].dx), Rational(steps[k].dy));
  return acc;
}

Poly2 apply_L(const StepModel& model, const Poly2& f) { return apply_P(model, f) - f; }

Poly2 apply_L_power(const StepModel& model, const Poly2& f, int power) {
  if (power < 0) throw DomainError("negative Laplacian power");
  Poly2 g = f;
  for (int k = 0; k < power; ++k) g = apply_L(model, g);
  return g;
}

int default_order_cap(const Poly2& f) {
  const int d = std::max(f.degree(), 0);
  return (d + 2) / 2 + 1;
}

std::optional<int> polyharmonic_order(const StepModel& model, const Poly2& f, std::optional<int> cap) {
  const int limit = cap.value_or(default_order_cap(f));
  if (limit < 1) throw DomainError("polyharmonic order cap must be at least 1");
  if (f.is_zero()) return 0;
  Poly2 g = f;
  for (int p = 1; p <= limit; ++p) {
    g = apply_L(model, g);
    if (g.is_zero()) return p;
  }
  return std::nullopt;
}

namespace {

Rational dirichlet_average(const StepModel& model, const GridFunction& g, int i, int j) {
  Rational avg = 0;
  const auto& steps = model.steps();
  for (std::size_t k = 0; k < steps.size(); ++k) avg += model.weights()[k] * g.value(i + steps[k].dx, j + steps[k].dy);
  return avg;
}

}  // namespace

GridCheckReport check_harmonic_grid(const StepModel& model, const GridFunction& g, int test_imax, int test_jmax) {
  if (test_imax < 0 || test_jmax < 0) throw DomainError("empty test region");
  std::vector<std::string> uncheckable;
  for (int i = 0; i <= test_imax; ++i) {
    for (int j = 0; j <= test_jmax; ++j) {
      for (const auto& s : model.steps()) {
        if (i + s.dx > g.imax() || j + s.dy > g.jmax()) {
          uncheckable.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
          break;
        }
      }
    }
  }
  if (!uncheckable.empty()) {
    std::string msg = "grid box too small; uncheckable cells:";
    for (std::size_t k = 0; k < uncheckable.size() && k < 20; ++k) msg += " " + uncheckable[k];
    if (uncheckable.size() > 20) msg += " ... (" + std::to_string(uncheckable.size()) + " total)";
    throw DomainError(msg);
  }
  GridCheckReport report;
  for (int i = 0; i <= test_imax; ++i) {
    for (int j = 0; j <= test_jmax; ++j) {
      ++report.checked_cells;
      Rational avg = dirichlet_average(model, g, i, j);
      if (avg != g.at(i, j)) report.violations.push_back({i, j, g.at(i, j), avg});
    }
  }
  return report;
}

GridCheckReport check_harmonic_grid(const StepModel& model, const GridFunction& g) {
  return check_harmonic_grid(model, g, g.imax() - 1, g.jmax() - 1);
}

GridFunction apply_L_grid(const StepModel& model, const GridFunction& g) {
  if (g.imax() < 1 || g.jmax() < 1) throw DomainError("grid too small to apply L");
  GridFunction out(g.imax() - 1, g.jmax() - 1);
  for (int i = 0; i <= out.imax(); ++i)
    for (int j = 0; j <= out.jmax(); ++j) out.at(i, j) = dirichlet_average(model, g, i, j) - g.at(i, j);
  return out;
}

}  // namespace polyharm
