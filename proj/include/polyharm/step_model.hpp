#pragma once

#include <string>
#include <vector>

#include "polyharm/rational.hpp"
#include "polyharm/serialize.hpp"

namespace polyharm {

/// Small step (dx, dy) with dx, dy in {-1, 0, 1}, not both zero.
struct Step {
  int dx = 0;
  int dy = 0;
  auto operator<=>(const Step&) const = default;
};

/// Homogeneous small-step walk in the quarter plane.
///
/// Weights are transition probabilities (summing to one); gamma is the
/// exponential growth of the unweighted excursion counts, i.e. the number of
/// steps for the uniform built-in models. Construction validates the
/// non-degeneracy condition (no three cyclically consecutive zero weights
/// around the eight neighbours) and zero drift.
class StepModel {
 public:
  StepModel(std::string name, std::vector<Step> steps, std::vector<Rational> weights, Rational gamma);

  static StepModel simple();    // W, N, E, S with weight 1/4
  static StepModel diagonal();  // NE, NW, SE, SW with weight 1/4
  static StepModel tandem();    // NW, E, S with weight 1/3
  /// "simple", "diagonal" or "tandem"; throws DomainError otherwise.
  static StepModel builtin(const std::string& name);

  /// {"name":..., "steps":[[dx,dy],...], "weights":["1/4",...], "gamma":"4"}
  static StepModel from_json(const Json& j);
  static StepModel load(const std::string& path);
  Json to_json() const;

  const std::string& name() const { return name_; }
  const std::vector<Step>& steps() const { return steps_; }
  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& gamma() const { return gamma_; }
  /// p_{dx,dy}, zero for absent steps.
  Rational weight(int dx, int dy) const;

 private:
  std::string name_;
  std::vector<Step> steps_;
  std::vector<Rational> weights_;
  Rational gamma_;
};

}  // namespace polyharm
