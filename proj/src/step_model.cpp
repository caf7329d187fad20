#include "polyharm/step_model.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <set>

namespace polyharm {

StepModel::StepModel(std::string name, std::vector<Step> steps, std::vector<Rational> weights, Rational gamma)
    : name_(std::move(name)), steps_(std::move(steps)), weights_(std::move(weights)), gamma_(std::move(gamma)) {
  if (steps_.empty()) throw DomainError("step model '" + name_ + "' has no steps");
  if (steps_.size() != weights_.size()) throw DomainError("step model '" + name_ + "': steps/weights length mismatch");
  std::set<Step> seen;
  Rational total = 0, drift_x = 0, drift_y = 0;
  for (std::size_t k = 0; k < steps_.size(); ++k) {
    const Step& s = steps_[k];
    if (std::abs(s.dx) > 1 || std::abs(s.dy) > 1) throw DomainError("step model '" + name_ + "': only small steps allowed");
    if (s.dx == 0 && s.dy == 0) throw DomainError("step model '" + name_ + "': the zero step is excluded");
    if (!seen.insert(s).second) throw DomainError("step model '" + name_ + "': duplicate step");
    if (weights_[k] <= 0) throw DomainError("step model '" + name_ + "': weights must be positive");
    total += weights_[k];
    drift_x += weights_[k] * s.dx;
    drift_y += weights_[k] * s.dy;
  }
  if (total != 1) throw DomainError("step model '" + name_ + "': weights sum to " + to_string(total) + ", not 1");
  if (drift_x != 0 || drift_y != 0) throw DomainError("step model '" + name_ + "': nonzero drift");
  if (gamma_ <= 0) throw DomainError("step model '" + name_ + "': gamma must be positive");

  // p_{1,1}, p_{1,0}, p_{1,-1}, p_{0,-1}, p_{-1,-1}, p_{-1,0}, p_{-1,1}, p_{0,1}
  static constexpr std::array<Step, 8> ring{{{1, 1}, {1, 0}, {1, -1}, {0, -1}, {-1, -1}, {-1, 0}, {-1, 1}, {0, 1}}};
  for (std::size_t k = 0; k < ring.size(); ++k) {
    bool all_zero = true;
    for (std::size_t d = 0; d < 3; ++d) {
      const Step& s = ring[(k + d) % ring.size()];
      if (weight(s.dx, s.dy) != 0) all_zero = false;
    }
    if (all_zero) throw DomainError("step model '" + name_ + "': three consecutive zero weights (degenerate model)");
  }
}

Rational StepModel::weight(int dx, int dy) const {
  for (std::size_t k = 0; k < steps_.size(); ++k)
    if (steps_[k].dx == dx && steps_[k].dy == dy) return weights_[k];
  return 0;
}

StepModel StepModel::simple() {
  const Rational q = make_rational(1, 4);
  return {"simple", {{-1, 0}, {0, 1}, {1, 0}, {0, -1}}, {q, q, q, q}, 4};
}

StepModel StepModel::diagonal() {
  const Rational q = make_rational(1, 4);
  return {"diagonal", {{1, 1}, {-1, 1}, {1, -1}, {-1, -1}}, {q, q, q, q}, 4};
}

StepModel StepModel::tandem() {
  const Rational q = make_rational(1, 3);
  return {"tandem", {{-1, 1}, {1, 0}, {0, -1}}, {q, q, q}, 3};
}

StepModel StepModel::builtin(const std::string& name) {
  if (name == "simple") return simple();
  if (name == "diagonal") return diagonal();
  if (name == "tandem") return tandem();
  throw DomainError("unknown built-in model '" + name + "' (expected simple, diagonal or tandem)");
}

StepModel StepModel::from_json(const Json& j) {
  try {
    std::vector<Step> steps;
    for (const auto& s : j.at("steps")) {
      if (!s.is_array() || s.size() != 2) throw ParseError("each step must be [dx, dy]");
      steps.push_back({s[0].get<int>(), s[1].get<int>()});
    }
    std::vector<Rational> weights;
    for (const auto& w : j.at("weights")) weights.push_back(parse_rational(w.get<std::string>()));
    return {j.at("name").get<std::string>(), std::move(steps), std::move(weights),
            parse_rational(j.at("gamma").get<std::string>())};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("step model config: ") + e.what());
  }
}

StepModel StepModel::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open step model config '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("step model config '" + path + "': " + e.what());
  }
  return from_json(j);
}

Json StepModel::to_json() const {
  Json steps = Json::array(), weights = Json::array();
  for (std::size_t k = 0; k < steps_.size(); ++k) {
    steps.push_back({steps_[k].dx, steps_[k].dy});
    weights.push_back(to_string(weights_[k]));
  }
  return {{"name", name_}, {"steps", steps}, {"weights", weights}, {"gamma", to_string(gamma_)}};
}

}  // namespace polyharm
