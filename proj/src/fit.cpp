#include "polyharm/fit.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include "polyharm/counts.hpp"
#include "polyharm/expr_parser.hpp"
#include "polyharm/linsolve.hpp"

namespace polyharm {

ExpansionSpec expansion_spec(const std::string& model) {
  if (model == "simple") return {"simple", 4, 3, 2, 4.0 / std::numbers::pi, "4/pi", 2};
  if (model == "diagonal") return {"diagonal", 4, 3, 1, 8.0 / std::numbers::pi, "8/pi", 2};
  if (model == "tandem") return {"tandem", 3, 4, 3, std::sqrt(3.0) / (2.0 * std::numbers::pi), "sqrt(3)/(2*pi)", 3};
  throw DomainError("no expansion shape known for model '" + model + "'");
}

std::vector<Rational> fit_exact(const ExpansionSpec& spec, const std::function<Rational(long)>& count,
                                const std::vector<long>& nodes) {
  if (nodes.empty()) throw DomainError("fit needs at least one node");
  if (std::set<long>(nodes.begin(), nodes.end()).size() != nodes.size()) throw DomainError("duplicate fit nodes");
  const std::size_t k = nodes.size();
  RationalMatrix a(k, std::vector<Rational>(k));
  std::vector<Rational> b(k);
  for (std::size_t r = 0; r < k; ++r) {
    if (nodes[r] <= 0) throw DomainError("fit nodes must be positive");
    const Rational big_n = Rational(nodes[r]) / spec.scale;
    const Rational inv = 1 / big_n;
    Rational p = 1;
    for (std::size_t c = 0; c < k; ++c) {
      a[r][c] = p;
      p *= inv;
    }
    b[r] = count(nodes[r]) * pow(big_n, spec.alpha0) / pow(spec.gamma, nodes[r]);
  }
  LinearSolution sol = solve_exact(std::move(a), std::move(b));
  if (!sol.unique()) throw DomainError("singular fit system");
  return *sol.solution;
}

ExpansionFit fit_expansion(const ExpansionSpec& spec, int i, int j, const std::function<Rational(long)>& count,
                           const std::vector<long>& nodes, const std::vector<long>& nodes2,
                           const std::function<bool(long)>& admissible) {
  for (const auto* window : {&nodes, &nodes2})
    for (long n : *window)
      if (!admissible(n))
        throw DomainError("node n=" + std::to_string(n) + " is outside the admissible class of (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");
  ExpansionFit fit;
  fit.model = spec.model;
  fit.i = i;
  fit.j = j;
  fit.nodes = nodes;
  fit.exact = fit_exact(spec, count, nodes);
  for (const auto& c : fit.exact) fit.values.push_back(to_double(c) / spec.prefactor);
  if (!nodes2.empty()) {
    fit.nodes2 = nodes2;
    for (const auto& c : fit_exact(spec, count, nodes2)) fit.values2.push_back(to_double(c) / spec.prefactor);
    for (std::size_t p = 0; p < fit.values.size() && p < fit.values2.size(); ++p)
      fit.drift.push_back(std::abs(fit.values[p] - fit.values2[p]));
  }
  return fit;
}

std::vector<long> default_nodes(const std::function<bool(long)>& admissible, int k, long n_max) {
  std::vector<long> out;
  for (long n = n_max; n > 0 && static_cast<int>(out.size()) < k; --n)
    if (admissible(n)) out.insert(out.begin(), n);
  if (static_cast<int>(out.size()) < k) throw DomainError("not enough admissible nodes below n_max");
  return out;
}

Poly2 expansion_term(const std::string& model, int p) {
  if (p != 0 && p != 1) throw DomainError("only v_0 and v_1 are tabulated");
  if (model == "simple")
    return parse_poly2(p == 0 ? "(i+1)*(j+1)" : "-1/4*(i+1)*(j+1)*(2*i^2+2*j^2+4*i+4*j+15)");
  if (model == "diagonal") return parse_poly2(p == 0 ? "(i+1)*(j+1)" : "-1/2*(i+1)*(j+1)*(i^2+j^2+2*i+2*j+9)");
  if (model == "tandem")
    return parse_poly2(p == 0 ? "(i+1)*(j+1)*(i+j+2)" : "-1/9*(i+1)*(j+1)*(i+j+2)*(3*i^2+3*j^2+3*i*j+9*i+9*j+38)");
  throw DomainError("no tabulated expansion for model '" + model + "'");
}

ExpansionFit fit_builtin(const std::string& model, int i, int j, int k, long n_max) {
  if (k < 1) throw DomainError("number of terms must be at least 1");
  if (i < 0 || j < 0) throw DomainError("target must lie in the quadrant");
  const ExpansionSpec spec = expansion_spec(model);
  auto admissible = [&](long n) { return reachable(model, i, j, n); };
  auto count = [&](long n) { return Rational(closed_count(model, i, j, n)); };
  std::vector<long> nodes = default_nodes(admissible, k, n_max);
  std::vector<long> nodes2 = default_nodes(admissible, k, nodes.front() - 1);
  return fit_expansion(spec, i, j, count, nodes, nodes2, admissible);
}

}  // namespace polyharm
