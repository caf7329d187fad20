#pragma once

#include <functional>
#include <string>
#include <vector>

#include "polyharm/poly2.hpp"
#include "polyharm/rational.hpp"

namespace polyharm {

/// Shape of q(n) ~ prefactor * gamma^n * sum_p v_p / N^{alpha0+p} with N = n / scale.
struct ExpansionSpec {
  std::string model;
  Rational gamma;
  int alpha0 = 3;
  Rational scale = 1;
  double prefactor = 1.0;
  std::string prefactor_label;
  int period = 1;  // admissible n form one residue class modulo period
};

/// simple: 4/pi, N = n/2; diagonal: 8/pi, N = n; tandem: sqrt(3)/(2 pi), N = n/3.
ExpansionSpec expansion_spec(const std::string& model);

struct ExpansionFit {
  std::string model;
  int i = 0;
  int j = 0;
  std::vector<long> nodes;
  /// Fitted coefficients, prefactor still included.
  std::vector<Rational> exact;
  /// exact / prefactor.
  std::vector<double> values;
  std::vector<long> nodes2;
  std::vector<double> values2;
  /// |values - values2| per coefficient.
  std::vector<double> drift;
};

/// Solves sum_{p<k} c_p N^{-p} = count(n) N^{alpha0} / gamma^n exactly at the k nodes.
/// Throws DomainError on duplicate nodes or a singular system.
std::vector<Rational> fit_exact(const ExpansionSpec& spec, const std::function<Rational(long)>& count,
                                const std::vector<long>& nodes);

ExpansionFit fit_expansion(const ExpansionSpec& spec, int i, int j, const std::function<Rational(long)>& count,
                           const std::vector<long>& nodes, const std::vector<long>& nodes2,
                           const std::function<bool(long)>& admissible);

/// The k largest n <= n_max with admissible(n), in increasing order.
std::vector<long> default_nodes(const std::function<bool(long)>& admissible, int k, long n_max);

/// Known first terms v_0, v_1 (p = 0, 1) of the expansion of a built-in model,
/// in the variable N of expansion_spec.
Poly2 expansion_term(const std::string& model, int p);

/// Closed-form counts of a built-in model at target (i,j); nodes are the k
/// largest admissible n <= n_max, the second window the k admissible values below.
ExpansionFit fit_builtin(const std::string& model, int i, int j, int k, long n_max);

}  // namespace polyharm
