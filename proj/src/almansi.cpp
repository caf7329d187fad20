#include "polyharm/almansi.hpp"

#include <map>

#include "polyharm/linsolve.hpp"
#include "polyharm/wedge.hpp"

namespace polyharm {

std::vector<Poly2> almansi_decompose(const Poly2& f, int p) {
  if (p < 1) throw DomainError("Almansi order must be >= 1");
  Poly2 g = f;
  for (int k = 0; k < p; ++k) g = continuous_laplacian(g);
  if (!g.is_zero()) throw DomainError("polynomial is not polyharmonic of order <= " + std::to_string(p));
  std::vector<Poly2> parts(static_cast<std::size_t>(p));
  if (f.is_zero()) return parts;
  const int deg = f.degree();

  struct Unknown {
    int k, a, b;
  };
  std::vector<Unknown> unknowns;
  for (int k = 0; k < p; ++k)
    for (int d = 0; d <= deg - 2 * k; ++d)
      for (int a = 0; a <= d; ++a) unknowns.push_back({k, a, d - a});

  // rows: one per (equation block, monomial); block -1 is f itself, block k is Delta h_k
  std::map<std::pair<int, Exponent>, std::size_t> rows;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> cols(unknowns.size());
  auto row_of = [&](int block, const Exponent& e) {
    auto [it, fresh] = rows.emplace(std::make_pair(block, e), rows.size());
    (void)fresh;
    return it->second;
  };
  const Poly2 r2 = radius_squared();
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    const Unknown& un = unknowns[u];
    const Poly2 mono = Poly2::monomial(1, un.a, un.b);
    const Poly2 lifted = r2.pow(static_cast<unsigned>(un.k)) * mono;
    const Poly2 lap = continuous_laplacian(mono);
    for (const auto& [e, c] : lifted.terms()) cols[u].emplace_back(row_of(-1, e), c);
    for (const auto& [e, c] : lap.terms()) cols[u].emplace_back(row_of(un.k, e), c);
  }
  for (const auto& [e, c] : f.terms()) row_of(-1, e);

  RationalMatrix a(rows.size(), std::vector<Rational>(unknowns.size()));
  std::vector<Rational> rhs(rows.size());
  for (std::size_t u = 0; u < unknowns.size(); ++u)
    for (const auto& [r, c] : cols[u]) a[r][u] += c;
  for (const auto& [e, c] : f.terms()) rhs[rows.at({-1, e})] = c;

  LinearSolution sol = solve_exact(std::move(a), std::move(rhs));
  if (!sol.solution) throw DomainError("no Almansi decomposition of the requested order");
  if (!sol.unique()) throw IdentityError("Almansi system has a nontrivial kernel");
  for (std::size_t u = 0; u < unknowns.size(); ++u)
    parts[static_cast<std::size_t>(unknowns[u].k)] += Poly2::monomial((*sol.solution)[u], unknowns[u].a, unknowns[u].b);
  return parts;
}

Poly2 almansi_recompose(const std::vector<Poly2>& parts) {
  Poly2 acc, rk = 1;
  const Poly2 r2 = radius_squared();
  for (const auto& h : parts) {
    acc += rk * h;
    rk = rk * r2;
  }
  return acc;
}

}  // namespace polyharm
