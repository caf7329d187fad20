#pragma once

#include <vector>

#include "polyharm/poly2.hpp"

namespace polyharm {

/// Unique h_0..h_{p-1}, each harmonic, with f = sum_k (x^2+y^2)^k h_k.
/// Throws DomainError when f is not polyharmonic of order <= p.
std::vector<Poly2> almansi_decompose(const Poly2& f, int p);

/// sum_k (x^2+y^2)^k h_k.
Poly2 almansi_recompose(const std::vector<Poly2>& parts);

}  // namespace polyharm
