#pragma once

#include <cstdint>

#include "polyharm/wedge.hpp"

namespace polyharm {

struct McOptions {
  long paths = 100000;
  double dt = 1e-3;
  std::uint64_t seed = 1;
  /// Brownian-bridge crossing correction between grid times.
  bool bridge = true;
  /// 0 picks the hardware concurrency; results do not depend on it.
  unsigned threads = 0;
};

struct McResult {
  double estimate = 0;
  double std_error = 0;
  long paths = 0;
  long steps = 0;
};

/// P_start(tau > t) for standard planar Brownian motion in a convex wedge (xi <= pi).
/// Gaussian increments on a grid of step dt; a path is killed when it leaves the
/// wedge at a grid time. With bridge correction, each step also multiplies the path
/// weight by prod_lines (1 - exp(-2 d0 d1 / dt)), the probability that the Brownian
/// bridge between the two grid points stays on the inner side of each boundary line.
/// Paths are split into fixed blocks seeded from (seed, block index).
McResult mc_survival(const Wedge& w, PolarPoint start, double t, const McOptions& opts = {});

}  // namespace polyharm
