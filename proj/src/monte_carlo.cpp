#include "polyharm/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>
#include <vector>

#include "polyharm/rational.hpp"

namespace polyharm {

namespace {

constexpr long kBlock = 1000;

struct Line {
  double nx, ny;  // inward unit normal; signed distance = n . p
};

struct BlockSums {
  double sum = 0;
  double sum_sq = 0;
};

BlockSums run_block(const std::vector<Line>& lines, double x0, double y0, long steps, double dt, long count,
                    std::uint64_t seed, std::uint64_t block, bool bridge) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal(0.0, std::sqrt(dt));
  BlockSums out;
  std::vector<double> d0(lines.size()), d1(lines.size());
  for (long p = 0; p < count; ++p) {
    double x = x0, y = y0, weight = 1;
    for (std::size_t l = 0; l < lines.size(); ++l) d0[l] = lines[l].nx * x + lines[l].ny * y;
    for (long s = 0; s < steps && weight > 0; ++s) {
      x += normal(rng);
      y += normal(rng);
      for (std::size_t l = 0; l < lines.size(); ++l) {
        d1[l] = lines[l].nx * x + lines[l].ny * y;
        if (d1[l] <= 0) {
          weight = 0;
          break;
        }
        if (bridge) {
          const double e = 2 * d0[l] * d1[l] / dt;
          if (e < 40) weight *= 1 - std::exp(-e);
        }
      }
      std::swap(d0, d1);
    }
    out.sum += weight;
    out.sum_sq += weight * weight;
  }
  return out;
}

}  // namespace

McResult mc_survival(const Wedge& w, PolarPoint start, double t, const McOptions& opts) {
  if (w.xi > std::numbers::pi + 1e-12) throw DomainError("Monte Carlo survival supports convex wedges (xi <= pi) only");
  if (!(start.r > 0) || !(start.theta > 0) || !(start.theta < w.xi)) throw DomainError("start must lie strictly inside the wedge");
  if (!(t > 0)) throw DomainError("time must be positive");
  if (!(opts.dt > 0) || opts.dt > 1e-3 * t) throw DomainError("time step must satisfy 0 < dt <= 1e-3 t");
  if (opts.paths < 2) throw DomainError("need at least two paths");

  std::vector<Line> lines{{0.0, 1.0}};
  if (std::fabs(w.xi - std::numbers::pi) > 1e-12) lines.push_back({std::sin(w.xi), -std::cos(w.xi)});

  const long steps = std::lround(t / opts.dt);
  const double dt = t / static_cast<double>(steps);
  const double x0 = start.r * std::cos(start.theta), y0 = start.r * std::sin(start.theta);
  const long nblocks = (opts.paths + kBlock - 1) / kBlock;
  std::vector<BlockSums> blocks(static_cast<std::size_t>(nblocks));

  unsigned nthreads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  nthreads = static_cast<unsigned>(std::min<long>(nthreads, nblocks));
  std::vector<std::thread> pool;
  for (unsigned th = 0; th < nthreads; ++th)
    pool.emplace_back([&, th] {
      for (long b = th; b < nblocks; b += nthreads) {
        const long count = std::min(kBlock, opts.paths - b * kBlock);
        blocks[static_cast<std::size_t>(b)] =
            run_block(lines, x0, y0, steps, dt, count, opts.seed, static_cast<std::uint64_t>(b), opts.bridge);
      }
    });
  for (auto& th : pool) th.join();

  double sum = 0, sum_sq = 0;
  for (const auto& b : blocks) {
    sum += b.sum;
    sum_sq += b.sum_sq;
  }
  const double n = static_cast<double>(opts.paths);
  McResult res;
  res.paths = opts.paths;
  res.steps = steps;
  res.estimate = sum / n;
  const double var = std::max(0.0, (sum_sq - n * res.estimate * res.estimate) / (n - 1));
  res.std_error = std::sqrt(var / n);
  return res;
}

}  // namespace polyharm
