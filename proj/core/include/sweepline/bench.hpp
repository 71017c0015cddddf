#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sweepline/obstacles.hpp"

namespace sweepline {

/// Cartesian grid of experiments; cells run in k, gamma, n, seed order.
struct BenchGrid {
  std::vector<int> ks{7, 10, 14};
  /// gamma = fraction * (pi - 3 theta) / 2
  std::vector<double> gamma_fractions{0.0, 0.5, 0.9};
  std::vector<std::size_t> ns{50};
  std::vector<std::uint64_t> seeds{0};
  ObstacleKind kind = ObstacleKind::None;
  double density = 0.0;
  unsigned jobs = 1;
};

struct BenchRow {
  int k;
  double gamma;
  std::size_t n;
  std::uint64_t seed;
  std::size_t edges;
  double max_stretch;
  double theoretical_bound;
  /// Worst routed length / |st| over all pairs; NaN for constrained settings.
  double max_route_stretch;
  double build_ms;
};

/// Rows come back in grid order whatever `jobs` is.
std::vector<BenchRow> run_bench(const BenchGrid& grid);

/// Header: k,gamma,n,seed,edges,max_stretch,theoretical_bound,max_route_stretch,build_ms
std::string bench_csv(std::span<const BenchRow> rows);

}  // namespace sweepline
