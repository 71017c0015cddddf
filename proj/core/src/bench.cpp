#include "sweepline/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "sweepline/analysis.hpp"
#include "sweepline/generator.hpp"
#include "sweepline/routing.hpp"
#include "sweepline/spanner.hpp"

namespace sweepline {
namespace {

struct Cell {
  int k;
  double fraction;
  std::size_t n;
  std::uint64_t seed;
};

BenchRow run_cell(const Cell& cell, const BenchGrid& grid) {
  const SweepConfig config = validate_config(cell.k, cell.fraction * SweepConfig::gamma_limit(cell.k));
  const Instance inst = generate_instance({cell.n, cell.seed, grid.kind, grid.density, config});
  const Scene scene = inst.scene();

  const auto start = std::chrono::steady_clock::now();
  const SpannerGraph graph = build(scene, config);
  const auto stop = std::chrono::steady_clock::now();

  const Baseline baseline = grid.kind == ObstacleKind::None ? Baseline::Euclidean : Baseline::Visibility;
  const StretchReport report = stretch_report(graph, scene, config, baseline);

  double route_stretch = std::numeric_limits<double>::quiet_NaN();
  if (grid.kind == ObstacleKind::None) {
    route_stretch = 1.0;
    for (VertexId s = 0; s < scene.size(); ++s) {
      for (VertexId t = 0; t < scene.size(); ++t) {
        if (s == t) continue;
        const RoutePath path = sweeping_route(graph, scene.points(), config, s, t);
        route_stretch = std::max(route_stretch, path.total_length / distance(scene.point(s), scene.point(t)));
      }
    }
  }

  return {cell.k,
          config.gamma(),
          cell.n,
          cell.seed,
          graph.edge_count(),
          std::max(report.max_stretch, report.max_direct_stretch),
          config.stretch_bound(),
          route_stretch,
          std::chrono::duration<double, std::milli>(stop - start).count()};
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchGrid& grid) {
  std::vector<Cell> cells;
  for (int k : grid.ks)
    for (double f : grid.gamma_fractions)
      for (std::size_t n : grid.ns)
        for (std::uint64_t seed : grid.seeds) cells.push_back({k, f, n, seed});

  std::vector<BenchRow> rows(cells.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        rows[i] = run_cell(cells[i], grid);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = cells.size();
      }
    }
  };

  const unsigned jobs = std::clamp<unsigned>(grid.jobs, 1, static_cast<unsigned>(std::max<std::size_t>(cells.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string bench_csv(std::span<const BenchRow> rows) {
  std::string out = "k,gamma,n,seed,edges,max_stretch,theoretical_bound,max_route_stretch,build_ms\n";
  char line[256];
  for (const BenchRow& r : rows) {
    char route[32] = "";
    if (!std::isnan(r.max_route_stretch)) std::snprintf(route, sizeof route, "%.9g", r.max_route_stretch);
    std::snprintf(line, sizeof line, "%d,%.9g,%zu,%llu,%zu,%.9g,%.9g,%s,%.3f\n", r.k, r.gamma, r.n,
                  static_cast<unsigned long long>(r.seed), r.edges, r.max_stretch, r.theoretical_bound,
                  route, r.build_ms);
    out += line;
  }
  return out;
}

}  // namespace sweepline
