#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "costless/cost_graph.hpp"

namespace costless {

struct PathResult {
  std::vector<int> nodes;  // start .. end
  double price_usd = 0.0;
  std::int64_t delay_ms = 0;
};

/// Path minimizing sum(price/c_star + lambda * delay/d_star); ties broken
/// by smaller total delay, then by predecessor node id. Throws NoPathError
/// on an unreachable end node.
PathResult shortest_path_aggregated(const CostGraph& graph, double lambda,
                                    double c_star, double d_star);

/// Minimum-price path (ties: delay, then node id).
PathResult min_price_path(const CostGraph& graph);

/// Minimum-delay path (ties: price, then node id).
PathResult min_delay_path(const CostGraph& graph);

struct OptimizeResult {
  Plan plan;
  double price_usd = 0.0;
  std::int64_t latency_ms = 0;
  bool feasible = false;
  double lambda_final = 0.0;
  int iterations = 0;
};

/// LARAC: Lagrangian-relaxed constrained shortest path. Unset threshold
/// means unconstrained. When no path meets the threshold the result
/// carries the minimum-delay plan with feasible=false.
OptimizeResult larac(const CostGraph& graph,
                     std::optional<std::int64_t> t_thresh_ms);

struct FrontierPoint {
  double price_usd = 0.0;
  std::int64_t latency_ms = 0;
  Plan plan;
};

/// Exact non-dominated (price, latency) set via label-correcting search
/// over the DAG, sorted by latency ascending.
std::vector<FrontierPoint> pareto_frontier(const CostGraph& graph);

/// Fallback frontier: LARAC at `sweeps` evenly spaced thresholds,
/// dominance-filtered. Approximate, but cheap on huge graphs.
std::vector<FrontierPoint> frontier_sweep(const CostGraph& graph, int sweeps);

}  // namespace costless
