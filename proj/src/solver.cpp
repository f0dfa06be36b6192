#include "costless/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "costless/errors.hpp"

namespace costless {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNormalizerFloor = 1e-9;

struct Objective {
  double price_weight = 0.0;
  double delay_weight = 0.0;
  bool tie_by_price = false;  // otherwise ties broken by delay
};

PathResult run_dp(const CostGraph& graph, const Objective& obj) {
  const std::size_t n = graph.nodes.size();
  std::vector<double> key(n, kInf);
  std::vector<double> price(n, 0.0);
  std::vector<std::int64_t> delay(n, 0);
  std::vector<int> pred(n, -1);
  key[graph.start_node] = 0.0;

  // Nodes are stored in topological order, so one forward sweep settles
  // every label.
  for (std::size_t v = 0; v < n; ++v) {
    if (key[v] == kInf) {
      continue;
    }
    for (int link_id : graph.out[v]) {
      const CostGraph::Link& link = graph.links[link_id];
      const double cand_key =
          key[v] + obj.price_weight * link.price_usd +
          obj.delay_weight * static_cast<double>(link.delay_ms);
      const double cand_price = price[v] + link.price_usd;
      const std::int64_t cand_delay = delay[v] + link.delay_ms;
      const int to = link.to;
      bool better = false;
      if (cand_key < key[to]) {
        better = true;
      } else if (cand_key == key[to]) {
        const double tie_a = obj.tie_by_price ? cand_price
                                              : static_cast<double>(cand_delay);
        const double tie_b = obj.tie_by_price ? price[to]
                                              : static_cast<double>(delay[to]);
        if (tie_a < tie_b ||
            (tie_a == tie_b && static_cast<int>(v) < pred[to])) {
          better = true;
        }
      }
      if (better) {
        key[to] = cand_key;
        price[to] = cand_price;
        delay[to] = cand_delay;
        pred[to] = static_cast<int>(v);
      }
    }
  }
  if (key[graph.end_node] == kInf) {
    throw NoPathError("no start-to-end path in cost graph");
  }
  PathResult result;
  result.price_usd = price[graph.end_node];
  result.delay_ms = delay[graph.end_node];
  for (int v = graph.end_node; v != -1; v = pred[v]) {
    result.nodes.push_back(v);
    if (v == graph.start_node) {
      break;
    }
  }
  std::reverse(result.nodes.begin(), result.nodes.end());
  return result;
}

}  // namespace

PathResult shortest_path_aggregated(const CostGraph& graph, double lambda,
                                    double c_star, double d_star) {
  return run_dp(graph, {1.0 / c_star, lambda / d_star, false});
}

PathResult min_price_path(const CostGraph& graph) {
  return run_dp(graph, {1.0, 0.0, false});
}

PathResult min_delay_path(const CostGraph& graph) {
  return run_dp(graph, {0.0, 1.0, true});
}

OptimizeResult larac(const CostGraph& graph,
                     std::optional<std::int64_t> t_thresh_ms) {
  auto make_result = [&](const PathResult& path, bool feasible, double lambda,
                         int iterations) {
    OptimizeResult r;
    r.plan = graph.plan_from_path(path.nodes);
    r.price_usd = path.price_usd;
    r.latency_ms = path.delay_ms;
    r.feasible = feasible;
    r.lambda_final = lambda;
    r.iterations = iterations;
    return r;
  };

  PathResult cheapest = min_price_path(graph);
  if (!t_thresh_ms || cheapest.delay_ms <= *t_thresh_ms) {
    return make_result(cheapest, true, 0.0, 1);
  }
  const std::int64_t threshold = *t_thresh_ms;

  PathResult fastest = min_delay_path(graph);
  if (fastest.delay_ms > threshold) {
    return make_result(fastest, false, 0.0, 2);
  }

  // p_c stays infeasible-but-cheap, p_d feasible; the gap closes when the
  // aggregated shortest path stops improving on the pair.
  const double c_star = std::max(fastest.price_usd, kNormalizerFloor);
  const double d_star =
      std::max(static_cast<double>(cheapest.delay_ms), kNormalizerFloor);
  PathResult p_c = std::move(cheapest);
  PathResult p_d = std::move(fastest);
  double lambda = 0.0;
  int iterations = 2;
  constexpr int kMaxIterations = 100;
  while (iterations < kMaxIterations) {
    ++iterations;
    lambda = ((p_c.price_usd - p_d.price_usd) / c_star) /
             ((static_cast<double>(p_d.delay_ms) -
               static_cast<double>(p_c.delay_ms)) /
              d_star);
    const PathResult r = shortest_path_aggregated(graph, lambda, c_star, d_star);
    auto aggregated = [&](const PathResult& p) {
      return p.price_usd / c_star +
             lambda * static_cast<double>(p.delay_ms) / d_star;
    };
    const double closing = aggregated(p_c);
    if (aggregated(r) >= closing - 1e-12 * (1.0 + std::fabs(closing))) {
      break;
    }
    if (r.delay_ms <= threshold) {
      p_d = r;
    } else {
      p_c = r;
    }
  }
  return make_result(p_d, true, lambda, iterations);
}

std::vector<FrontierPoint> pareto_frontier(const CostGraph& graph) {
  struct Label {
    double price;
    std::int64_t delay;
    int pred_node;
    int pred_label;
  };
  const std::size_t n = graph.nodes.size();
  std::vector<std::vector<Label>> labels(n);
  labels[graph.start_node].push_back({0.0, 0, -1, -1});

  auto insert = [](std::vector<Label>& set, const Label& cand) {
    for (const Label& l : set) {
      if (l.price <= cand.price && l.delay <= cand.delay) {
        return;  // dominated (or duplicate)
      }
    }
    std::erase_if(set, [&](const Label& l) {
      return cand.price <= l.price && cand.delay <= l.delay;
    });
    set.push_back(cand);
  };

  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t li = 0; li < labels[v].size(); ++li) {
      for (int link_id : graph.out[v]) {
        const CostGraph::Link& link = graph.links[link_id];
        // Copy: insert() may reallocate labels[v] only for self-loops,
        // which a DAG does not have, but link.to buckets do grow.
        const Label l = labels[v][li];
        insert(labels[link.to], {l.price + link.price_usd,
                                 l.delay + link.delay_ms, static_cast<int>(v),
                                 static_cast<int>(li)});
      }
    }
  }

  auto& final_labels = labels[graph.end_node];
  if (final_labels.empty()) {
    throw NoPathError("no start-to-end path in cost graph");
  }
  std::vector<FrontierPoint> frontier;
  for (std::size_t li = 0; li < final_labels.size(); ++li) {
    std::vector<int> path;
    int node = graph.end_node;
    int label = static_cast<int>(li);
    while (node != -1) {
      path.push_back(node);
      const Label& l = labels[node][label];
      label = l.pred_label;
      node = l.pred_node;
    }
    std::reverse(path.begin(), path.end());
    frontier.push_back({final_labels[li].price, final_labels[li].delay,
                        graph.plan_from_path(path)});
  }
  std::sort(frontier.begin(), frontier.end(),
            [](const FrontierPoint& a, const FrontierPoint& b) {
              return std::tie(a.latency_ms, a.price_usd) <
                     std::tie(b.latency_ms, b.price_usd);
            });
  return frontier;
}

std::vector<FrontierPoint> frontier_sweep(const CostGraph& graph, int sweeps) {
  const PathResult fastest = min_delay_path(graph);
  const PathResult cheapest = min_price_path(graph);
  const std::int64_t lo = fastest.delay_ms;
  const std::int64_t hi = std::max(lo, cheapest.delay_ms);
  std::vector<FrontierPoint> points;
  for (int i = 0; i < std::max(sweeps, 2); ++i) {
    const std::int64_t t =
        lo + (hi - lo) * static_cast<std::int64_t>(i) /
                 static_cast<std::int64_t>(std::max(sweeps, 2) - 1);
    const OptimizeResult r = larac(graph, t);
    if (r.feasible) {
      points.push_back({r.price_usd, r.latency_ms, r.plan});
    }
  }
  std::vector<FrontierPoint> frontier;
  for (const auto& p : points) {
    const bool dominated = std::any_of(
        points.begin(), points.end(), [&](const FrontierPoint& q) {
          return (q.price_usd < p.price_usd && q.latency_ms <= p.latency_ms) ||
                 (q.price_usd <= p.price_usd && q.latency_ms < p.latency_ms);
        });
    const bool duplicate = std::any_of(
        frontier.begin(), frontier.end(), [&](const FrontierPoint& q) {
          return q.price_usd == p.price_usd && q.latency_ms == p.latency_ms;
        });
    if (!dominated && !duplicate) {
      frontier.push_back(p);
    }
  }
  std::sort(frontier.begin(), frontier.end(),
            [](const FrontierPoint& a, const FrontierPoint& b) {
              return a.latency_ms < b.latency_ms;
            });
  return frontier;
}

}  // namespace costless
