#include "costless/cost_graph.hpp"

#include <algorithm>

#include "costless/errors.hpp"

namespace costless {

std::vector<SpanTemplate> enumerate_spans(const FnSeq& fnseq) {
  std::vector<SpanTemplate> out;
  const std::size_t n = fnseq.size();
  for (std::size_t first = 0; first < n; ++first) {
    for (std::size_t last = first; last < n; ++last) {
      if (!fnseq.range_ok(first, last)) {
        continue;
      }
      if (fnseq.group_equal(first, last)) {
        out.push_back({first, last, Span::Mode::ParallelRetained});
      }
      out.push_back({first, last, Span::Mode::Serialized});
    }
  }
  std::sort(out.begin(), out.end(), [](const SpanTemplate& a, const SpanTemplate& b) {
    return std::tie(a.first, a.last, a.mode) < std::tie(b.first, b.last, b.mode);
  });
  return out;
}

std::vector<Span> placement_set(const SpanTemplate& tmpl, const FnSeq& fnseq,
                                const ProfileMap& profiles,
                                const std::vector<PlacementTarget>& targets) {
  std::vector<Span> out;
  int span_min_tier = 0;
  bool all_edge_capable = true;
  for (std::size_t i = tmpl.first; i <= tmpl.last; ++i) {
    auto it = profiles.find(fnseq.order[i]);
    if (it == profiles.end()) {
      throw MissingProfileError("no profile for function '" + fnseq.order[i] + "'");
    }
    span_min_tier = std::max(span_min_tier, it->second.min_tier_mb);
    all_edge_capable = all_edge_capable && it->second.profile.has_edge();
  }
  for (const PlacementTarget& target : targets) {
    if (target.is_edge()) {
      // Data never flows cloud-to-edge, so only a leading span can be on
      // the edge; the device runs members serially.
      if (tmpl.first != 0 || tmpl.mode == Span::Mode::ParallelRetained ||
          !all_edge_capable) {
        continue;
      }
      out.push_back({tmpl.first, tmpl.last, tmpl.mode, target, {}});
      continue;
    }
    if (target.memory_mb < span_min_tier) {
      continue;
    }
    bool all_have_exec = true;
    for (std::size_t i = tmpl.first; i <= tmpl.last && all_have_exec; ++i) {
      const auto& vp = profiles.at(fnseq.order[i]);
      all_have_exec = vp.profile.cloud_exec_ms.count(target.memory_mb) > 0;
    }
    if (all_have_exec) {
      out.push_back({tmpl.first, tmpl.last, tmpl.mode, target, {}});
    }
  }
  return out;
}

Plan CostGraph::plan_from_path(const std::vector<int>& node_path) const {
  Plan plan;
  for (int node : node_path) {
    if (nodes[node].kind == Node::Kind::SpanNode) {
      plan.spans.push_back(nodes[node].span);
    }
  }
  return plan;
}

CostGraph build_cost_graph(const FnSeq& fnseq, const ProfileMap& profiles,
                           const PricingConfig& pricing,
                           const NetworkConfig& network,
                           const std::vector<PlacementTarget>& targets) {
  const std::size_t n = fnseq.size();
  const double per_transition =
      static_cast<double>(pricing.executions_per_month) * pricing.transition_usd;

  CostGraph g;
  g.nodes.push_back({CostGraph::Node::Kind::Start, {}, "start"});
  g.start_node = 0;

  struct NodeCost {
    int node;
    CostBreakdown cost;
  };
  // Span nodes bucketed by start and end index; per-span cost computed once.
  std::vector<std::vector<NodeCost>> starting_at(n);
  std::vector<std::vector<NodeCost>> ending_at(n);
  for (const SpanTemplate& tmpl : enumerate_spans(fnseq)) {
    for (const Span& span : placement_set(tmpl, fnseq, profiles, targets)) {
      const int id = static_cast<int>(g.nodes.size());
      g.nodes.push_back({CostGraph::Node::Kind::SpanNode, span, span.encode(fnseq)});
      const NodeCost nc{id, span_cost(span, fnseq, profiles, pricing)};
      starting_at[span.first].push_back(nc);
      ending_at[span.last].push_back(nc);
    }
  }
  g.nodes.push_back({CostGraph::Node::Kind::End, {}, "end"});
  g.end_node = static_cast<int>(g.nodes.size()) - 1;
  g.out.resize(g.nodes.size());

  auto add_link = [&](int from, int to, double price, std::int64_t delay) {
    g.out[from].push_back(static_cast<int>(g.links.size()));
    g.links.push_back({from, to, price, delay});
  };

  // Start transitions are charged only for cloud entry; an edge-triggered
  // first span begins without one.
  for (const NodeCost& nc : starting_at[0]) {
    const bool cloud = g.nodes[nc.node].span.target.is_cloud();
    add_link(g.start_node, nc.node, cloud ? per_transition : 0.0, 0);
  }

  // An outgoing link carries its source span's full cost, its outgoing
  // transitions, the device fee when leaving the edge span, and the
  // edge-to-cloud transmission delay at the placement boundary.
  auto leave_span = [&](const NodeCost& nc, bool to_end) {
    const Span& span = g.nodes[nc.node].span;
    double price = nc.cost.price_usd +
                   span_outgoing_transitions(span) * per_transition;
    std::int64_t delay = nc.cost.delay_ms;
    if (span.target.is_edge()) {
      price += pricing.edge_device_usd_month;
      if (!to_end) {
        const auto& last_member = profiles.at(fnseq.order[span.last]);
        delay += transmission_time_ms(last_member.profile.output_bytes, network);
      }
    }
    return std::pair<double, std::int64_t>{price, delay};
  };

  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (const NodeCost& from : ending_at[i]) {
      const auto [price, delay] = leave_span(from, false);
      for (const NodeCost& to : starting_at[i + 1]) {
        add_link(from.node, to.node, price, delay);
      }
    }
  }
  for (const NodeCost& from : ending_at[n - 1]) {
    const auto [price, delay] = leave_span(from, true);
    add_link(from.node, g.end_node, price, delay);
  }

  // Reject graphs with no s-t path (e.g. a function with no qualifying
  // target prunes every placement of some index).
  std::vector<char> reachable(g.nodes.size(), 0);
  reachable[g.start_node] = 1;
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    if (!reachable[v]) {
      continue;
    }
    for (int link : g.out[v]) {
      reachable[g.links[link].to] = 1;
    }
  }
  if (!reachable[g.end_node]) {
    throw EmptyGraphError("cost graph has no feasible start-to-end path");
  }
  return g;
}

std::vector<PlacementTarget> default_targets(const ProfileMap& profiles,
                                             const PricingConfig& pricing) {
  std::vector<PlacementTarget> targets;
  for (const auto& [name, vp] : profiles) {
    if (vp.profile.has_edge()) {
      targets.push_back(PlacementTarget::edge());
      break;
    }
  }
  for (int tier : pricing.memory_tiers_mb) {
    targets.push_back(PlacementTarget::cloud(tier));
  }
  return targets;
}

}  // namespace costless
