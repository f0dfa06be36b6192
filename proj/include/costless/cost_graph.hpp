#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "costless/estimator.hpp"

namespace costless {

struct SpanTemplate {
  std::size_t first = 0;
  std::size_t last = 0;  // inclusive
  Span::Mode mode = Span::Mode::Serialized;
};

/// All contiguous ranges respecting barriers and parallel-group atomicity.
/// Ranges equal to a parallel group come in both modes; everything else is
/// Serialized. Ordered by (first, last, mode).
std::vector<SpanTemplate> enumerate_spans(const FnSeq& fnseq);

/// Concrete placements of one template: Edge (first-index spans whose
/// members all have edge profiles, Serialized mode only) plus every cloud
/// tier that fits all members and has exec entries for them.
std::vector<Span> placement_set(const SpanTemplate& tmpl, const FnSeq& fnseq,
                                const ProfileMap& profiles,
                                const std::vector<PlacementTarget>& targets);

/// Dual-weighted DAG whose s-t paths are exactly the feasible plans.
/// Nodes are stored in topological order (Start, spans by ascending start
/// index, End).
struct CostGraph {
  struct Node {
    enum class Kind { Start, End, SpanNode };
    Kind kind = Kind::SpanNode;
    Span span;       // valid for SpanNode only
    std::string id;  // deterministic label
  };

  struct Link {
    int from = 0;
    int to = 0;
    double price_usd = 0.0;
    std::int64_t delay_ms = 0;
  };

  std::vector<Node> nodes;
  std::vector<Link> links;
  std::vector<std::vector<int>> out;  // node -> outgoing link indices
  int start_node = 0;
  int end_node = 0;

  Plan plan_from_path(const std::vector<int>& node_path) const;
};

CostGraph build_cost_graph(const FnSeq& fnseq, const ProfileMap& profiles,
                           const PricingConfig& pricing,
                           const NetworkConfig& network,
                           const std::vector<PlacementTarget>& targets);

/// Edge (when any profile supports it) followed by one cloud target per
/// configured memory tier.
std::vector<PlacementTarget> default_targets(const ProfileMap& profiles,
                                             const PricingConfig& pricing);

}  // namespace costless
