#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "costless/solver.hpp"

namespace costless {

/// Every feasible fusion+placement plan: ordered compositions of FnSeq
/// into spans (cutting at every barrier, never inside a parallel group),
/// crossed with qualifying placements. Exists as ground truth for the
/// graph and the solvers, not for scale.
std::vector<Plan> enumerate_solutions(const FnSeq& fnseq,
                                      const ProfileMap& profiles,
                                      const std::vector<PlacementTarget>& targets);

inline constexpr std::size_t kDefaultBruteForceCap = 14;

/// Exhaustive minimum-price plan under the latency threshold. Ties go to
/// the lower latency, then the lexicographically smaller plan encoding.
/// Refuses sequences longer than `cap` with TooLargeError.
OptimizeResult brute_force_optimize(const FnSeq& fnseq, const ProfileMap& profiles,
                                    const PricingConfig& pricing,
                                    const NetworkConfig& network,
                                    const std::vector<PlacementTarget>& targets,
                                    std::optional<std::int64_t> t_thresh_ms,
                                    std::size_t cap = kDefaultBruteForceCap);

struct EvaluatedPlan {
  Plan plan;
  double price_usd = 0.0;
  std::int64_t latency_ms = 0;
};

/// All plans with their estimates, in enumeration order.
std::vector<EvaluatedPlan> evaluate_all(const FnSeq& fnseq,
                                        const ProfileMap& profiles,
                                        const PricingConfig& pricing,
                                        const NetworkConfig& network,
                                        const std::vector<PlacementTarget>& targets,
                                        std::size_t cap = kDefaultBruteForceCap);

struct MemoryConfigPoint {
  std::vector<int> tiers_mb;  // one tier per FnSeq position
  double price_usd = 0.0;
  std::int64_t latency_ms = 0;
};

/// Exhaustive per-function memory sweep of the no-fusion all-cloud plan:
/// every assignment of a qualifying tier to each function, evaluated
/// through the estimator.
std::vector<MemoryConfigPoint> memory_configuration_search(
    const FnSeq& fnseq, const ProfileMap& profiles, const PricingConfig& pricing,
    const NetworkConfig& network, const std::vector<int>& tiers_mb);

}  // namespace costless
