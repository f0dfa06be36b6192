#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "costless/types.hpp"
#include "costless/workflow.hpp"

namespace costless {

/// A contiguous run of FnSeq functions deployed as one unit.
struct Span {
  enum class Mode { Serialized, ParallelRetained };

  std::size_t first = 0;
  std::size_t last = 0;  // inclusive
  Mode mode = Mode::Serialized;
  PlacementTarget target;
  // Per-member tier override for ParallelRetained cloud spans; empty means
  // every member runs at target.memory_mb. Used by the memory-configuration
  // search, never by graph-built spans.
  std::vector<int> member_tiers_mb;

  std::size_t member_count() const { return last - first + 1; }
  int member_tier(std::size_t i) const {
    return member_tiers_mb.empty() ? target.memory_mb : member_tiers_mb[i];
  }
  std::string encode(const FnSeq& fnseq) const;
};

struct Plan {
  std::vector<Span> spans;

  std::string encode(const FnSeq& fnseq) const;
};

struct CostBreakdown {
  double price_usd = 0.0;
  std::int64_t delay_ms = 0;
};

struct PlanEstimate {
  double price_usd = 0.0;
  std::int64_t latency_ms = 0;
  int transitions_per_execution = 0;
  double function_price_usd = 0.0;
  double transition_price_usd = 0.0;
  double edge_fee_usd = 0.0;
};

std::int64_t transmission_time_ms(std::int64_t bytes, const NetworkConfig& network);

std::int64_t billed_duration_ms(std::int64_t exec_ms, std::int64_t quantum_ms);

/// (price, delay) of one span in isolation: no transitions, no
/// transmission, no edge fee. Edge spans are free here (the flat device
/// fee is charged at plan level).
CostBreakdown span_cost(const Span& span, const FnSeq& fnseq,
                        const ProfileMap& profiles, const PricingConfig& pricing);

/// Outgoing state transitions of a span: one per member for
/// ParallelRetained, otherwise one.
int span_outgoing_transitions(const Span& span);

/// Throws InvalidPlanError unless spans partition fnseq, respect barriers
/// and parallel-group atomicity, place Edge only first, and allocate
/// tiers >= every member's minimum feasible tier.
void validate_plan(const Plan& plan, const FnSeq& fnseq,
                   const ProfileMap& profiles);

PlanEstimate estimate_plan(const Plan& plan, const FnSeq& fnseq,
                           const ProfileMap& profiles,
                           const PricingConfig& pricing,
                           const NetworkConfig& network);

double plan_price(const Plan& plan, const FnSeq& fnseq,
                  const ProfileMap& profiles, const PricingConfig& pricing);

std::int64_t plan_latency(const Plan& plan, const FnSeq& fnseq,
                          const ProfileMap& profiles,
                          const NetworkConfig& network);

}  // namespace costless
