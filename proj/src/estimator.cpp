#include "costless/estimator.hpp"

#include <algorithm>
#include <cmath>

#include "costless/errors.hpp"

namespace costless {

namespace {

const ValidatedProfile& profile_of(const ProfileMap& profiles,
                                   const FunctionId& fn) {
  auto it = profiles.find(fn);
  if (it == profiles.end()) {
    throw MissingProfileError("no profile for function '" + fn + "'");
  }
  return it->second;
}

std::int64_t cloud_exec(const ValidatedProfile& vp, int tier_mb) {
  auto it = vp.profile.cloud_exec_ms.find(tier_mb);
  if (it == vp.profile.cloud_exec_ms.end()) {
    throw MissingProfileError("function '" + vp.profile.function +
                              "' has no cloud exec entry at " +
                              std::to_string(tier_mb) + " MB");
  }
  return it->second;
}

std::int64_t edge_exec(const ValidatedProfile& vp) {
  if (!vp.profile.edge_exec_ms) {
    throw MissingProfileError("function '" + vp.profile.function +
                              "' has no edge profile");
  }
  return *vp.profile.edge_exec_ms;
}

double gb_seconds_price(std::int64_t billed_ms, int tier_mb,
                        const PricingConfig& pricing) {
  return static_cast<double>(pricing.executions_per_month) *
         (static_cast<double>(billed_ms) / 1000.0) *
         (static_cast<double>(tier_mb) / 1024.0) * pricing.gb_second_usd;
}

}  // namespace

std::string Span::encode(const FnSeq& fnseq) const {
  std::string s = "[";
  for (std::size_t i = first; i <= last; ++i) {
    if (i > first) {
      s += ',';
    }
    s += fnseq.order[i];
  }
  s += "]@" + target.label();
  if (mode == Mode::ParallelRetained) {
    s += "#par";
    if (!member_tiers_mb.empty()) {
      s += '{';
      for (std::size_t i = 0; i < member_tiers_mb.size(); ++i) {
        if (i > 0) {
          s += ',';
        }
        s += std::to_string(member_tiers_mb[i]);
      }
      s += '}';
    }
  }
  return s;
}

std::string Plan::encode(const FnSeq& fnseq) const {
  std::string s;
  for (const auto& span : spans) {
    s += span.encode(fnseq);
  }
  return s;
}

std::int64_t transmission_time_ms(std::int64_t bytes, const NetworkConfig& network) {
  network.validate();
  if (network.fixed_upload_ms) {
    return *network.fixed_upload_ms;
  }
  if (bytes == 0) {
    return 0;
  }
  return std::llround(static_cast<double>(bytes) * 1000.0 /
                      *network.bandwidth_bytes_per_sec);
}

std::int64_t billed_duration_ms(std::int64_t exec_ms, std::int64_t quantum_ms) {
  if (quantum_ms == 0) {
    return exec_ms;
  }
  const std::int64_t quanta = (exec_ms + quantum_ms - 1) / quantum_ms;
  return quanta * quantum_ms;
}

CostBreakdown span_cost(const Span& span, const FnSeq& fnseq,
                        const ProfileMap& profiles, const PricingConfig& pricing) {
  CostBreakdown out;
  if (span.target.is_edge()) {
    for (std::size_t i = span.first; i <= span.last; ++i) {
      out.delay_ms += edge_exec(profile_of(profiles, fnseq.order[i]));
    }
    return out;  // covered by the flat edge fee, added at plan level
  }
  if (span.mode == Span::Mode::ParallelRetained) {
    // One invocation per member: separate scheduling delays, the slowest
    // member bounds the delay, prices add up.
    for (std::size_t i = span.first; i <= span.last; ++i) {
      const auto& vp = profile_of(profiles, fnseq.order[i]);
      const int tier = span.member_tier(i - span.first);
      const std::int64_t exec = cloud_exec(vp, tier);
      out.delay_ms = std::max(out.delay_ms, vp.profile.sched_ms + exec);
      out.price_usd +=
          gb_seconds_price(billed_duration_ms(exec, pricing.billing_quantum_ms),
                           tier, pricing);
    }
    return out;
  }
  // Serialized: one invocation, one scheduling delay, summed execution,
  // billed at the span tier.
  std::int64_t exec_sum = 0;
  for (std::size_t i = span.first; i <= span.last; ++i) {
    exec_sum += cloud_exec(profile_of(profiles, fnseq.order[i]), span.target.memory_mb);
  }
  out.delay_ms = profile_of(profiles, fnseq.order[span.first]).profile.sched_ms + exec_sum;
  out.price_usd =
      gb_seconds_price(billed_duration_ms(exec_sum, pricing.billing_quantum_ms),
                       span.target.memory_mb, pricing);
  return out;
}

int span_outgoing_transitions(const Span& span) {
  if (span.mode == Span::Mode::ParallelRetained) {
    return static_cast<int>(span.member_count());
  }
  return 1;
}

void validate_plan(const Plan& plan, const FnSeq& fnseq,
                   const ProfileMap& profiles) {
  if (plan.spans.empty()) {
    throw InvalidPlanError("plan has no spans");
  }
  std::size_t expect = 0;
  for (std::size_t s = 0; s < plan.spans.size(); ++s) {
    const Span& span = plan.spans[s];
    if (span.first != expect || span.last < span.first ||
        span.last >= fnseq.size()) {
      throw InvalidPlanError("spans must partition the function sequence");
    }
    expect = span.last + 1;
    if (!fnseq.range_ok(span.first, span.last)) {
      throw InvalidPlanError("span " + span.encode(fnseq) +
                             " crosses a barrier or splits a parallel group");
    }
    if (span.mode == Span::Mode::ParallelRetained) {
      if (!fnseq.group_equal(span.first, span.last)) {
        throw InvalidPlanError("ParallelRetained span must equal a parallel group");
      }
      if (!span.target.is_cloud()) {
        throw InvalidPlanError("ParallelRetained spans must run on the cloud");
      }
    }
    if (!span.member_tiers_mb.empty() &&
        (span.mode != Span::Mode::ParallelRetained ||
         span.member_tiers_mb.size() != span.member_count())) {
      throw InvalidPlanError("member tier overrides require a ParallelRetained "
                             "span with one tier per member");
    }
    if (span.target.is_edge()) {
      if (s != 0) {
        throw InvalidPlanError("only the first span may run on the edge");
      }
      for (std::size_t i = span.first; i <= span.last; ++i) {
        edge_exec(profile_of(profiles, fnseq.order[i]));
      }
    } else {
      for (std::size_t i = span.first; i <= span.last; ++i) {
        const auto& vp = profile_of(profiles, fnseq.order[i]);
        const int tier = span.mode == Span::Mode::ParallelRetained
                             ? span.member_tier(i - span.first)
                             : span.target.memory_mb;
        if (tier < vp.min_tier_mb) {
          throw InvalidPlanError("span " + span.encode(fnseq) + ": tier " +
                                 std::to_string(tier) + " MB < minimum " +
                                 std::to_string(vp.min_tier_mb) + " MB for '" +
                                 vp.profile.function + "'");
        }
      }
    }
  }
  if (expect != fnseq.size()) {
    throw InvalidPlanError("spans must cover the whole function sequence");
  }
}

PlanEstimate estimate_plan(const Plan& plan, const FnSeq& fnseq,
                           const ProfileMap& profiles,
                           const PricingConfig& pricing,
                           const NetworkConfig& network) {
  validate_plan(plan, fnseq, profiles);
  PlanEstimate est;
  bool any_edge = false;
  int transitions = plan.spans.front().target.is_cloud() ? 1 : 0;
  for (std::size_t s = 0; s < plan.spans.size(); ++s) {
    const Span& span = plan.spans[s];
    const CostBreakdown cb = span_cost(span, fnseq, profiles, pricing);
    est.function_price_usd += cb.price_usd;
    est.latency_ms += cb.delay_ms;
    transitions += span_outgoing_transitions(span);
    if (span.target.is_edge()) {
      any_edge = true;
      if (s + 1 < plan.spans.size()) {
        const auto& last_member = profile_of(profiles, fnseq.order[span.last]);
        est.latency_ms +=
            transmission_time_ms(last_member.profile.output_bytes, network);
      }
    }
  }
  est.transitions_per_execution = transitions;
  est.transition_price_usd = static_cast<double>(transitions) *
                             static_cast<double>(pricing.executions_per_month) *
                             pricing.transition_usd;
  est.edge_fee_usd = any_edge ? pricing.edge_device_usd_month : 0.0;
  est.price_usd = est.function_price_usd + est.transition_price_usd + est.edge_fee_usd;
  return est;
}

double plan_price(const Plan& plan, const FnSeq& fnseq,
                  const ProfileMap& profiles, const PricingConfig& pricing) {
  validate_plan(plan, fnseq, profiles);
  double function_price = 0.0;
  bool any_edge = false;
  int transitions = plan.spans.front().target.is_cloud() ? 1 : 0;
  for (const Span& span : plan.spans) {
    function_price += span_cost(span, fnseq, profiles, pricing).price_usd;
    transitions += span_outgoing_transitions(span);
    any_edge = any_edge || span.target.is_edge();
  }
  return function_price +
         static_cast<double>(transitions) *
             static_cast<double>(pricing.executions_per_month) *
             pricing.transition_usd +
         (any_edge ? pricing.edge_device_usd_month : 0.0);
}

std::int64_t plan_latency(const Plan& plan, const FnSeq& fnseq,
                          const ProfileMap& profiles,
                          const NetworkConfig& network) {
  validate_plan(plan, fnseq, profiles);
  // Pricing only affects price; a neutral config serves the delay lookups.
  PricingConfig neutral;
  neutral.billing_quantum_ms = 0;
  std::int64_t latency = 0;
  for (std::size_t s = 0; s < plan.spans.size(); ++s) {
    const Span& span = plan.spans[s];
    latency += span_cost(span, fnseq, profiles, neutral).delay_ms;
    if (span.target.is_edge() && s + 1 < plan.spans.size()) {
      const auto& last_member = profile_of(profiles, fnseq.order[span.last]);
      latency += transmission_time_ms(last_member.profile.output_bytes, network);
    }
  }
  return latency;
}

}  // namespace costless
