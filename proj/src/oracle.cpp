#include "costless/oracle.hpp"

#include <algorithm>
#include <string>

#include "costless/errors.hpp"

namespace costless {

std::vector<Plan> enumerate_solutions(const FnSeq& fnseq,
                                      const ProfileMap& profiles,
                                      const std::vector<PlacementTarget>& targets) {
  const std::size_t n = fnseq.size();
  std::vector<Plan> out;
  std::vector<Span> current;

  auto recurse = [&](auto&& self, std::size_t first) -> void {
    if (first == n) {
      out.push_back(Plan{current});
      return;
    }
    for (std::size_t last = first; last < n; ++last) {
      if (!fnseq.range_ok(first, last)) {
        continue;
      }
      std::vector<SpanTemplate> templates;
      if (fnseq.group_equal(first, last)) {
        templates.push_back({first, last, Span::Mode::ParallelRetained});
      }
      templates.push_back({first, last, Span::Mode::Serialized});
      for (const SpanTemplate& tmpl : templates) {
        for (Span span : placement_set(tmpl, fnseq, profiles, targets)) {
          if (span.target.is_edge() && first != 0) {
            continue;  // unreachable: placement_set already prunes this
          }
          current.push_back(std::move(span));
          self(self, last + 1);
          current.pop_back();
        }
      }
    }
  };
  recurse(recurse, 0);
  return out;
}

std::vector<EvaluatedPlan> evaluate_all(const FnSeq& fnseq,
                                        const ProfileMap& profiles,
                                        const PricingConfig& pricing,
                                        const NetworkConfig& network,
                                        const std::vector<PlacementTarget>& targets,
                                        std::size_t cap) {
  if (fnseq.size() > cap) {
    throw TooLargeError("brute force refused: " + std::to_string(fnseq.size()) +
                        " functions exceeds cap of " + std::to_string(cap));
  }
  std::vector<EvaluatedPlan> out;
  for (Plan& plan : enumerate_solutions(fnseq, profiles, targets)) {
    const PlanEstimate est = estimate_plan(plan, fnseq, profiles, pricing, network);
    out.push_back({std::move(plan), est.price_usd, est.latency_ms});
  }
  return out;
}

OptimizeResult brute_force_optimize(const FnSeq& fnseq, const ProfileMap& profiles,
                                    const PricingConfig& pricing,
                                    const NetworkConfig& network,
                                    const std::vector<PlacementTarget>& targets,
                                    std::optional<std::int64_t> t_thresh_ms,
                                    std::size_t cap) {
  const std::vector<EvaluatedPlan> all =
      evaluate_all(fnseq, profiles, pricing, network, targets, cap);
  if (all.empty()) {
    throw NoPathError("no feasible plan exists");
  }

  auto encoding = [&](const EvaluatedPlan& p) { return p.plan.encode(fnseq); };

  const EvaluatedPlan* best = nullptr;
  std::string best_enc;
  for (const EvaluatedPlan& cand : all) {
    if (t_thresh_ms && cand.latency_ms > *t_thresh_ms) {
      continue;
    }
    if (!best) {
      best = &cand;
      best_enc = encoding(cand);
      continue;
    }
    const std::string enc = encoding(cand);
    if (std::tie(cand.price_usd, cand.latency_ms, enc) <
        std::tie(best->price_usd, best->latency_ms, best_enc)) {
      best = &cand;
      best_enc = enc;
    }
  }

  OptimizeResult result;
  if (best) {
    result.plan = best->plan;
    result.price_usd = best->price_usd;
    result.latency_ms = best->latency_ms;
    result.feasible = true;
    return result;
  }
  // Nothing meets the threshold; report the fastest plan.
  const EvaluatedPlan* fastest = &all.front();
  std::string fastest_enc = encoding(all.front());
  for (const EvaluatedPlan& cand : all) {
    const std::string enc = encoding(cand);
    if (std::tie(cand.latency_ms, cand.price_usd, enc) <
        std::tie(fastest->latency_ms, fastest->price_usd, fastest_enc)) {
      fastest = &cand;
      fastest_enc = enc;
    }
  }
  result.plan = fastest->plan;
  result.price_usd = fastest->price_usd;
  result.latency_ms = fastest->latency_ms;
  result.feasible = false;
  return result;
}

std::vector<MemoryConfigPoint> memory_configuration_search(
    const FnSeq& fnseq, const ProfileMap& profiles, const PricingConfig& pricing,
    const NetworkConfig& network, const std::vector<int>& tiers_mb) {
  const std::size_t n = fnseq.size();
  std::vector<std::vector<int>> choices(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& vp = profiles.at(fnseq.order[i]);
    for (int tier : tiers_mb) {
      if (tier >= vp.min_tier_mb && vp.profile.cloud_exec_ms.count(tier)) {
        choices[i].push_back(tier);
      }
    }
    if (choices[i].empty()) {
      throw MissingProfileError("function '" + fnseq.order[i] +
                                "' qualifies for none of the searched tiers");
    }
  }

  auto build_plan = [&](const std::vector<int>& tiers) {
    Plan plan;
    std::size_t i = 0;
    while (i < n) {
      bool in_group = false;
      for (const auto& [g1, g2] : fnseq.parallel_groups) {
        if (i == g1) {
          Span span;
          span.first = g1;
          span.last = g2;
          span.mode = Span::Mode::ParallelRetained;
          span.member_tiers_mb.assign(tiers.begin() + static_cast<long>(g1),
                                      tiers.begin() + static_cast<long>(g2) + 1);
          span.target = PlacementTarget::cloud(
              *std::max_element(span.member_tiers_mb.begin(),
                                span.member_tiers_mb.end()));
          plan.spans.push_back(std::move(span));
          i = g2 + 1;
          in_group = true;
          break;
        }
      }
      if (!in_group) {
        plan.spans.push_back(
            {i, i, Span::Mode::Serialized, PlacementTarget::cloud(tiers[i]), {}});
        ++i;
      }
    }
    return plan;
  };

  std::vector<MemoryConfigPoint> out;
  std::vector<int> tiers(n);
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      const Plan plan = build_plan(tiers);
      const PlanEstimate est =
          estimate_plan(plan, fnseq, profiles, pricing, network);
      out.push_back({tiers, est.price_usd, est.latency_ms});
      return;
    }
    for (int tier : choices[i]) {
      tiers[i] = tier;
      self(self, i + 1);
    }
  };
  recurse(recurse, 0);
  return out;
}

}  // namespace costless
