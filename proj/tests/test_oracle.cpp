#include <doctest.h>

#include <cstdint>
#include <functional>
#include <set>

#include "costless/oracle.hpp"
#include "fixtures.hpp"

using namespace costless;

namespace {

FnSeq chain(int n) {
  FnSeq seq;
  for (int i = 1; i <= n; ++i) seq.order.push_back("s" + std::to_string(i));
  return seq;
}

ProfileMap chain_profiles(const FnSeq& seq, const PricingConfig& pricing) {
  std::map<FunctionId, FunctionProfile> raw;
  std::int64_t exec = 400;
  for (const auto& fn : seq.order) {
    std::map<int, std::int64_t> cloud;
    for (int tier : pricing.memory_tiers_mb) cloud[tier] = exec;
    raw.emplace(fn, fixtures::make_profile(fn, cloud, 50, 100, 100000, 3 * exec));
    exec += 150;
  }
  return validate_profiles(raw, pricing);
}

// Plans expected for a barrier-free chain: sum over k spans of
// C(n-1, k-1) * (c+1) * c^(k-1) where c is the cloud tier count.
std::uint64_t closed_form(int n, int c) {
  std::vector<std::vector<std::uint64_t>> binom(n + 1,
                                                std::vector<std::uint64_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    binom[i][0] = 1;
    for (int j = 1; j <= i; ++j) {
      binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
    }
  }
  std::uint64_t total = 0;
  std::uint64_t c_pow = 1;
  for (int k = 1; k <= n; ++k) {
    total += binom[n - 1][k - 1] * static_cast<std::uint64_t>(c + 1) * c_pow;
    c_pow *= static_cast<std::uint64_t>(c);
  }
  return total;
}

std::uint64_t count_paths(const CostGraph& g) {
  std::vector<std::uint64_t> ways(g.nodes.size(), 0);
  ways[static_cast<std::size_t>(g.start_node)] = 1;
  for (std::size_t ni = 0; ni < g.nodes.size(); ++ni) {
    for (const int li : g.out[ni]) {
      ways[static_cast<std::size_t>(g.links[li].to)] += ways[ni];
    }
  }
  return ways[static_cast<std::size_t>(g.end_node)];
}

}  // namespace

TEST_CASE("three functions and two targets admit exactly eight plans") {
  const PricingConfig pricing = fixtures::aws_pricing(100, {128});
  const FnSeq seq = chain(3);
  const auto profiles = chain_profiles(seq, pricing);
  const auto targets = default_targets(profiles, pricing);
  const auto plans = enumerate_solutions(seq, profiles, targets);
  CHECK(plans.size() == 8);
  std::set<std::string> encodings;
  for (const auto& p : plans) {
    CHECK_NOTHROW(validate_plan(p, seq, profiles));
    encodings.insert(p.encode(seq));
  }
  CHECK(encodings.size() == plans.size());
}

TEST_CASE("enumeration matches the closed-form count on chains") {
  for (const int cloud_tiers : {1, 2, 3}) {
    std::vector<int> tiers;
    for (int c = 0; c < cloud_tiers; ++c) tiers.push_back(128 + 128 * c);
    const PricingConfig pricing = fixtures::aws_pricing(100, tiers);
    for (int n = 1; n <= 7; ++n) {
      const FnSeq seq = chain(n);
      const auto profiles = chain_profiles(seq, pricing);
      const auto targets = default_targets(profiles, pricing);
      const auto plans = enumerate_solutions(seq, profiles, targets);
      CHECK(plans.size() == closed_form(n, cloud_tiers));
    }
  }
}

TEST_CASE("graph paths and enumerated plans are in bijection") {
  const NetworkConfig network = fixtures::fixed_upload(1130);

  for (int n = 1; n <= 6; ++n) {
    const PricingConfig pricing = fixtures::aws_pricing(100, {128, 256});
    const FnSeq seq = chain(n);
    const auto profiles = chain_profiles(seq, pricing);
    const auto targets = default_targets(profiles, pricing);
    const CostGraph g =
        build_cost_graph(seq, profiles, pricing, network, targets);
    CHECK(count_paths(g) == enumerate_solutions(seq, profiles, targets).size());
  }

  const PricingConfig pricing = fixtures::aws_pricing(100);
  const auto profiles =
      validate_profiles(fixtures::wildrydes_profiles(), pricing);
  const FnSeq seq = fixtures::wildrydes_fnseq();
  const auto targets = default_targets(profiles, pricing);
  const CostGraph g = build_cost_graph(seq, profiles, pricing, network, targets);
  CHECK(count_paths(g) == enumerate_solutions(seq, profiles, targets).size());
}

TEST_CASE("brute force agrees with larac on the measured workflow") {
  const PricingConfig pricing = fixtures::aws_pricing(100);
  const auto profiles =
      validate_profiles(fixtures::wildrydes_profiles(), pricing);
  const FnSeq seq = fixtures::wildrydes_fnseq();
  const NetworkConfig network = fixtures::fixed_upload(1130);
  const auto targets = default_targets(profiles, pricing);
  const CostGraph g = build_cost_graph(seq, profiles, pricing, network, targets);

  for (std::int64_t t = 2500; t <= 8000; t += 500) {
    const OptimizeResult bf =
        brute_force_optimize(seq, profiles, pricing, network, targets, t);
    const OptimizeResult lr = larac(g, t);
    CHECK(bf.feasible == lr.feasible);
    if (bf.feasible) {
      CHECK(lr.latency_ms <= t);
      // The relaxation can only lose money, never gain it.
      CHECK(bf.price_usd <= lr.price_usd + 1e-9);
    }
  }

  const OptimizeResult bf_unbounded = brute_force_optimize(
      seq, profiles, pricing, network, targets, std::nullopt);
  CHECK(bf_unbounded.price_usd == doctest::Approx(58.743375).epsilon(1e-9));
  CHECK(bf_unbounded.latency_ms == 7082);
}

TEST_CASE("brute force refuses oversized inputs") {
  const PricingConfig pricing = fixtures::aws_pricing(100, {128});
  const FnSeq seq = chain(15);
  const auto profiles = chain_profiles(seq, pricing);
  const auto targets = default_targets(profiles, pricing);
  CHECK_THROWS_AS(brute_force_optimize(seq, profiles, pricing,
                                       fixtures::fixed_upload(1130), targets,
                                       std::nullopt),
                  TooLargeError);
  CHECK_NOTHROW(brute_force_optimize(seq, profiles, pricing,
                                     fixtures::fixed_upload(1130), targets,
                                     std::nullopt, 15));
}

TEST_CASE("brute force is deterministic") {
  const PricingConfig pricing = fixtures::aws_pricing(100);
  const auto profiles =
      validate_profiles(fixtures::wildrydes_profiles(), pricing);
  const FnSeq seq = fixtures::wildrydes_fnseq();
  const NetworkConfig network = fixtures::fixed_upload(1130);
  const auto targets = default_targets(profiles, pricing);
  const OptimizeResult a =
      brute_force_optimize(seq, profiles, pricing, network, targets, 5000);
  const OptimizeResult b =
      brute_force_optimize(seq, profiles, pricing, network, targets, 5000);
  CHECK(a.plan.encode(seq) == b.plan.encode(seq));
  CHECK(a.price_usd == b.price_usd);
  CHECK(a.latency_ms == b.latency_ms);
}

TEST_CASE("memory search covers every qualifying assignment") {
  const PricingConfig pricing = fixtures::aws_pricing(100);
  const auto profiles =
      validate_profiles(fixtures::wildrydes_profiles(), pricing);
  const FnSeq seq = fixtures::wildrydes_fnseq();
  const NetworkConfig network = fixtures::fixed_upload(1130);

  const auto points =
      memory_configuration_search(seq, profiles, pricing, network, {128, 256});
  CHECK(points.size() == 32);

  const MemoryConfigPoint* all_small = nullptr;
  for (const auto& pt : points) {
    if (pt.tiers_mb == std::vector<int>{128, 128, 128, 128, 128}) {
      all_small = &pt;
    }
  }
  REQUIRE(all_small != nullptr);
  CHECK(all_small->price_usd == doctest::Approx(160.627125).epsilon(1e-9));
  CHECK(all_small->latency_ms == 4431);

  // Cheapest configuration strictly faster than the all-small baseline:
  // bump only the slow parallel branch.
  const MemoryConfigPoint* best = nullptr;
  for (const auto& pt : points) {
    if (pt.latency_ms >= all_small->latency_ms) continue;
    if (!best || pt.price_usd < best->price_usd) best = &pt;
  }
  REQUIRE(best != nullptr);
  CHECK(best->tiers_mb == std::vector<int>{128, 128, 256, 128, 128});
  CHECK(best->latency_ms == 3448);
  CHECK(best->price_usd == doctest::Approx(160.8355).epsilon(1e-6));
}
