#include <doctest.h>

#include <random>

#include "costless/types.hpp"
#include "fixtures.hpp"

using namespace costless;

TEST_CASE("allowed_memory_tier picks the smallest fitting tier") {
  CHECK(allowed_memory_tier(340, {128, 192, 256, 320, 384}) == 384);
  CHECK(allowed_memory_tier(128, {128, 256}) == 128);
  CHECK(allowed_memory_tier(42, {128, 256}) == 128);
  CHECK_THROWS_AS(allowed_memory_tier(300, {128, 256}), NoTierFitsError);
}

TEST_CASE("allowed_memory_tier is monotone and idempotent") {
  const std::vector<int> tiers = {128, 192, 256, 320, 384, 512};
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> mem(1, 512);
  int prev_tier = 0;
  for (int m = 1; m <= 512; ++m) {
    const int tier = allowed_memory_tier(m, tiers);
    CHECK(tier >= prev_tier);
    CHECK(allowed_memory_tier(tier, tiers) == tier);
    prev_tier = tier;
  }
  for (int i = 0; i < 100; ++i) {
    const int a = mem(rng);
    const int b = mem(rng);
    if (a <= b) {
      CHECK(allowed_memory_tier(a, tiers) <= allowed_memory_tier(b, tiers));
    }
  }
}

TEST_CASE("validate_profile annotates the minimum feasible tier") {
  const PricingConfig pricing = fixtures::aws_pricing(100);
  const FunctionProfile f1 =
      fixtures::make_profile("f1", {{128, 893}, {256, 772}}, 61, 42, 0, 1870);
  const ValidatedProfile vp = validate_profile(f1, pricing);
  CHECK(vp.min_tier_mb == 128);
  CHECK(vp.profile.cloud_exec_ms.at(128) == 893);
  CHECK(vp.profile.edge_exec_ms == 1870);
}

TEST_CASE("validate_profile rejects undersized tiers and missing cloud entries") {
  const PricingConfig pricing = fixtures::aws_pricing(100);
  const FunctionProfile too_small =
      fixtures::make_profile("f", {{128, 500}}, 10, 200);
  CHECK_THROWS_AS(validate_profile(too_small, pricing), TierTooSmallError);

  FunctionProfile edge_only;
  edge_only.function = "f";
  edge_only.edge_exec_ms = 1000;
  edge_only.max_mem_mb = 64;
  CHECK_THROWS_AS(validate_profile(edge_only, pricing), MissingCloudProfileError);
}

TEST_CASE("validate_profile does not mutate its input") {
  const PricingConfig pricing = fixtures::aws_pricing(0);
  const FunctionProfile original =
      fixtures::make_profile("f", {{128, 500}}, 10, 64, 1234, 2000);
  const FunctionProfile copy = original;
  (void)validate_profile(original, pricing);
  CHECK(original.cloud_exec_ms == copy.cloud_exec_ms);
  CHECK(original.sched_ms == copy.sched_ms);
  CHECK(original.max_mem_mb == copy.max_mem_mb);
  CHECK(original.output_bytes == copy.output_bytes);
  CHECK(original.edge_exec_ms == copy.edge_exec_ms);
}

TEST_CASE("pricing and network configs validate their invariants") {
  PricingConfig pricing = fixtures::aws_pricing(100);
  CHECK_NOTHROW(pricing.validate());
  pricing.memory_tiers_mb = {256, 128};
  CHECK_THROWS_AS(pricing.validate(), InvalidInputError);

  NetworkConfig network;
  CHECK_THROWS_AS(network.validate(), InvalidInputError);
  network.bandwidth_bytes_per_sec = 1000.0;
  CHECK_NOTHROW(network.validate());
  network.fixed_upload_ms = 1130;
  CHECK_THROWS_AS(network.validate(), InvalidInputError);
}

TEST_CASE("placement target labels round-trip") {
  CHECK(PlacementTarget::edge().label() == "edge");
  CHECK(PlacementTarget::cloud(128).label() == "cloud_128");
  CHECK(PlacementTarget::from_label("cloud_256") == PlacementTarget::cloud(256));
  CHECK(PlacementTarget::from_label("edge") == PlacementTarget::edge());
  CHECK_THROWS_AS(PlacementTarget::from_label("cloud_x"), InvalidInputError);
}
