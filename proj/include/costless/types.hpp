#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "costless/errors.hpp"

namespace costless {

using FunctionId = std::string;

/// Where a (fused) function runs: the single edge device, or a cloud
/// memory tier. Edge carries no memory field.
struct PlacementTarget {
  enum class Kind { Edge, Cloud };

  Kind kind = Kind::Cloud;
  int memory_mb = 0;  // Cloud only

  static PlacementTarget edge() { return {Kind::Edge, 0}; }
  static PlacementTarget cloud(int mb) { return {Kind::Cloud, mb}; }

  bool is_edge() const { return kind == Kind::Edge; }
  bool is_cloud() const { return kind == Kind::Cloud; }

  // "edge" or "cloud_<mb>"
  std::string label() const;
  static PlacementTarget from_label(const std::string& label);

  auto operator<=>(const PlacementTarget&) const = default;
};

/// Measured per-function profile. Durations are integer milliseconds.
struct FunctionProfile {
  FunctionId function;
  std::optional<std::int64_t> edge_exec_ms;  // absent: cannot run on edge
  std::map<int, std::int64_t> cloud_exec_ms;  // tier mb -> exec ms
  std::int64_t sched_ms = 0;                  // cloud scheduling delay
  int max_mem_mb = 0;                         // peak memory actually used
  std::int64_t output_bytes = 0;

  bool has_edge() const { return edge_exec_ms.has_value(); }
};

struct PricingConfig {
  double gb_second_usd = 0.0;
  double transition_usd = 0.0;
  double edge_device_usd_month = 0.0;
  std::int64_t executions_per_month = 1;
  std::int64_t billing_quantum_ms = 0;  // 0 disables rounding
  std::vector<int> memory_tiers_mb;     // strictly increasing

  void validate() const;
  static std::vector<int> default_tiers();  // 128..3008 step 64
};

/// Edge-to-cloud transmission: exactly one of the two modes is set.
struct NetworkConfig {
  std::optional<double> bandwidth_bytes_per_sec;
  std::optional<std::int64_t> fixed_upload_ms;

  void validate() const;
};

/// Smallest configured tier >= max_mem_mb. Throws NoTierFitsError when
/// even the largest tier is too small.
int allowed_memory_tier(int max_mem_mb, const std::vector<int>& tiers);

/// A profile that passed validation, annotated with the smallest tier
/// it can be allocated.
struct ValidatedProfile {
  FunctionProfile profile;
  int min_tier_mb = 0;
};

ValidatedProfile validate_profile(const FunctionProfile& profile,
                                  const PricingConfig& pricing);

using ProfileMap = std::map<FunctionId, ValidatedProfile>;

ProfileMap validate_profiles(const std::map<FunctionId, FunctionProfile>& raw,
                             const PricingConfig& pricing);

}  // namespace costless
