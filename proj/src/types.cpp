#include "costless/types.hpp"

#include <algorithm>
#include <charconv>

namespace costless {

std::string PlacementTarget::label() const {
  if (kind == Kind::Edge) {
    return "edge";
  }
  return "cloud_" + std::to_string(memory_mb);
}

PlacementTarget PlacementTarget::from_label(const std::string& label) {
  if (label == "edge") {
    return edge();
  }
  if (label.rfind("cloud_", 0) == 0) {
    int mb = 0;
    const char* first = label.data() + 6;
    const char* last = label.data() + label.size();
    auto [ptr, ec] = std::from_chars(first, last, mb);
    if (ec == std::errc{} && ptr == last && mb > 0) {
      return cloud(mb);
    }
  }
  throw InvalidInputError("unknown placement target '" + label + "'");
}

void PricingConfig::validate() const {
  if (gb_second_usd < 0 || transition_usd < 0 || edge_device_usd_month < 0) {
    throw InvalidInputError("pricing: monetary rates must be >= 0");
  }
  if (executions_per_month < 1) {
    throw InvalidInputError("pricing: executions_per_month must be >= 1");
  }
  if (billing_quantum_ms < 0) {
    throw InvalidInputError("pricing: billing_quantum_ms must be >= 0");
  }
  if (memory_tiers_mb.empty()) {
    throw InvalidInputError("pricing: memory_tiers_mb must be nonempty");
  }
  for (std::size_t i = 0; i < memory_tiers_mb.size(); ++i) {
    if (memory_tiers_mb[i] <= 0) {
      throw InvalidInputError("pricing: memory tiers must be positive");
    }
    if (i > 0 && memory_tiers_mb[i] <= memory_tiers_mb[i - 1]) {
      throw InvalidInputError("pricing: memory tiers must be strictly increasing");
    }
  }
}

std::vector<int> PricingConfig::default_tiers() {
  std::vector<int> tiers;
  for (int mb = 128; mb <= 3008; mb += 64) {
    tiers.push_back(mb);
  }
  return tiers;
}

void NetworkConfig::validate() const {
  const bool has_bw = bandwidth_bytes_per_sec.has_value();
  const bool has_fixed = fixed_upload_ms.has_value();
  if (has_bw == has_fixed) {
    throw InvalidInputError(
        "network: exactly one of bandwidth_bytes_per_sec / fixed_upload_ms "
        "must be set");
  }
  if (has_bw && *bandwidth_bytes_per_sec <= 0) {
    throw InvalidInputError("network: bandwidth must be positive");
  }
  if (has_fixed && *fixed_upload_ms <= 0) {
    throw InvalidInputError("network: fixed_upload_ms must be positive");
  }
}

int allowed_memory_tier(int max_mem_mb, const std::vector<int>& tiers) {
  auto it = std::lower_bound(tiers.begin(), tiers.end(), max_mem_mb);
  if (it == tiers.end()) {
    throw NoTierFitsError("no memory tier fits " + std::to_string(max_mem_mb) +
                          " MB (largest is " + std::to_string(tiers.back()) +
                          " MB)");
  }
  return *it;
}

ValidatedProfile validate_profile(const FunctionProfile& profile,
                                  const PricingConfig& pricing) {
  if (profile.function.empty()) {
    throw InvalidInputError("profile: function name must be nonempty");
  }
  if (profile.max_mem_mb <= 0) {
    throw InvalidInputError(profile.function + ": max_mem_mb must be positive");
  }
  if (profile.output_bytes < 0) {
    throw InvalidInputError(profile.function + ": output_bytes must be >= 0");
  }
  if (profile.sched_ms < 0) {
    throw InvalidInputError(profile.function + ": sched_ms must be >= 0");
  }
  if (profile.edge_exec_ms && *profile.edge_exec_ms <= 0) {
    throw InvalidInputError(profile.function + ": edge exec time must be positive");
  }
  if (profile.cloud_exec_ms.empty()) {
    throw MissingCloudProfileError(profile.function +
                                   ": at least one cloud exec entry required");
  }
  const int min_tier = allowed_memory_tier(profile.max_mem_mb, pricing.memory_tiers_mb);
  for (const auto& [tier_mb, exec_ms] : profile.cloud_exec_ms) {
    if (exec_ms <= 0) {
      throw InvalidInputError(profile.function + ": cloud exec time must be positive");
    }
    if (tier_mb < min_tier) {
      throw TierTooSmallError(profile.function + ": tier " +
                              std::to_string(tier_mb) + " MB < required " +
                              std::to_string(min_tier) + " MB");
    }
  }
  return ValidatedProfile{profile, min_tier};
}

ProfileMap validate_profiles(const std::map<FunctionId, FunctionProfile>& raw,
                             const PricingConfig& pricing) {
  ProfileMap out;
  for (const auto& [name, profile] : raw) {
    out.emplace(name, validate_profile(profile, pricing));
  }
  return out;
}

}  // namespace costless
