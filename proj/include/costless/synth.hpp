#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "costless/types.hpp"
#include "costless/workflow.hpp"

namespace costless {

/// Synthetic sequential-chain generator for the scalability harness.
/// Cloud execution is sampled per configured tier; larger tiers run the
/// same function at a sampled fraction of the base time.
struct SynthSpec {
  int n_functions = 1;
  std::uint64_t seed = 0;
  std::pair<std::int64_t, std::int64_t> cloud_exec_ms{500, 2000};
  std::pair<std::int64_t, std::int64_t> edge_exec_ms{1000, 5000};
  std::pair<std::int64_t, std::int64_t> sched_ms{50, 300};
  std::pair<std::int64_t, std::int64_t> output_bytes{100000, 2000000};
  std::vector<int> tiers_mb{128};

  void validate() const;
};

struct SynthInstance {
  WorkflowSpec workflow;
  std::map<FunctionId, FunctionProfile> profiles;
};

/// Deterministic per seed: the same spec always yields byte-identical
/// workflows and profiles.
SynthInstance synth_workflow(const SynthSpec& spec);

}  // namespace costless
