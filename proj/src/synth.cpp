#include "costless/synth.hpp"

#include <random>

#include "costless/errors.hpp"

namespace costless {

void SynthSpec::validate() const {
  if (n_functions < 1) {
    throw InvalidInputError("synth: n_functions must be >= 1");
  }
  auto check_range = [](std::pair<std::int64_t, std::int64_t> r, const char* what) {
    if (r.first <= 0 || r.second < r.first) {
      throw InvalidInputError(std::string("synth: bad range for ") + what);
    }
  };
  check_range(cloud_exec_ms, "cloud_exec_ms");
  check_range(edge_exec_ms, "edge_exec_ms");
  check_range(output_bytes, "output_bytes");
  if (sched_ms.first < 0 || sched_ms.second < sched_ms.first) {
    throw InvalidInputError("synth: bad range for sched_ms");
  }
  if (tiers_mb.empty()) {
    throw InvalidInputError("synth: tiers_mb must be nonempty");
  }
}

SynthInstance synth_workflow(const SynthSpec& spec) {
  spec.validate();
  std::mt19937_64 rng(spec.seed);
  auto sample = [&](std::pair<std::int64_t, std::int64_t> range) {
    return std::uniform_int_distribution<std::int64_t>(range.first,
                                                       range.second)(rng);
  };

  SynthInstance inst;
  for (int i = 1; i <= spec.n_functions; ++i) {
    const FunctionId name = "s" + std::to_string(i);
    FunctionProfile profile;
    profile.function = name;
    const std::int64_t base_exec = sample(spec.cloud_exec_ms);
    profile.cloud_exec_ms[spec.tiers_mb.front()] = base_exec;
    for (std::size_t t = 1; t < spec.tiers_mb.size(); ++t) {
      // Speedup factor in [0.5, 1.0] of the next-smaller tier's time.
      const double factor =
          std::uniform_real_distribution<double>(0.5, 1.0)(rng);
      const std::int64_t prev = profile.cloud_exec_ms[spec.tiers_mb[t - 1]];
      profile.cloud_exec_ms[spec.tiers_mb[t]] =
          std::max<std::int64_t>(1, static_cast<std::int64_t>(prev * factor));
    }
    profile.edge_exec_ms = sample(spec.edge_exec_ms);
    profile.sched_ms = sample(spec.sched_ms);
    profile.max_mem_mb = spec.tiers_mb.front();  // every tier qualifies
    profile.output_bytes = sample(spec.output_bytes);
    inst.profiles.emplace(name, profile);

    TaskState task;
    if (i == spec.n_functions) {
      task.end = true;
    } else {
      task.next = "s" + std::to_string(i + 1);
    }
    inst.workflow.states.emplace(name, task);
  }
  inst.workflow.start = "s1";
  return inst;
}

}  // namespace costless
