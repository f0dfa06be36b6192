#pragma once

#include <map>

#include "costless/cost_graph.hpp"
#include "costless/estimator.hpp"
#include "costless/types.hpp"
#include "costless/workflow.hpp"

namespace fixtures {

using namespace costless;

// AWS-style rates used throughout the tests; quantum configurable because
// several goldens assume unrounded billing.
inline PricingConfig aws_pricing(std::int64_t quantum_ms,
                                 std::vector<int> tiers = {128, 256}) {
  PricingConfig pricing;
  pricing.gb_second_usd = 0.00001667;
  pricing.transition_usd = 0.000025;
  pricing.edge_device_usd_month = 0.20;
  pricing.executions_per_month = 1000000;
  pricing.billing_quantum_ms = quantum_ms;
  pricing.memory_tiers_mb = std::move(tiers);
  return pricing;
}

inline NetworkConfig fixed_upload(std::int64_t ms = 1130) {
  NetworkConfig network;
  network.fixed_upload_ms = ms;
  return network;
}

inline FunctionProfile make_profile(FunctionId name,
                                    std::map<int, std::int64_t> cloud_exec,
                                    std::int64_t sched_ms, int max_mem_mb,
                                    std::int64_t output_bytes = 0,
                                    std::optional<std::int64_t> edge_exec = {}) {
  FunctionProfile p;
  p.function = std::move(name);
  p.cloud_exec_ms = std::move(cloud_exec);
  p.sched_ms = sched_ms;
  p.max_mem_mb = max_mem_mb;
  p.output_bytes = output_bytes;
  p.edge_exec_ms = edge_exec;
  return p;
}

// The five measured image-pipeline functions: f1 branch-decides, f3/f4
// run in parallel, only f1 has an edge build.
inline std::map<FunctionId, FunctionProfile> wildrydes_profiles() {
  return {
      {"f1", make_profile("f1", {{128, 893}, {256, 772}}, 61, 42, 1350000, 1870)},
      {"f2", make_profile("f2", {{128, 970}, {256, 743}}, 52, 38, 1350000)},
      {"f3", make_profile("f3", {{128, 2063}, {256, 1080}}, 172, 83, 250000)},
      {"f4", make_profile("f4", {{128, 844}, {256, 735}}, 153, 37, 250000)},
      {"f5", make_profile("f5", {{128, 153}, {256, 101}}, 67, 38, 2000)},
  };
}

inline FnSeq wildrydes_fnseq() {
  FnSeq seq;
  seq.order = {"f1", "f2", "f3", "f4", "f5"};
  seq.parallel_groups = {{2, 3}};
  seq.barriers = {1};  // the branch-deciding f1 is never fused
  return seq;
}

// Five-function image workflow with per-function memories 512/128/128/256/128
// and durations 2/5/1.5/0.3/0.2 seconds; thumbnail and indexing in parallel.
inline std::map<FunctionId, FunctionProfile> image_pipeline_profiles() {
  return {
      {"FaceDetection",
       make_profile("FaceDetection", {{512, 2000}}, 0, 512, 1500000)},
      {"CheckFaceDuplicate",
       make_profile("CheckFaceDuplicate", {{128, 5000}, {512, 5000}}, 0, 128)},
      {"Thumbnail", make_profile("Thumbnail", {{128, 1500}}, 0, 128)},
      {"AddFaceToIndex", make_profile("AddFaceToIndex", {{256, 300}}, 0, 200)},
      {"PersistMetadata", make_profile("PersistMetadata", {{128, 200}}, 0, 128)},
  };
}

inline FnSeq image_pipeline_fnseq() {
  FnSeq seq;
  seq.order = {"FaceDetection", "CheckFaceDuplicate", "Thumbnail",
               "AddFaceToIndex", "PersistMetadata"};
  seq.parallel_groups = {{2, 3}};
  return seq;
}

inline Span make_span(std::size_t first, std::size_t last, PlacementTarget target,
                      Span::Mode mode = Span::Mode::Serialized,
                      std::vector<int> member_tiers = {}) {
  return Span{first, last, mode, target, std::move(member_tiers)};
}

}  // namespace fixtures
