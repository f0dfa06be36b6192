#pragma once

#include <map>
#include <string>
#include <vector>

#include "costless/cost_graph.hpp"
#include "costless/estimator.hpp"
#include "costless/solver.hpp"
#include "costless/types.hpp"
#include "costless/workflow.hpp"

namespace costless {

WorkflowSpec parse_workflow_json(const std::string& text);
std::map<FunctionId, FunctionProfile> parse_profiles_json(const std::string& text);
PricingConfig parse_pricing_json(const std::string& text);
NetworkConfig parse_network_json(const std::string& text);

/// Serialized plan plus its estimate, the CLI's main output format.
struct PlanDocument {
  Plan plan;
  PlanEstimate estimate;
  std::string solver;  // "larac" | "bruteforce"
};

std::string plan_document_to_json(const PlanDocument& doc, const FnSeq& fnseq);
Plan parse_plan_json(const std::string& text, const FnSeq& fnseq);

std::string cost_graph_to_json(const CostGraph& graph);

std::string frontier_to_csv(const std::vector<FrontierPoint>& frontier,
                            const FnSeq& fnseq);
std::string frontier_plans_to_json(const std::vector<FrontierPoint>& frontier,
                                   const FnSeq& fnseq);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace costless
