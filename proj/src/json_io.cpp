#include "costless/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "costless/errors.hpp"

namespace costless {

namespace {

using Json = nlohmann::ordered_json;

Json parse(const std::string& text, const char* what) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw InvalidInputError(std::string(what) + ": not valid JSON");
  }
  return j;
}

double round4(double usd) { return std::round(usd * 10000.0) / 10000.0; }

Json span_to_json(const Span& span, const FnSeq& fnseq) {
  Json s;
  Json functions = Json::array();
  for (std::size_t i = span.first; i <= span.last; ++i) {
    functions.push_back(fnseq.order[i]);
  }
  s["functions"] = std::move(functions);
  s["target"] = span.target.label();
  s["mode"] = span.mode == Span::Mode::ParallelRetained ? "parallel" : "serialized";
  if (!span.member_tiers_mb.empty()) {
    s["member_tiers_mb"] = span.member_tiers_mb;
  }
  return s;
}

Json plan_to_json(const Plan& plan, const FnSeq& fnseq) {
  Json spans = Json::array();
  for (const Span& span : plan.spans) {
    spans.push_back(span_to_json(span, fnseq));
  }
  return spans;
}

}  // namespace

WorkflowSpec parse_workflow_json(const std::string& text) {
  const Json j = parse(text, "workflow");
  WorkflowSpec wf;
  if (!j.contains("StartAt") || !j.contains("States")) {
    throw InvalidInputError("workflow: StartAt and States are required");
  }
  wf.start = j.at("StartAt").get<std::string>();
  for (const auto& [name, sj] : j.at("States").items()) {
    const std::string type = sj.value("Type", "");
    if (type == "Task") {
      TaskState task;
      if (sj.contains("Next")) {
        task.next = sj.at("Next").get<std::string>();
      }
      task.end = sj.value("End", false);
      wf.states.emplace(name, task);
    } else if (type == "Parallel") {
      ParallelState par;
      for (const auto& branch : sj.value("Branches", Json::array())) {
        par.branches.push_back(branch.get<std::vector<std::string>>());
      }
      if (sj.contains("Next")) {
        par.next = sj.at("Next").get<std::string>();
      }
      par.end = sj.value("End", false);
      wf.states.emplace(name, par);
    } else if (type == "Choice") {
      ChoiceState choice;
      if (!sj.contains("MainNext")) {
        throw InvalidInputError("workflow: choice '" + name + "' needs MainNext");
      }
      choice.main_next = sj.at("MainNext").get<std::string>();
      if (sj.contains("Default")) {
        choice.other_next.push_back(sj.at("Default").get<std::string>());
      }
      wf.states.emplace(name, choice);
    } else {
      throw UnsupportedStateError("workflow: state '" + name +
                                  "' has unsupported type '" + type + "'");
    }
  }
  return wf;
}

std::map<FunctionId, FunctionProfile> parse_profiles_json(const std::string& text) {
  const Json j = parse(text, "profiles");
  std::map<FunctionId, FunctionProfile> out;
  for (const auto& [name, pj] : j.items()) {
    FunctionProfile profile;
    profile.function = name;
    if (!pj.contains("exec_ms")) {
      throw InvalidInputError("profiles: '" + name + "' needs exec_ms");
    }
    for (const auto& [target, ms] : pj.at("exec_ms").items()) {
      const PlacementTarget t = PlacementTarget::from_label(target);
      if (t.is_edge()) {
        profile.edge_exec_ms = ms.get<std::int64_t>();
      } else {
        profile.cloud_exec_ms[t.memory_mb] = ms.get<std::int64_t>();
      }
    }
    profile.sched_ms = pj.value("sched_ms", std::int64_t{0});
    profile.max_mem_mb = pj.value("max_mem_mb", 0);
    profile.output_bytes = pj.value("output_bytes", std::int64_t{0});
    out.emplace(name, std::move(profile));
  }
  return out;
}

PricingConfig parse_pricing_json(const std::string& text) {
  const Json j = parse(text, "pricing");
  PricingConfig pricing;
  pricing.gb_second_usd = j.value("gb_second_usd", 0.0);
  pricing.transition_usd = j.value("transition_usd", 0.0);
  pricing.edge_device_usd_month = j.value("edge_device_usd_month", 0.0);
  pricing.executions_per_month = j.value("executions_per_month", std::int64_t{1});
  pricing.billing_quantum_ms = j.value("billing_quantum_ms", std::int64_t{0});
  if (j.contains("memory_tiers_mb")) {
    pricing.memory_tiers_mb = j.at("memory_tiers_mb").get<std::vector<int>>();
  } else {
    pricing.memory_tiers_mb = PricingConfig::default_tiers();
  }
  pricing.validate();
  return pricing;
}

NetworkConfig parse_network_json(const std::string& text) {
  const Json j = parse(text, "network");
  NetworkConfig network;
  if (j.contains("bandwidth_bytes_per_sec")) {
    network.bandwidth_bytes_per_sec = j.at("bandwidth_bytes_per_sec").get<double>();
  }
  if (j.contains("fixed_upload_ms")) {
    network.fixed_upload_ms = j.at("fixed_upload_ms").get<std::int64_t>();
  }
  network.validate();
  return network;
}

std::string plan_document_to_json(const PlanDocument& doc, const FnSeq& fnseq) {
  Json j;
  j["plan"] = plan_to_json(doc.plan, fnseq);
  j["price_usd"] = round4(doc.estimate.price_usd);
  j["latency_ms"] = doc.estimate.latency_ms;
  j["transitions_per_execution"] = doc.estimate.transitions_per_execution;
  j["solver"] = doc.solver;
  return j.dump(2) + "\n";
}

Plan parse_plan_json(const std::string& text, const FnSeq& fnseq) {
  const Json j = parse(text, "plan");
  if (!j.contains("plan")) {
    throw InvalidInputError("plan: missing 'plan' array");
  }
  Plan plan;
  for (const auto& sj : j.at("plan")) {
    const auto functions = sj.at("functions").get<std::vector<std::string>>();
    if (functions.empty()) {
      throw InvalidInputError("plan: span with no functions");
    }
    Span span;
    span.first = fnseq.index_of(functions.front());
    span.last = fnseq.index_of(functions.back());
    for (std::size_t i = 0; i < functions.size(); ++i) {
      if (span.first + i >= fnseq.size() ||
          fnseq.order[span.first + i] != functions[i]) {
        throw InvalidInputError("plan: span functions are not contiguous in "
                                "workflow order");
      }
    }
    span.target = PlacementTarget::from_label(sj.at("target").get<std::string>());
    const std::string mode = sj.value("mode", "serialized");
    if (mode == "parallel") {
      span.mode = Span::Mode::ParallelRetained;
    } else if (mode == "serialized") {
      span.mode = Span::Mode::Serialized;
    } else {
      throw InvalidInputError("plan: unknown mode '" + mode + "'");
    }
    if (sj.contains("member_tiers_mb")) {
      span.member_tiers_mb = sj.at("member_tiers_mb").get<std::vector<int>>();
    }
    plan.spans.push_back(std::move(span));
  }
  return plan;
}

std::string cost_graph_to_json(const CostGraph& graph) {
  Json j;
  Json nodes = Json::array();
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    Json n;
    n["id"] = i;
    n["label"] = graph.nodes[i].id;
    nodes.push_back(std::move(n));
  }
  j["nodes"] = std::move(nodes);
  Json links = Json::array();
  for (const CostGraph::Link& link : graph.links) {
    Json l;
    l["from"] = link.from;
    l["to"] = link.to;
    l["price_usd"] = link.price_usd;
    l["delay_ms"] = link.delay_ms;
    links.push_back(std::move(l));
  }
  j["links"] = std::move(links);
  return j.dump(2) + "\n";
}

std::string frontier_to_csv(const std::vector<FrontierPoint>& frontier,
                            const FnSeq& fnseq) {
  (void)fnseq;
  std::ostringstream csv;
  csv << "latency_ms,price_usd,plan_id\n";
  char price[64];
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    std::snprintf(price, sizeof(price), "%.4f", frontier[i].price_usd);
    csv << frontier[i].latency_ms << ',' << price << ",p" << i << '\n';
  }
  return csv.str();
}

std::string frontier_plans_to_json(const std::vector<FrontierPoint>& frontier,
                                   const FnSeq& fnseq) {
  Json j;
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    j["p" + std::to_string(i)] = plan_to_json(frontier[i].plan, fnseq);
  }
  return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InvalidInputError("cannot read '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw InvalidInputError("cannot write '" + path + "'");
  }
  out << content;
}

}  // namespace costless
