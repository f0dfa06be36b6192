#include <chrono>
#include <cstdio>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "costless/cost_graph.hpp"
#include "costless/errors.hpp"
#include "costless/json_io.hpp"
#include "costless/oracle.hpp"
#include "costless/solver.hpp"
#include "costless/synth.hpp"

namespace {

using namespace costless;

struct CommonInputs {
  std::string workflow_path;
  std::string profiles_path;
  std::string pricing_path;
  std::string network_path;
  std::int64_t quantum_override = -1;  // <0: keep the pricing file's value
};

struct LoadedInputs {
  FnSeq fnseq;
  ProfileMap profiles;
  PricingConfig pricing;
  NetworkConfig network;
  std::vector<PlacementTarget> targets;
};

void add_common_options(CLI::App* cmd, CommonInputs* in) {
  cmd->add_option("--workflow", in->workflow_path, "Workflow JSON")->required();
  cmd->add_option("--profiles", in->profiles_path, "Function profiles JSON")->required();
  cmd->add_option("--pricing", in->pricing_path, "Pricing JSON")->required();
  cmd->add_option("--network", in->network_path, "Network JSON")->required();
  cmd->add_option("--quantum-ms", in->quantum_override,
                  "Override billing quantum (0 disables rounding)");
}

LoadedInputs load_inputs(const CommonInputs& in) {
  LoadedInputs out;
  const WorkflowSpec workflow = parse_workflow_json(read_file(in.workflow_path));
  out.fnseq = to_fnseq(workflow);
  out.pricing = parse_pricing_json(read_file(in.pricing_path));
  if (in.quantum_override >= 0) {
    out.pricing.billing_quantum_ms = in.quantum_override;
  }
  out.profiles =
      validate_profiles(parse_profiles_json(read_file(in.profiles_path)), out.pricing);
  for (const FunctionId& fn : out.fnseq.order) {
    if (!out.profiles.count(fn)) {
      throw MissingProfileError(in.profiles_path + ": no profile for function '" +
                                fn + "'");
    }
  }
  out.network = parse_network_json(read_file(in.network_path));
  out.targets = default_targets(out.profiles, out.pricing);
  return out;
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    write_file(out_path, content);
  }
}

int run_optimize_like(const CommonInputs& common, bool brute_force,
                      std::optional<std::int64_t> threshold,
                      const std::string& out_path,
                      const std::string& dump_graph_path,
                      const std::string& all_path, std::size_t cap) {
  const LoadedInputs in = load_inputs(common);
  OptimizeResult result;
  if (brute_force) {
    result = brute_force_optimize(in.fnseq, in.profiles, in.pricing, in.network,
                                  in.targets, threshold, cap);
    if (!all_path.empty()) {
      std::ostringstream csv;
      csv << "price_usd,latency_ms\n";
      char price[64];
      for (const EvaluatedPlan& p :
           evaluate_all(in.fnseq, in.profiles, in.pricing, in.network, in.targets, cap)) {
        std::snprintf(price, sizeof(price), "%.4f", p.price_usd);
        csv << price << ',' << p.latency_ms << '\n';
      }
      write_file(all_path, csv.str());
    }
  } else {
    const CostGraph graph =
        build_cost_graph(in.fnseq, in.profiles, in.pricing, in.network, in.targets);
    if (!dump_graph_path.empty()) {
      write_file(dump_graph_path, cost_graph_to_json(graph));
    }
    result = larac(graph, threshold);
  }
  if (!result.feasible) {
    std::cerr << "error: threshold " << (threshold ? *threshold : 0)
              << " ms is infeasible; minimum achievable latency is "
              << result.latency_ms << " ms\n";
    return 2;
  }
  PlanDocument doc;
  doc.plan = result.plan;
  doc.estimate = estimate_plan(result.plan, in.fnseq, in.profiles, in.pricing, in.network);
  doc.solver = brute_force ? "bruteforce" : "larac";
  emit(out_path, plan_document_to_json(doc, in.fnseq));
  return 0;
}

int run_bench(int n_functions, std::uint64_t seed, int repeat, int jobs,
              std::size_t cap, const std::string& out_path) {
  SynthSpec spec;
  spec.n_functions = n_functions;
  PricingConfig pricing;
  pricing.gb_second_usd = 0.00001667;
  pricing.transition_usd = 0.000025;
  pricing.edge_device_usd_month = 0.20;
  pricing.executions_per_month = 1000000;
  pricing.billing_quantum_ms = 100;
  pricing.memory_tiers_mb = spec.tiers_mb;
  NetworkConfig network;
  network.bandwidth_bytes_per_sec = 1194690.0;

  auto run_once = [&](std::uint64_t run_seed) {
    spec.seed = run_seed;
    const SynthInstance inst = synth_workflow(spec);
    const FnSeq fnseq = to_fnseq(inst.workflow);
    const ProfileMap profiles = validate_profiles(inst.profiles, pricing);
    const std::vector<PlacementTarget> targets = default_targets(profiles, pricing);

    std::ostringstream rows;
    char price[64];
    {
      const auto t0 = std::chrono::steady_clock::now();
      const CostGraph graph =
          build_cost_graph(fnseq, profiles, pricing, network, targets);
      const OptimizeResult r = larac(graph, std::nullopt);
      const auto t1 = std::chrono::steady_clock::now();
      const double wall =
          std::chrono::duration<double, std::milli>(t1 - t0).count();
      std::snprintf(price, sizeof(price), "%.4f", r.price_usd);
      rows << n_functions << ",costless," << wall << ',' << price << '\n';
    }
    if (fnseq.size() <= cap) {
      const auto t0 = std::chrono::steady_clock::now();
      const OptimizeResult r = brute_force_optimize(fnseq, profiles, pricing,
                                                    network, targets,
                                                    std::nullopt, cap);
      const auto t1 = std::chrono::steady_clock::now();
      const double wall =
          std::chrono::duration<double, std::milli>(t1 - t0).count();
      std::snprintf(price, sizeof(price), "%.4f", r.price_usd);
      rows << n_functions << ",bruteforce," << wall << ',' << price << '\n';
    }
    return rows.str();
  };

  std::string csv = "n,method,wall_ms,price_usd\n";
  if (jobs > 1) {
    std::vector<std::future<std::string>> futures;
    for (int k = 0; k < repeat; ++k) {
      futures.push_back(std::async(std::launch::async, run_once,
                                   seed + static_cast<std::uint64_t>(k)));
    }
    for (auto& f : futures) {
      csv += f.get();
    }
  } else {
    for (int k = 0; k < repeat; ++k) {
      csv += run_once(seed + static_cast<std::uint64_t>(k));
    }
  }
  emit(out_path, csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serverless workflow fusion/placement price optimizer"};
  app.require_subcommand(1);

  CommonInputs common;
  std::optional<std::int64_t> threshold;
  std::string out_path;
  std::string dump_graph_path;
  std::string all_path;
  std::string plan_path;
  std::size_t cap = kDefaultBruteForceCap;
  int sweep = 0;

  auto* optimize = app.add_subcommand("optimize", "Find the minimum-price plan");
  add_common_options(optimize, &common);
  optimize->add_option("--threshold-ms", threshold,
                       "Latency threshold; omit for unconstrained");
  optimize->add_option("--out", out_path, "Output path (default stdout)");
  optimize->add_option("--dump-graph", dump_graph_path, "Dump cost graph JSON");

  auto* estimate = app.add_subcommand("estimate", "Re-price a plan document");
  add_common_options(estimate, &common);
  estimate->add_option("--plan", plan_path, "Plan JSON to evaluate")->required();
  estimate->add_option("--out", out_path, "Output path (default stdout)");

  auto* frontier = app.add_subcommand("frontier", "Emit the price/latency Pareto front");
  add_common_options(frontier, &common);
  frontier->add_option("--out", out_path, "CSV output path (default stdout)");
  frontier->add_option("--sweep", sweep,
                       "Approximate via LARAC at N thresholds instead of exact search");

  auto* oracle = app.add_subcommand("oracle", "Brute-force reference optimizer");
  add_common_options(oracle, &common);
  oracle->add_option("--threshold-ms", threshold,
                     "Latency threshold; omit for unconstrained");
  oracle->add_option("--out", out_path, "Output path (default stdout)");
  oracle->add_option("--all", all_path, "Dump every (price, latency) pair as CSV");
  oracle->add_option("--cap", cap, "Refuse instances larger than this");

  auto* validate = app.add_subcommand("validate", "Check inputs, print FnSeq and graph size");
  add_common_options(validate, &common);

  int bench_n = 10;
  std::uint64_t bench_seed = 1;
  int bench_repeat = 1;
  int bench_jobs = 1;
  auto* bench = app.add_subcommand("bench", "Synthetic scalability harness");
  bench->add_option("--functions", bench_n, "Chain length")->required();
  bench->add_option("--seed", bench_seed, "Base RNG seed");
  bench->add_option("--repeat", bench_repeat, "Instances to run");
  bench->add_option("--jobs", bench_jobs, "Worker pool size");
  bench->add_option("--cap", cap, "Brute-force size cap");
  bench->add_option("--out", out_path, "CSV output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (optimize->parsed()) {
      return run_optimize_like(common, false, threshold, out_path,
                               dump_graph_path, "", cap);
    }
    if (oracle->parsed()) {
      return run_optimize_like(common, true, threshold, out_path, "", all_path, cap);
    }
    if (estimate->parsed()) {
      const LoadedInputs in = load_inputs(common);
      const Plan plan = parse_plan_json(read_file(plan_path), in.fnseq);
      const PlanEstimate est =
          estimate_plan(plan, in.fnseq, in.profiles, in.pricing, in.network);
      std::ostringstream json;
      char price[64];
      std::snprintf(price, sizeof(price), "%.4f", est.price_usd);
      json << "{\"price_usd\": " << price << ", \"latency_ms\": " << est.latency_ms
           << ", \"transitions_per_execution\": " << est.transitions_per_execution
           << "}\n";
      emit(out_path, json.str());
      return 0;
    }
    if (frontier->parsed()) {
      const LoadedInputs in = load_inputs(common);
      const CostGraph graph =
          build_cost_graph(in.fnseq, in.profiles, in.pricing, in.network, in.targets);
      const std::vector<FrontierPoint> points =
          sweep > 0 ? frontier_sweep(graph, sweep) : pareto_frontier(graph);
      emit(out_path, frontier_to_csv(points, in.fnseq));
      if (!out_path.empty()) {
        write_file(out_path + ".plans.json", frontier_plans_to_json(points, in.fnseq));
      }
      return 0;
    }
    if (validate->parsed()) {
      const LoadedInputs in = load_inputs(common);
      std::cout << "functions=" << in.fnseq.size() << " order=[";
      for (std::size_t i = 0; i < in.fnseq.order.size(); ++i) {
        std::cout << (i ? "," : "") << in.fnseq.order[i];
      }
      std::cout << "]\n";
      for (const auto& [g1, g2] : in.fnseq.parallel_groups) {
        std::cout << "parallel_group=[" << g1 << "," << g2 << "]\n";
      }
      for (std::size_t b : in.fnseq.barriers) {
        std::cout << "barrier=" << b << "\n";
      }
      const CostGraph graph =
          build_cost_graph(in.fnseq, in.profiles, in.pricing, in.network, in.targets);
      std::cout << "nodes=" << graph.nodes.size() << " links=" << graph.links.size()
                << "\n";
      return 0;
    }
    if (bench->parsed()) {
      return run_bench(bench_n, bench_seed, bench_repeat, bench_jobs, cap, out_path);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
