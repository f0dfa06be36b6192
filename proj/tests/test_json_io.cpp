#include <doctest.h>

#include <json.hpp>

#include "costless/json_io.hpp"
#include "fixtures.hpp"

using namespace costless;

namespace {

const std::string kData = COSTLESS_DATA_DIR;

}  // namespace

TEST_CASE("shipped data files parse into the measured workflow") {
  const WorkflowSpec wf =
      parse_workflow_json(read_file(kData + "/wildrydes.json"));
  const FnSeq seq = to_fnseq(wf);
  CHECK(seq.order == std::vector<FunctionId>{"f1", "f2", "f3", "f4", "f5"});
  REQUIRE(seq.parallel_groups.size() == 1);
  CHECK(seq.parallel_groups[0] == std::pair<std::size_t, std::size_t>{2, 3});
  CHECK(seq.barriers == std::set<std::size_t>{1});

  const auto raw =
      parse_profiles_json(read_file(kData + "/wildrydes_profiles.json"));
  const auto expected = fixtures::wildrydes_profiles();
  REQUIRE(raw.size() == expected.size());
  for (const auto& [name, p] : expected) {
    const auto& q = raw.at(name);
    CHECK(q.cloud_exec_ms == p.cloud_exec_ms);
    CHECK(q.edge_exec_ms == p.edge_exec_ms);
    CHECK(q.sched_ms == p.sched_ms);
    CHECK(q.max_mem_mb == p.max_mem_mb);
    CHECK(q.output_bytes == p.output_bytes);
  }

  const PricingConfig pricing =
      parse_pricing_json(read_file(kData + "/aws_pricing.json"));
  CHECK(pricing.gb_second_usd == doctest::Approx(0.00001667));
  CHECK(pricing.transition_usd == doctest::Approx(0.000025));
  CHECK(pricing.edge_device_usd_month == doctest::Approx(0.20));
  CHECK(pricing.executions_per_month == 1000000);
  CHECK(pricing.billing_quantum_ms == 100);

  const NetworkConfig fixed =
      parse_network_json(read_file(kData + "/network_fixed1130.json"));
  CHECK(fixed.fixed_upload_ms == 1130);
  const NetworkConfig bw =
      parse_network_json(read_file(kData + "/network_bandwidth.json"));
  CHECK(transmission_time_ms(1350000, bw) == 1130);
}

TEST_CASE("pricing without explicit tiers falls back to the default ladder") {
  const PricingConfig pricing = parse_pricing_json(R"({"gb_second_usd": 1.0})");
  REQUIRE_FALSE(pricing.memory_tiers_mb.empty());
  CHECK(pricing.memory_tiers_mb.front() == 128);
  CHECK(pricing.memory_tiers_mb.back() == 3008);
  for (std::size_t i = 1; i < pricing.memory_tiers_mb.size(); ++i) {
    CHECK(pricing.memory_tiers_mb[i] - pricing.memory_tiers_mb[i - 1] == 64);
  }
}

TEST_CASE("malformed inputs raise InvalidInputError") {
  CHECK_THROWS_AS(parse_workflow_json("not json"), InvalidInputError);
  CHECK_THROWS_AS(parse_workflow_json("{}"), InvalidInputError);
  CHECK_THROWS_AS(parse_profiles_json(R"({"f": {}})"), InvalidInputError);
  CHECK_THROWS_AS(parse_network_json("{}"), InvalidInputError);
  CHECK_THROWS_AS(
      parse_network_json(
          R"({"bandwidth_bytes_per_sec": 1.0, "fixed_upload_ms": 5})"),
      InvalidInputError);
  CHECK_THROWS_AS(
      parse_workflow_json(
          R"({"StartAt": "a", "States": {"a": {"Type": "Map"}}})"),
      UnsupportedStateError);
}

TEST_CASE("plan documents round-trip through JSON") {
  const FnSeq seq = fixtures::wildrydes_fnseq();
  PlanDocument doc;
  doc.plan.spans = {fixtures::make_span(0, 0, PlacementTarget::edge()),
                    fixtures::make_span(1, 4, PlacementTarget::cloud(128))};
  doc.estimate.price_usd = 58.743375;
  doc.estimate.latency_ms = 7082;
  doc.estimate.transitions_per_execution = 2;
  doc.solver = "larac";

  const std::string text = plan_document_to_json(doc, seq);
  const auto j = nlohmann::json::parse(text);
  CHECK(j.at("price_usd").get<double>() == doctest::Approx(58.7434));
  CHECK(j.at("latency_ms").get<std::int64_t>() == 7082);
  CHECK(j.at("transitions_per_execution").get<int>() == 2);
  CHECK(j.at("solver").get<std::string>() == "larac");
  REQUIRE(j.at("plan").size() == 2);
  CHECK(j.at("plan")[0].at("target") == "edge");
  CHECK(j.at("plan")[1].at("functions") ==
        nlohmann::json::array({"f2", "f3", "f4", "f5"}));

  const Plan parsed = parse_plan_json(text, seq);
  REQUIRE(parsed.spans.size() == 2);
  CHECK(parsed.spans[0].target.is_edge());
  CHECK(parsed.spans[1].first == 1);
  CHECK(parsed.spans[1].last == 4);
  CHECK(parsed.spans[1].mode == Span::Mode::Serialized);
}

TEST_CASE("member tier overrides survive the round-trip") {
  const FnSeq seq = fixtures::image_pipeline_fnseq();
  PlanDocument doc;
  doc.plan.spans = {
      fixtures::make_span(0, 1, PlacementTarget::cloud(512)),
      fixtures::make_span(2, 3, PlacementTarget::cloud(256),
                          Span::Mode::ParallelRetained, {128, 256}),
      fixtures::make_span(4, 4, PlacementTarget::cloud(128))};
  doc.solver = "bruteforce";
  const Plan parsed = parse_plan_json(plan_document_to_json(doc, seq), seq);
  REQUIRE(parsed.spans.size() == 3);
  CHECK(parsed.spans[1].mode == Span::Mode::ParallelRetained);
  CHECK(parsed.spans[1].member_tiers_mb == std::vector<int>{128, 256});
}

TEST_CASE("non-contiguous plan spans are rejected") {
  const FnSeq seq = fixtures::wildrydes_fnseq();
  const std::string text = R"({"plan": [
    {"functions": ["f1", "f3"], "target": "cloud_128", "mode": "serialized"}
  ]})";
  CHECK_THROWS_AS(parse_plan_json(text, seq), InvalidInputError);
}

TEST_CASE("frontier CSV lists points with stable plan ids") {
  const FnSeq seq = fixtures::wildrydes_fnseq();
  std::vector<FrontierPoint> frontier(2);
  frontier[0].latency_ms = 3048;
  frontier[0].price_usd = 165.25;
  frontier[0].plan.spans = {fixtures::make_span(0, 4, PlacementTarget::cloud(256))};
  frontier[1].latency_ms = 7082;
  frontier[1].price_usd = 58.75;
  frontier[1].plan.spans = {fixtures::make_span(0, 4, PlacementTarget::cloud(128))};

  const std::string csv = frontier_to_csv(frontier, seq);
  CHECK(csv == "latency_ms,price_usd,plan_id\n"
               "3048,165.2500,p0\n"
               "7082,58.7500,p1\n");

  const auto j = nlohmann::json::parse(frontier_plans_to_json(frontier, seq));
  REQUIRE(j.contains("p0"));
  REQUIRE(j.contains("p1"));
  CHECK(j.at("p1")[0].at("target") == "cloud_128");
}

TEST_CASE("cost graph export matches the in-memory structure") {
  const PricingConfig pricing = fixtures::aws_pricing(100);
  const auto profiles =
      validate_profiles(fixtures::wildrydes_profiles(), pricing);
  const FnSeq seq = fixtures::wildrydes_fnseq();
  const CostGraph g =
      build_cost_graph(seq, profiles, pricing, fixtures::fixed_upload(1130),
                       default_targets(profiles, pricing));
  const auto j = nlohmann::json::parse(cost_graph_to_json(g));
  CHECK(j.at("nodes").size() == g.nodes.size());
  CHECK(j.at("links").size() == g.links.size());
  CHECK(j.at("links")[0].at("from").get<int>() == g.links[0].from);
}
