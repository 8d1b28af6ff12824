// trirecom: committed regression fixtures (state counts, files, traces).
#include "doctest.h"
#include "helpers.hpp"
#include "json.hpp"
#include "trirecom/io.hpp"

using namespace trirecom;
using trirecom::testing::region;

namespace {
std::string fixture(const char* name) { return std::string(TRIRECOM_FIXTURE_DIR) + "/" + name; }
}  // namespace

TEST_CASE("state counts match the committed fixture") {
  const auto j = nlohmann::json::parse(read_file(fixture("omega_counts.json")));
  for (const auto& inst : j.at("instances")) {
    const int n = inst.at("n");
    CAPTURE(n);
    const Omega om = enumerate_omega(region(n), SizeTargets{inst.at("k").get<std::array<int, 3>>()}, inst.at("slack"));
    CHECK(om.size() == inst.at("states").get<std::size_t>());
    const Connectivity c = check_connected(build_state_graph(om));
    CHECK(c.components == inst.at("components").get<std::size_t>());
    if (inst.contains("balanced")) {
      std::size_t balanced = 0;
      for (std::size_t s = 0; s < om.size(); ++s) balanced += classify(om.partition(s)).cls == BalanceClass::Balanced;
      CHECK(balanced == inst.at("balanced").get<std::size_t>());
    }
  }
}

TEST_CASE("committed trace still verifies and round-trips") {
  const std::string text = read_file(fixture("n5_132_to_321.trace.json"));
  const Trace t = trace_from_json(text);
  const VerifyReport r = verify_trace(t);
  REQUIRE(r.ok);
  CHECK(*r.final_state == testing::ground(5, {{5, 5, 5}}, {3, 2, 1}));
  CHECK(t.source == testing::ground(5, {{5, 5, 5}}, {1, 3, 2}));
  CHECK(trace_to_json(t) == text);
}

TEST_CASE("committed state file is the ground state") {
  const Partition p = state_from_json(read_file(fixture("n8_ground_123.state.json")));
  CHECK(p == testing::ground(8, {{12, 12, 12}}));
  CHECK(state_from_json(state_to_json(p)) == p);
}

TEST_CASE("malformed files are rejected") {
  CHECK_THROWS_AS(state_from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(state_from_json(R"({"format":"trirecom-state","version":2})"), std::invalid_argument);
  CHECK_THROWS_AS(trace_from_json(R"({"format":"trirecom-state","version":1})"), std::invalid_argument);
  CHECK_THROWS_AS(state_from_json(R"({"format":"trirecom-state","version":1,"n":3,"k":[2,2,2],"labels":[1]})"),
                  std::invalid_argument);
}

TEST_CASE("svg output has one frame per state") {
  const Trace t = trace_from_json(read_file(fixture("n5_132_to_321.trace.json")));
  const std::string svg = render_svg(t);
  std::size_t frames = 0;
  for (std::size_t at = svg.find("<g "); at != std::string::npos; at = svg.find("<g ", at + 1)) ++frames;
  CHECK(frames == t.size() + 1);
  CHECK(svg.find("#d62728") != std::string::npos);
}
