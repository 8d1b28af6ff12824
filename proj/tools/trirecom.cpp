// trirecom: command-line front end (path, enumerate, verify, stats, rigid-demo, render).
#include <cmath>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "trirecom/io.hpp"
#include "trirecom/oracle.hpp"
#include "trirecom/pathfinder.hpp"

using namespace trirecom;

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

SizeTargets parse_targets(int n, const std::string& text) {
  const int total = n * (n + 1) / 2;
  if (text.empty()) return SizeTargets{{(total + 2) / 3, (total + 1) / 3, total / 3}};
  std::array<int, 3> k{};
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  if (!(in >> k[0] >> c1 >> k[1] >> c2 >> k[2]) || c1 != ',' || c2 != ',' || !(in >> std::ws).eof())
    throw UsageError("--k expects three comma-separated sizes, got '" + text + "'");
  if (k[0] + k[1] + k[2] != total)
    throw UsageError("--k sizes must sum to " + std::to_string(total) + " for n=" + std::to_string(n));
  return SizeTargets{k};
}

std::shared_ptr<const TriRegion> make_region(int n) {
  try {
    return std::make_shared<const TriRegion>(n);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

std::string k_string(const SizeTargets& k) {
  return std::to_string(k[1]) + "," + std::to_string(k[2]) + "," + std::to_string(k[3]);
}

Partition endpoint(const std::string& file, const std::optional<std::string>& ground,
                   const std::shared_ptr<const TriRegion>& region, const SizeTargets& k, const char* which) {
  if (!file.empty()) {
    Partition p = state_from_json(read_file(file));
    if (p.region().n() != region->n() || !(p.targets() == k))
      throw UsageError(std::string(which) + " state does not match --n/--k");
    Partition q(region, k, p.labels());
    if (!in_omega(q)) throw std::invalid_argument(std::string(which) + " state is not in Omega: " + classify(q).reason);
    return q;
  }
  if (!ground) throw UsageError(std::string("missing ") + which + " endpoint (state file or --ground)");
  try {
    return ground_state(region, k, parse_perm(*ground));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int cmd_path(int n, const std::string& kspec, const std::string& from, const std::string& to,
             const std::vector<std::string>& grounds, const std::string& out, const std::string& gran) {
  auto region = make_region(n);
  const SizeTargets k = parse_targets(n, kspec);
  std::size_t gi = 0;
  auto next_ground = [&](bool needed) -> std::optional<std::string> {
    if (!needed || gi >= grounds.size()) return std::nullopt;
    return grounds[gi++];
  };
  const Partition sigma = endpoint(from, next_ground(from.empty()), region, k, "source");
  const Partition tau = endpoint(to, next_ground(to.empty()), region, k, "target");
  if (gi != grounds.size()) throw UsageError("too many --ground values");
  const Trace t = path(sigma, tau, gran == "flip" ? Granularity::Flip : Granularity::Recom);
  if (!out.empty()) write_file(out, trace_to_json(t));
  const double n3 = static_cast<double>(n) * n * n;
  std::printf("steps %zu\nsteps_per_n3 %.6f\n", t.size(), static_cast<double>(t.size()) / n3);
  return 0;
}

int cmd_enumerate(int n, const std::string& kspec, int slack, const std::string& out) {
  auto region = make_region(n);
  const SizeTargets k = parse_targets(n, kspec);
  const Omega omega = enumerate_omega(region, k, slack);
  std::size_t balanced = 0;
  for (std::size_t i = 0; i < omega.size(); ++i)
    if (classify(omega.partition(i)).cls == BalanceClass::Balanced) ++balanced;
  std::printf("states %zu\nbalanced %zu\n", omega.size(), balanced);
  if (!out.empty()) {
    nlohmann::json j = {{"format", "trirecom-omega"}, {"version", kTraceFormatVersion}, {"n", n},
                        {"k", k.k},                   {"slack", slack},             {"count", omega.size()}};
    nlohmann::json states = nlohmann::json::array();
    for (std::size_t i = 0; i < omega.size(); ++i) states.push_back(omega.partition(i).labels());
    j["states"] = std::move(states);
    write_file(out, j.dump() + "\n");
  }
  return 0;
}

int cmd_verify(const std::string& file) {
  const Trace t = trace_from_json(read_file(file));
  const VerifyReport r = verify_trace(t);
  if (r.ok) {
    std::printf("ok %zu steps\n", r.steps);
    return 0;
  }
  std::printf("invalid at step %ld: %s\n", r.failed_step, r.reason.c_str());
  return kExitDomain;
}

int cmd_stats(int n, const std::string& kspec, int slack) {
  auto region = make_region(n);
  const SizeTargets k = parse_targets(n, kspec);
  const Omega omega = enumerate_omega(region, k, slack);
  const StateGraph g = build_state_graph(omega);
  const Connectivity c = check_connected(g);
  const EccentricityStats e = eccentricity_stats(g);
  std::printf("n %d\nk %s\nslack %d\nstates %zu\nedges %zu\nconnected %s\ncomponents %zu\nrigid %zu\n", n,
              k_string(k).c_str(), slack, omega.size(), e.edges, c.connected ? "yes" : "no", c.components,
              rigid_states(g).size());
  std::printf("%s %d\nmean_eccentricity %.4f\neccentricity_sources %zu\n",
              e.exact ? "diameter" : "diameter_lower_bound", e.diameter_lower, e.mean_eccentricity, e.sources);
  return 0;
}

std::string ascii(const Partition& p) {
  std::string s;
  const TriRegion& r = p.region();
  for (int row = 1; row <= r.n(); ++row) {
    for (int col = row; col <= r.n(); ++col) s += std::to_string(p.label(Vertex{col, row})) + " ";
    s.back() = '\n';
  }
  return s;
}

int cmd_rigid_demo(const std::string& out) {
  auto region = make_region(3);
  const SizeTargets k{{2, 2, 2}};
  const Omega exact = enumerate_omega(region, k, 0);
  const StateGraph g = build_state_graph(exact);
  const auto rigid = rigid_states(g);
  std::printf("exact sizes (2,2,2): %zu states, %zu rigid up to labels\n", exact.size(), rigid.size());
  if (rigid.empty()) {
    std::printf("no rigid partition found\n");
    return kExitDomain;
  }
  const Partition p = exact.partition(rigid.front());
  for (std::uint32_t nb : g.neighbors(rigid.front()))
    if (!same_up_to_labels(exact.states[nb], exact.states[rigid.front()])) {
      std::printf("partition has a non-relabelling neighbor\n");
      return kExitDomain;
    }
  std::printf("rigid partition (rows top to bottom):\n%s", ascii(p).c_str());
  const Omega loose = enumerate_omega(region, k, 1);
  const Connectivity c = check_connected(build_state_graph(loose));
  std::printf("with slack 1: %zu states, connected %s\n", loose.size(), c.connected ? "yes" : "no");
  if (!out.empty()) write_file(out, render_svg(p, "rigid"));
  return c.connected ? 0 : kExitDomain;
}

int cmd_render(const std::string& state, const std::string& trace, const std::string& out) {
  if (state.empty() == trace.empty()) throw UsageError("render needs exactly one of --state or --trace");
  const std::string svg =
      state.empty() ? render_svg(trace_from_json(read_file(trace))) : render_svg(state_from_json(read_file(state)));
  write_file(out, svg);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Three-district recombination on the triangular lattice"};
  app.require_subcommand(1);

  int n = 5, slack = 1;
  std::string kspec, from, to, out, trace_file, state_file, granularity = "recom";
  std::vector<std::string> grounds;

  auto* path_cmd = app.add_subcommand("path", "Construct and verify a path between two partitions");
  path_cmd->add_option("--n", n, "Side length")->check(CLI::Range(2, 10));
  path_cmd->add_option("--k", kspec, "District sizes k1,k2,k3 (default: balanced)");
  path_cmd->add_option("--from", from, "Source state file");
  path_cmd->add_option("--to", to, "Target state file");
  path_cmd->add_option("--ground", grounds, "Ground-state permutation for a missing endpoint (e.g. 123)")
      ->expected(0, 2)->allow_extra_args(false);
  path_cmd->add_option("--out", out, "Write the trace JSON here");
  path_cmd->add_option("--granularity", granularity, "flip or recom")->check(CLI::IsMember({"flip", "recom"}));

  auto* enum_cmd = app.add_subcommand("enumerate", "Enumerate the state space");
  enum_cmd->add_option("--n", n, "Side length")->check(CLI::Range(2, 6));
  enum_cmd->add_option("--k", kspec, "District sizes k1,k2,k3");
  enum_cmd->add_option("--slack", slack, "Allowed size deviation")->check(CLI::Range(0, 1));
  enum_cmd->add_option("--out", out, "Write all states as JSON");

  auto* verify_cmd = app.add_subcommand("verify", "Re-check every step of a trace");
  verify_cmd->add_option("--trace", trace_file, "Trace file")->required();

  auto* stats_cmd = app.add_subcommand("stats", "State-space size, connectivity and eccentricity");
  stats_cmd->add_option("--n", n, "Side length")->check(CLI::Range(2, 6));
  stats_cmd->add_option("--k", kspec, "District sizes k1,k2,k3");
  stats_cmd->add_option("--slack", slack, "Allowed size deviation")->check(CLI::Range(0, 1));

  auto* rigid_cmd = app.add_subcommand("rigid-demo", "Show a rigid exact-size partition at n=3");
  rigid_cmd->add_option("--out", out, "Also render it as SVG");

  auto* render_cmd = app.add_subcommand("render", "Render a state or a trace as SVG");
  render_cmd->add_option("--state", state_file, "State file");
  render_cmd->add_option("--trace", trace_file, "Trace file");
  render_cmd->add_option("--out", out, "SVG output")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*path_cmd) return cmd_path(n, kspec, from, to, grounds, out, granularity);
    if (*enum_cmd) return cmd_enumerate(n, kspec, slack, out);
    if (*verify_cmd) return cmd_verify(trace_file);
    if (*stats_cmd) return cmd_stats(n, kspec, slack);
    if (*rigid_cmd) return cmd_rigid_demo(out);
    if (*render_cmd) return cmd_render(state_file, trace_file, out);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitDomain;
  }
  return kExitUsage;
}
