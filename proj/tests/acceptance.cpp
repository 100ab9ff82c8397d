// Acceptance runner: `acceptance --criterion N` checks one criterion and
// prints a single PASS/FAIL line. Benchmark instances are looked up in
// $MWCARP_DATA_DIR, falling back to the bundled data/instances directory.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "mwcarp/bench.hpp"
#include "mwcarp/error.hpp"
#include "mwcarp/io.hpp"
#include "mwcarp/rpp.hpp"
#include "support/generators.hpp"

namespace fs = std::filesystem;
using namespace mwcarp;
using testgen::Rng;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

fs::path data_dir() {
  if (const char* env = std::getenv("MWCARP_DATA_DIR"); env && *env) return env;
  return MWCARP_DEFAULT_DATA_DIR;
}

// Finds <dir>/**/<name>.* and reads it in whichever format parses.
std::optional<Instance> load_benchmark(const std::string& name) {
  const fs::path dir = data_dir();
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) return std::nullopt;
  for (const auto& entry : fs::recursive_directory_iterator(dir, ec)) {
    if (!entry.is_regular_file() || entry.path().stem() != name) continue;
    const std::string text = read_text_file(entry.path().string());
    try {
      return parse_instance(text);
    } catch (const Error&) {
      Instance inst = parse_legacy_instance(text);
      inst.name = name;
      return inst;
    }
  }
  return std::nullopt;
}

std::string missing(const std::vector<std::string>& names) {
  std::string s = "benchmark-data: missing";
  for (const auto& n : names) s += " " + n;
  return s + " under " + data_dir().string();
}

Cost reported(const Instance& inst, const Solution& sol) { return sol.total_cost + inst.service_surcharge; }

std::string fmt(const char* format, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, x);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome benchmark_reproduction() {
  const std::vector<std::pair<std::string, Cost>> targets = {{"lpr-a-01", 13484}, {"lpr-b-01", 14835}};
  std::vector<std::string> absent;
  std::vector<Instance> instances;
  for (const auto& [name, target] : targets) {
    auto inst = load_benchmark(name);
    if (inst) {
      instances.push_back(std::move(*inst));
    } else {
      absent.push_back(name);
    }
  }
  if (!absent.empty()) return {false, missing(absent)};
  Outcome out{true, ""};
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    const Cost cost = reported(instances[i], solve_mwcarp(instances[i], {.runs = 20}).best);
    const double dev = std::abs(static_cast<double>(cost - targets[i].second)) / static_cast<double>(targets[i].second);
    out.pass = out.pass && dev <= 0.01;
    out.detail += targets[i].first + "=" + std::to_string(cost) + " (target " + std::to_string(targets[i].second) +
                  ", dev " + fmt("%.4f", dev) + ", " + fmt("%.1f", seconds_since(t0)) + "s) ";
  }
  return out;
}

Outcome relative_error_bound() {
  std::vector<std::string> absent;
  double worst = 0;
  std::string worst_name;
  int checked = 0;
  bool pass = true;
  const auto t0 = std::chrono::steady_clock::now();
  for (const ReferenceBound& b : reference_bounds()) {
    if (b.table != "lpr" && b.table != "mval") continue;
    const auto inst = load_benchmark(std::string(b.instance));
    if (!inst) {
      absent.push_back(std::string(b.instance));
      continue;
    }
    const double ratio =
        static_cast<double>(reported(*inst, solve_mwcarp(*inst, {.runs = 20}).best)) / static_cast<double>(b.lb);
    ++checked;
    pass = pass && ratio < 1.25;
    if (ratio > worst) {
      worst = ratio;
      worst_name = std::string(b.instance);
    }
  }
  if (!absent.empty()) return {false, missing(absent)};
  return {pass, std::to_string(checked) + " instances, worst ratio " + fmt("%.4f", worst) + " on " + worst_name + ", " +
                    fmt("%.1f", seconds_since(t0)) + "s"};
}

Outcome egl_sanity() {
  const auto inst = load_benchmark("egl-g1-A");
  if (!inst) return {false, missing({"egl-g1-A"})};
  Cost best = kInfinity;
  std::string detail;
  for (ServiceHeuristic h : {ServiceHeuristic::kPoR, ServiceHeuristic::kPoP, ServiceHeuristic::kPoS}) {
    SolveOptions opts;
    opts.heuristic = h;
    opts.runs = 20;
    const Cost c = reported(*inst, solve_mwcarp(*inst, opts).best);
    detail += std::string(to_string(h)) + "=" + std::to_string(c) + " ";
    best = std::min(best, c);
  }
  const double dev = std::abs(static_cast<double>(best) - 1141457.0) / 1141457.0;
  const bool pass = best <= 1318092 && best >= 976907 && dev <= 0.03;
  return {pass, detail + "best " + std::to_string(best) + " dev " + fmt("%.4f", dev)};
}

Outcome oracle_equivalence() {
  Rng rng(20260401);
  double worst = 1.0;
  int violations = 0;
  const auto t0 = std::chrono::steady_clock::now();
  for (int trial = 0; trial < 500; ++trial) {
    testgen::GraphShape shape;
    shape.vertices = testgen::uniform(rng, 1, 6);
    shape.extra_members = testgen::uniform(rng, 0, 6);
    const Instance inst = testgen::random_instance(rng, shape, 5, 4, testgen::uniform(rng, 4, 8));
    const Cost exact = oracle_solve(inst).total_cost;
    const SolveResult res = solve_mwcarp(inst, {.seed = static_cast<std::uint64_t>(trial)});
    if (res.run_costs.size() != 20) ++violations;
    const Cost heuristic = res.best.total_cost;
    double ratio = 1.0;
    if (exact > 0) {
      ratio = static_cast<double>(heuristic) / static_cast<double>(exact);
    } else if (heuristic > 0) {
      ratio = INFINITY;
    }
    if (exact > heuristic || ratio > 35) ++violations;
    worst = std::max(worst, ratio);
  }
  return {violations == 0, "500 instances, " + std::to_string(violations) + " violations, max ratio " +
                               fmt("%.4f", worst) + ", " + fmt("%.1f", seconds_since(t0)) + "s"};
}

Outcome split_exactness() {
  Rng rng(5150);
  int mismatches = 0;
  int longest = 0;
  for (int trial = 0; trial < 200; ++trial) {
    testgen::GraphShape shape;
    shape.vertices = testgen::uniform(rng, 2, 8);
    shape.extra_members = testgen::uniform(rng, 2, 10);
    const Instance inst = testgen::random_instance(rng, shape, 8, 5, testgen::uniform(rng, 5, 10));
    const auto dm = all_pairs_shortest_paths(inst.graph);
    const TourService tour = first_occurrence_service(inst, testgen::random_service_walk(rng, inst, dm));
    longest = std::max(longest, static_cast<int>(tour.served.size()));
    const Cost got = optimal_split(inst, dm, tour).total_cost;
    if (got != testgen::brute_force_split(inst, testgen::bellman_ford_all(inst.graph), tour)) ++mismatches;
  }
  return {mismatches == 0, "200 tours (longest l=" + std::to_string(longest) + "), " + std::to_string(mismatches) + " mismatches"};
}

Outcome flow_optimality() {
  Rng rng(6006);
  int feasible = 0;
  int bad = 0;
  while (feasible < 200) {
    const FlowProblem p = testgen::random_flow_problem(rng, 8, 10, 4);
    std::int64_t units = 0;
    for (auto s : p.supply) units += std::max<std::int64_t>(s, 0);
    const auto expected = testgen::enumerate_flows(p, units);
    if (!expected) {
      try {
        solve_umcf(p);
        ++bad;
      } catch (const Error&) {
      }
      continue;
    }
    ++feasible;
    const FlowAssignment f = solve_umcf(p);
    if (f.total_cost != *expected || !satisfies_conservation(p, f)) ++bad;
  }
  return {bad == 0, "200 feasible problems, " + std::to_string(bad) + " failures"};
}

Outcome euler_balance_invariants() {
  Rng rng(7007);
  int bad = 0;
  for (int trial = 0; trial < 200; ++trial) {
    testgen::GraphShape shape;
    shape.vertices = testgen::uniform(rng, 2, 12);
    shape.extra_members = testgen::uniform(rng, 0, 20);
    const MixedMultigraph g = testgen::strong_graph(rng, shape);
    const auto trav = testgen::all_traversals(g);
    RequiredSet r;
    for (int i = testgen::uniform(rng, 1, 10); i > 0; --i) r.add(trav[uniform_index(rng, trav.size())], i);
    const RequiredSet balanced = balance_required(g, all_pairs_shortest_paths(g), r);
    const DirectedView view = induced_required_graph(g, balanced.arcs);
    bool ok = true;
    for (int b : balances(view)) ok = ok && b == 0;
    std::map<ArcId, int> want, got;
    for (ArcId a : balanced.arcs) ++want[a];
    std::vector<int> comp_of(static_cast<std::size_t>(view.vertex_count), -1);
    const auto comps = weak_components(view);
    for (std::size_t c = 0; c < comps.size(); ++c) {
      for (VertexId v : comps[c]) comp_of[v] = static_cast<int>(c);
    }
    for (std::size_t c = 0; c < comps.size(); ++c) {
      DirectedView part{view.vertex_count, {}};
      for (const Traversal& t : view.arcs) {
        if (comp_of[t.tail] == static_cast<int>(c)) part.arcs.push_back(t);
      }
      const Walk tour = euler_tour(part, comps[c].front());
      ok = ok && tour.is_closed();
      for (const Traversal& t : tour.steps) ++got[t.via];
    }
    ok = ok && want == got;
    bad += !ok;
  }
  return {bad == 0, "200 required sets, " + std::to_string(bad) + " failures"};
}

Outcome atsp_embedding() {
  Rng rng(8008);
  int bad = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int k = testgen::uniform(rng, 2, 8);
    const auto c = testgen::random_metric(rng, k, 50);
    std::vector<Arc> arcs;
    std::vector<Cost> flat;
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        flat.push_back(c[i][j]);
        if (i != j) arcs.push_back({i, j, c[i][j]});
      }
    }
    RequiredSet loops;
    for (int v = 0; v < k; ++v) {
      loops.add(ArcId::directed(static_cast<std::int32_t>(arcs.size())), v);
      arcs.push_back({v, v, 0});
    }
    const MixedMultigraph g(k, {}, arcs);
    const Cost drpp = solve_drpp(g, all_pairs_shortest_paths(g), loops).walk.cost(g);
    const Cost hk = held_karp(AtspInstance(k, flat)).cost;
    if (drpp != hk || hk != testgen::brute_force_atsp(c)) ++bad;
  }
  return {bad == 0, "50 matrices, " + std::to_string(bad) + " mismatches"};
}

Outcome ob_contract() {
  std::vector<std::string> absent;
  std::vector<Instance> sources;
  for (const std::string name : {"lpr-a-03", "lpr-b-03"}) {
    if (auto inst = load_benchmark(name)) {
      sources.push_back(std::move(*inst));
    } else {
      absent.push_back(name);
    }
  }
  if (!absent.empty()) return {false, missing(absent)};
  int bad = 0;
  int min_c = 1 << 30;
  for (int i = 0; i < 20; ++i) {
    const Instance& in = sources[i % 2];
    ObConfig cfg;
    cfg.bridges = 1 + (i / 2) % 2;
    cfg.seed = static_cast<std::uint64_t>(i);
    ObResult r;
    try {
      r = generate_ob_detailed(in, cfg);
    } catch (const Error&) {
      ++bad;
      continue;
    }
    const Instance& out = r.instance;
    const auto d = testgen::bellman_ford_all(out.graph);
    bool ok = true;
    for (const auto& row : d) {
      for (Cost x : row) ok = ok && x < kInfinity;
    }
    for (MemberRef b : r.bridges) ok = ok && out.demand(b) == 0;
    const int n = out.graph.vertex_count();
    const int k = static_cast<int>(r.centers.size());
    std::vector<int> size(static_cast<std::size_t>(k), 0);
    for (int v = 0; v < n; ++v) ++size[r.cluster_of[v]];
    for (int s : size) ok = ok && s * cfg.imbalance * k >= n;
    const int c = stats(out).components;
    min_c = std::min(min_c, c);
    ok = ok && c >= 2;
    bad += !ok;
  }
  return {bad == 0, "20 instances, " + std::to_string(bad) + " failures, min C " + std::to_string(min_c)};
}

Outcome cli_determinism() {
  const fs::path dir = fs::temp_directory_path() / "mwcarp-acceptance-determinism";
  fs::remove_all(dir);
  fs::create_directories(dir);
  Rng rng(1010);
  testgen::GraphShape shape;
  shape.vertices = 30;
  shape.extra_members = 50;
  const Instance inst = testgen::random_instance(rng, shape, 40, 5, 20);
  const fs::path file = dir / "det.txt";
  std::ofstream(file) << write_instance(inst);
  std::string outputs[2];
  for (int i = 0; i < 2; ++i) {
    const fs::path sol = dir / ("sol" + std::to_string(i) + ".json");
    const std::string cmd = std::string(MWCARP_CLI) + " solve --instance " + file.string() + " --seed 7 --output " +
                            sol.string() + " > /dev/null";
    const int status = std::system(cmd.c_str());
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) return {false, "solve failed"};
    outputs[i] = read_text_file(sol.string());
  }
  fs::remove_all(dir);
  return {outputs[0] == outputs[1] && !outputs[0].empty(),
          outputs[0] == outputs[1] ? "identical, " + std::to_string(outputs[0].size()) + " bytes" : "outputs differ"};
}

const std::map<int, std::pair<std::string, std::function<Outcome()>>> kCriteria = {
    {1, {"benchmark reproduction (lpr-a-01, lpr-b-01)", benchmark_reproduction}},
    {2, {"relative error below 1.25 on lpr and mval", relative_error_bound}},
    {3, {"egl-g1-A sanity", egl_sanity}},
    {4, {"oracle equivalence on tiny instances", oracle_equivalence}},
    {5, {"optimal split exactness", split_exactness}},
    {6, {"flow optimality", flow_optimality}},
    {7, {"Euler and balance invariants", euler_balance_invariants}},
    {8, {"ATSP embedding identity", atsp_embedding}},
    {9, {"Ob generator contract", ob_contract}},
    {10, {"CLI determinism", cli_determinism}},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--criterion" && i + 1 < argc) selected.push_back(std::atoi(argv[++i]));
  }
  if (selected.empty()) {
    for (const auto& [id, c] : kCriteria) selected.push_back(id);
  }
  int failures = 0;
  for (int id : selected) {
    const auto it = kCriteria.find(id);
    if (it == kCriteria.end()) {
      std::printf("criterion %d: FAIL unknown criterion\n", id);
      ++failures;
      continue;
    }
    Outcome o;
    try {
      o = it->second.second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %d: %s %s: %s\n", id, o.pass ? "PASS" : "FAIL", it->second.first.c_str(), o.detail.c_str());
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
