#include "mwcarp/carp.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>

#include "mwcarp/error.hpp"
#include "mwcarp/random.hpp"

namespace mwcarp {

std::vector<MemberRef> demand_arcs(const Instance& inst) {
  std::vector<MemberRef> out;
  for (int e = 0; e < static_cast<int>(inst.edge_demand.size()); ++e) {
    if (inst.edge_demand[e] > 0) out.push_back(MemberRef::edge(e));
  }
  for (int a = 0; a < static_cast<int>(inst.arc_demand.size()); ++a) {
    if (inst.arc_demand[a] > 0) out.push_back(MemberRef::arc(a));
  }
  return out;
}

TourService first_occurrence_service(const Instance& inst, const Walk& walk) {
  const auto required = demand_arcs(inst);
  std::map<MemberRef, bool> pending;
  for (MemberRef m : required) pending[m] = true;
  TourService out{walk, {}};
  for (std::size_t i = 0; i < walk.size(); ++i) {
    const MemberRef m = member_of(walk.steps[i].via);
    auto it = pending.find(m);
    if (it == pending.end() || !it->second) continue;
    it->second = false;
    out.served.emplace_back(i, m);
  }
  if (out.served.size() != required.size()) {
    throw Error(ErrorCode::kInfeasible, "tour does not traverse every demand member");
  }
  return out;
}

namespace {

void check_demands(const Instance& inst, const TourService& tour) {
  for (const auto& [step, m] : tour.served) {
    if (inst.demand(m) > inst.capacity) {
      throw Error(ErrorCode::kDemandExceedsCapacity, to_label(m) + " has demand above capacity");
    }
  }
}

std::vector<Traversal> slice(const Walk& w, std::size_t first, std::size_t last) {
  return {w.steps.begin() + static_cast<std::ptrdiff_t>(first), w.steps.begin() + static_cast<std::ptrdiff_t>(last) + 1};
}

}  // namespace

Splitting greedy_split(const Instance& inst, const TourService& tour) {
  check_demands(inst, tour);
  Splitting out;
  std::int64_t load = 0;
  std::size_t first = 0;
  std::size_t last = 0;
  Segment current;
  auto flush = [&] {
    if (current.served.empty()) return;
    current.walk.steps = slice(tour.walk, first, last);
    out.segments.push_back(std::move(current));
    current = {};
  };
  for (const auto& [step, m] : tour.served) {
    const std::int64_t d = inst.demand(m);
    if (!current.served.empty() && load + d > inst.capacity) {
      flush();
      load = 0;
    }
    if (current.served.empty()) first = step;
    current.served.push_back(m);
    load += d;
    last = step;
  }
  flush();
  return out;
}

Splitting greedy_split(const Instance& inst, const Walk& tour) {
  return greedy_split(inst, first_occurrence_service(inst, tour));
}

Solution close_greedy(const Instance& inst, const DistanceMatrix& dm, const Splitting& split) {
  Solution out;
  for (const Segment& seg : split.segments) {
    Route r;
    r.walk.append(dm.path(inst.graph, inst.depot, seg.walk.start()));
    r.walk.append(seg.walk.steps);
    r.walk.append(dm.path(inst.graph, seg.walk.end(), inst.depot));
    r.served = seg.served;
    r.cost = r.walk.cost(inst.graph);
    out.total_cost += r.cost;
    out.routes.push_back(std::move(r));
  }
  return out;
}

namespace {

// Cost of serving items [i, j) in one vehicle. `split` is -1 for tour order,
// otherwise the k after which the block is cut and served back to front.
struct BlockChoice {
  Cost cost = kInfinity;
  int split = -1;
};

class SplitGraph {
 public:
  SplitGraph(const Instance& inst, const DistanceMatrix& dm, const TourService& tour)
      : inst_(inst), dm_(dm), tour_(tour), prefix_(tour.walk.size() + 1, 0) {
    for (std::size_t s = 0; s < tour.walk.size(); ++s) {
      prefix_[s + 1] = prefix_[s] + inst.graph.cost(tour.walk.steps[s].via);
    }
  }

  int items() const { return static_cast<int>(tour_.served.size()); }
  std::int64_t demand(int i) const { return inst_.demand(tour_.served[i].second); }

  BlockChoice block(int i, int j) const {
    const VertexId depot = inst_.depot;
    BlockChoice best;
    best.cost = add_costs(add_costs(dm_(depot, tail(i)), interior(i, j)), dm_(head(j - 1), depot));
    for (int k = i; k + 1 < j; ++k) {
      Cost c = add_costs(dm_(depot, tail(k + 1)), interior(k + 1, j));
      c = add_costs(c, dm_(head(j - 1), tail(i)));
      c = add_costs(c, interior(i, k + 1));
      c = add_costs(c, dm_(head(k), depot));
      if (c < best.cost) best = {c, k};
    }
    return best;
  }

  Route materialize(int i, int j, const BlockChoice& choice) const {
    const MixedMultigraph& g = inst_.graph;
    Route r;
    auto serve = [&](int from, int to) {
      r.walk.append(slice(tour_.walk, step(from), step(to - 1)));
      for (int x = from; x < to; ++x) r.served.push_back(tour_.served[x].second);
    };
    if (choice.split < 0) {
      r.walk.append(dm_.path(g, inst_.depot, tail(i)));
      serve(i, j);
      r.walk.append(dm_.path(g, head(j - 1), inst_.depot));
    } else {
      const int k = choice.split;
      r.walk.append(dm_.path(g, inst_.depot, tail(k + 1)));
      serve(k + 1, j);
      r.walk.append(dm_.path(g, head(j - 1), tail(i)));
      serve(i, k + 1);
      r.walk.append(dm_.path(g, head(k), inst_.depot));
    }
    r.cost = r.walk.cost(g);
    return r;
  }

 private:
  std::size_t step(int item) const { return tour_.served[item].first; }
  VertexId tail(int item) const { return tour_.walk.steps[step(item)].tail; }
  VertexId head(int item) const { return tour_.walk.steps[step(item)].head; }
  // Tour cost from the serving step of item i through that of item j - 1.
  Cost interior(int i, int j) const { return prefix_[step(j - 1) + 1] - prefix_[step(i)]; }

  const Instance& inst_;
  const DistanceMatrix& dm_;
  const TourService& tour_;
  std::vector<Cost> prefix_;
};

}  // namespace

Solution optimal_split(const Instance& inst, const DistanceMatrix& dm, const TourService& tour) {
  check_demands(inst, tour);
  const SplitGraph aux(inst, dm, tour);
  const int l = aux.items();
  // best_*[i]: cheapest way to serve items i..l-1. Computed back to front so
  // that preferring the smallest next split point yields the
  // lexicographically earliest sequence among equal (cost, routes).
  std::vector<Cost> best_cost(static_cast<std::size_t>(l) + 1, kInfinity);
  std::vector<int> best_routes(static_cast<std::size_t>(l) + 1, 0);
  std::vector<int> next(static_cast<std::size_t>(l) + 1, -1);
  std::vector<BlockChoice> via(static_cast<std::size_t>(l) + 1);
  best_cost[l] = 0;
  for (int i = l - 1; i >= 0; --i) {
    std::int64_t load = 0;
    for (int j = i + 1; j <= l; ++j) {
      load += aux.demand(j - 1);
      if (load > inst.capacity) break;
      if (best_cost[j] >= kInfinity) continue;
      const BlockChoice b = aux.block(i, j);
      const Cost c = add_costs(b.cost, best_cost[j]);
      const int routes = best_routes[j] + 1;
      if (c < best_cost[i] || (c == best_cost[i] && c < kInfinity && routes < best_routes[i])) {
        best_cost[i] = c;
        best_routes[i] = routes;
        next[i] = j;
        via[i] = b;
      }
    }
  }
  if (best_cost[0] >= kInfinity) throw Error(ErrorCode::kUnreachable, "depot cannot reach the demand members");
  Solution out;
  for (int i = 0; i < l; i = next[i]) {
    out.routes.push_back(aux.materialize(i, next[i], via[i]));
    out.total_cost += out.routes.back().cost;
  }
  return out;
}

Solution optimal_split(const Instance& inst, const DistanceMatrix& dm, const Walk& tour) {
  return optimal_split(inst, dm, first_occurrence_service(inst, tour));
}

namespace {

// Shared per-instance state: the graph with a zero-cost depot loop appended
// as the last arc, and its distances.
struct Prepared {
  Instance augmented;
  DistanceMatrix dm;
  std::vector<MemberRef> required;
  int loop_arc = 0;
};

Prepared prepare(const Instance& inst) {
  const MixedMultigraph& g = inst.graph;
  if (inst.capacity <= 0) throw Error(ErrorCode::kInfeasible, "capacity must be positive");
  if (inst.depot < 0 || inst.depot >= g.vertex_count()) throw Error(ErrorCode::kInfeasible, "depot not in graph");
  Prepared p;
  std::vector<Arc> arcs(g.arcs().begin(), g.arcs().end());
  p.loop_arc = static_cast<int>(arcs.size());
  arcs.push_back({inst.depot, inst.depot, 0});
  p.augmented = inst;
  p.augmented.graph = MixedMultigraph(g.vertex_count(), {g.edges().begin(), g.edges().end()}, std::move(arcs));
  p.augmented.arc_demand.push_back(0);
  p.dm = all_pairs_shortest_paths(p.augmented.graph);

  p.required = demand_arcs(inst);
  for (MemberRef m : p.required) {
    if (inst.demand(m) > inst.capacity) {
      throw Error(ErrorCode::kInfeasible, to_label(m) + " has demand above capacity");
    }
    const ArcId a = m.kind == MemberKind::kArc ? ArcId::directed(m.index) : ArcId::forward(m.index);
    const VertexId u = g.tail(a);
    const VertexId v = g.head(a);
    if (!p.dm.reachable(inst.depot, u) || !p.dm.reachable(v, inst.depot)) throw Error(ErrorCode::kInfeasible, to_label(m) + " cannot be served from the depot");
  }
  p.required.push_back(MemberRef::arc(p.loop_arc));
  return p;
}

Solution run_once(const Instance& inst, const Prepared& p, DirectionChoice choice, int cap) {
  RppOptions opts;
  opts.exact_atsp_cap = cap;
  opts.seed = choice.seed;
  opts.anchor = inst.depot;
  const ServiceTour tour = solve_mwrpp(p.augmented.graph, p.dm, p.required, choice, opts);

  const auto loop_tag = static_cast<std::int32_t>(p.required.size() - 1);
  TourService ts{tour.walk, {}};
  for (std::size_t s = 0; s < tour.service.size(); ++s) {
    const std::int32_t tag = tour.service[s];
    if (tag >= 0 && tag != loop_tag) ts.served.emplace_back(s, p.required[tag]);
  }
  Solution sol = optimal_split(p.augmented, p.dm, ts);

  // The depot loop only anchors the base tour; drop it from the routes.
  const ArcId loop = ArcId::directed(p.loop_arc);
  for (Route& r : sol.routes) {
    std::erase_if(r.walk.steps, [&](const Traversal& t) { return t.via == loop; });
  }
  const ValidationReport report = validate(inst, sol);
  if (!report.ok) throw std::logic_error("internal: produced invalid solution: " + report.violation);
  return sol;
}

}  // namespace

ServiceHeuristic heuristic_for_run(const SolveOptions& options, int run) {
  if (options.heuristic) return *options.heuristic;
  return kAllHeuristics[static_cast<std::size_t>(run) % kAllHeuristics.size()];
}

Solution solve_mwcarp_once(const Instance& inst, DirectionChoice choice, int exact_atsp_cap) {
  return run_once(inst, prepare(inst), choice, exact_atsp_cap);
}

SolveResult solve_mwcarp(const Instance& inst, const SolveOptions& options) {
  if (options.runs < 1) throw std::invalid_argument("runs must be at least 1");
  const Prepared p = prepare(inst);
  const int runs = options.runs;
  std::vector<Solution> solutions(static_cast<std::size_t>(runs));
  std::vector<std::exception_ptr> failures(static_cast<std::size_t>(runs));

  std::atomic<int> cursor{0};
  auto worker = [&] {
    for (int run = cursor++; run < runs; run = cursor++) {
      try {
        const DirectionChoice choice{heuristic_for_run(options, run), derive_seed(options.seed, run)};
        solutions[run] = run_once(inst, p, choice, options.exact_atsp_cap);
      } catch (...) {
        failures[run] = std::current_exception();
      }
    }
  };
  int jobs = options.jobs > 0 ? options.jobs : static_cast<int>(std::thread::hardware_concurrency());
  jobs = std::clamp(jobs, 1, runs);
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SolveResult result;
  for (int run = 0; run < runs; ++run) {
    if (failures[run]) std::rethrow_exception(failures[run]);
    result.run_costs.push_back(solutions[run].total_cost);
    result.run_heuristics.push_back(heuristic_for_run(options, run));
    if (result.best_run < 0 || solutions[run].total_cost < solutions[result.best_run].total_cost) {
      result.best_run = run;
    }
  }
  result.best = std::move(solutions[result.best_run]);
  return result;
}

ValidationReport validate(const Instance& inst, const Solution& sol) {
  const MixedMultigraph& g = inst.graph;
  auto fail = [](std::string what) { return ValidationReport{false, std::move(what)}; };
  std::map<MemberRef, int> served_count;
  Cost total = 0;
  for (std::size_t r = 0; r < sol.routes.size(); ++r) {
    const Route& route = sol.routes[r];
    const std::string name = "route " + std::to_string(r + 1);
    if (route.walk.empty()) return fail(name + " is empty");
    for (const Traversal& t : route.walk.steps) {
      if (!g.contains(t.via) || traversal_of(g, t.via) != t) return fail(name + " uses a traversal not in the graph");
    }
    if (!route.walk.is_closed()) return fail(name + " is not a connected closed walk");
    const bool has_depot = std::any_of(route.walk.steps.begin(), route.walk.steps.end(),
                                       [&](const Traversal& t) { return t.tail == inst.depot; });
    if (!has_depot) return fail(name + " does not pass through the depot");
    std::int64_t load = 0;
    for (MemberRef m : route.served) {
      if (!g.contains(m)) return fail(name + " serves unknown member " + to_label(m));
      const bool traversed = std::any_of(route.walk.steps.begin(), route.walk.steps.end(),
                                         [&](const Traversal& t) { return member_of(t.via) == m; });
      if (!traversed) return fail(name + " serves " + to_label(m) + " without traversing it");
      ++served_count[m];
      load += inst.demand(m);
    }
    if (load > inst.capacity) return fail(name + " exceeds the capacity");
    const Cost cost = route.walk.cost(g);
    if (cost != route.cost) return fail(name + " reports cost " + std::to_string(route.cost) + " but walks " + std::to_string(cost));
    total += cost;
  }
  for (const auto& [m, count] : served_count) {
    if (inst.demand(m) <= 0) return fail(to_label(m) + " is served but has no demand");
    if (count > 1) return fail(to_label(m) + " is served " + std::to_string(count) + " times");
  }
  for (MemberRef m : demand_arcs(inst)) {
    if (!served_count.contains(m)) return fail(to_label(m) + " is not served");
  }
  if (total != sol.total_cost) {
    return fail("total cost " + std::to_string(sol.total_cost) + " differs from route sum " + std::to_string(total));
  }
  return {};
}

}  // namespace mwcarp
