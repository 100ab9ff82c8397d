#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mwcarp/atsp.hpp"
#include "mwcarp/graph.hpp"
#include "mwcarp/rpp.hpp"

namespace mwcarp {

struct Instance {
  std::string name;
  MixedMultigraph graph;
  VertexId depot = 0;
  std::vector<std::int64_t> edge_demand;  // parallel to graph.edges()
  std::vector<std::int64_t> arc_demand;   // parallel to graph.arcs()
  std::int64_t capacity = 0;
  /// Constant added to reported costs. Some third-party formats charge a
  /// separate serving cost; since every demand member is served exactly
  /// once, the difference to the deadheading cost is a constant.
  Cost service_surcharge = 0;
  /// Non-fatal findings of the reader, e.g. a demand above capacity.
  std::vector<std::string> warnings;

  std::int64_t demand(MemberRef m) const {
    return m.kind == MemberKind::kEdge ? edge_demand[m.index] : arc_demand[m.index];
  }
};

/// Members with positive demand, edges first, then arcs, each in index order.
std::vector<MemberRef> demand_arcs(const Instance& inst);

/// A base tour together with the step at which each demand member is served.
/// `served` is ordered by step.
struct TourService {
  Walk walk;
  std::vector<std::pair<std::size_t, MemberRef>> served;
};

/// Every demand member is served at its first traversal in the walk.
/// Throws kInfeasible if the walk misses a demand member.
TourService first_occurrence_service(const Instance& inst, const Walk& walk);

struct Segment {
  Walk walk;
  std::vector<MemberRef> served;
};

struct Splitting {
  std::vector<Segment> segments;
};

struct Route {
  Walk walk;
  std::vector<MemberRef> served;
  Cost cost = 0;
};

struct Solution {
  std::vector<Route> routes;
  Cost total_cost = 0;
};

/// Starts a new segment exactly when the next served member would exceed
/// the capacity. Each segment runs from its first to its last serving step.
Splitting greedy_split(const Instance& inst, const TourService& tour);
Splitting greedy_split(const Instance& inst, const Walk& tour);

/// Closes every segment with shortest paths from and back to the depot.
Solution close_greedy(const Instance& inst, const DistanceMatrix& dm, const Splitting& split);

/// Cheapest split of the tour into contiguous blocks of served members.
/// A block is served in tour order, or as its tail part followed by its
/// head part when that is cheaper. Ties: fewest routes, then earliest
/// split points.
Solution optimal_split(const Instance& inst, const DistanceMatrix& dm, const TourService& tour);
Solution optimal_split(const Instance& inst, const DistanceMatrix& dm, const Walk& tour);

struct SolveOptions {
  /// nullopt cycles through all six heuristics across runs.
  std::optional<ServiceHeuristic> heuristic;
  int runs = 20;
  std::uint64_t seed = 0;
  /// Worker threads; 0 means one per logical CPU.
  int jobs = 0;
  int exact_atsp_cap = kDefaultExactAtspCap;
};

struct SolveResult {
  Solution best;
  int best_run = -1;
  std::vector<Cost> run_costs;
  std::vector<ServiceHeuristic> run_heuristics;
};

ServiceHeuristic heuristic_for_run(const SolveOptions& options, int run);

/// Best of `runs` independent base tour + optimal split runs. Throws
/// kInfeasible when a demand exceeds the capacity or a demand member cannot
/// be reached from and return to the depot.
SolveResult solve_mwcarp(const Instance& inst, const SolveOptions& options = {});

/// Single run with an explicit direction choice.
Solution solve_mwcarp_once(const Instance& inst, DirectionChoice choice, int exact_atsp_cap = kDefaultExactAtspCap);

struct ValidationReport {
  bool ok = true;
  std::string violation;  // first violated constraint, empty when ok
};

ValidationReport validate(const Instance& inst, const Solution& sol);

/// Exact optimum by exhaustive search. Guarded to at most 6 demand members
/// and 8 vertices (kTooLarge otherwise).
Solution oracle_solve(const Instance& inst);

}  // namespace mwcarp
