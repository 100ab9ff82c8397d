#pragma once

#include <cstdint>
#include <vector>

#include "mwcarp/graph.hpp"

namespace mwcarp {

struct FlowArc {
  VertexId u = 0;
  VertexId v = 0;
  Cost cost = 0;
};

/// Uncapacitated minimum-cost flow instance. supply[v] > 0 produces flow,
/// supply[v] < 0 consumes it.
struct FlowProblem {
  int vertex_count = 0;
  std::vector<FlowArc> arcs;
  std::vector<std::int64_t> supply;
};

struct FlowAssignment {
  std::vector<std::int64_t> flow;  // parallel to FlowProblem::arcs
  Cost total_cost = 0;
};

/// Successive shortest augmenting paths with Dijkstra on reduced costs.
/// Throws Error(kInfeasible) when supplies do not sum to zero or some
/// surplus cannot reach enough deficit.
FlowAssignment solve_umcf(const FlowProblem& problem);

/// outflow(v) - inflow(v) == supply(v) for every vertex, and the reported
/// cost matches the flow.
bool satisfies_conservation(const FlowProblem& problem, const FlowAssignment& assignment);

}  // namespace mwcarp
