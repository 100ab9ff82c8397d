#include "mwcarp/rpp.hpp"

#include <algorithm>
#include <string>

#include "mwcarp/error.hpp"
#include "mwcarp/flow.hpp"

namespace mwcarp {

std::string_view to_string(ServiceHeuristic h) {
  switch (h) {
    case ServiceHeuristic::kEoR: return "eo-r";
    case ServiceHeuristic::kEoP: return "eo-p";
    case ServiceHeuristic::kEoS: return "eo-s";
    case ServiceHeuristic::kPoR: return "po-r";
    case ServiceHeuristic::kPoP: return "po-p";
    case ServiceHeuristic::kPoS: return "po-s";
  }
  return "?";
}

std::optional<ServiceHeuristic> parse_heuristic(std::string_view text) {
  for (ServiceHeuristic h : kAllHeuristics) {
    if (to_string(h) == text) return h;
  }
  return std::nullopt;
}

namespace {

void rotate_to_anchor(ServiceTour& tour, std::optional<VertexId> anchor) {
  if (!anchor || tour.walk.empty()) return;
  auto& steps = tour.walk.steps;
  const auto it = std::find_if(steps.begin(), steps.end(), [&](const Traversal& t) { return t.tail == *anchor; });
  if (it == steps.end()) return;
  const auto shift = it - steps.begin();
  std::rotate(steps.begin(), it, steps.end());
  std::rotate(tour.service.begin(), tour.service.begin() + shift, tour.service.end());
}

}  // namespace

ServiceTour solve_eulerian_rpp(const MixedMultigraph& g, const DistanceMatrix& dm, const RequiredSet& required,
                               std::span<const VertexId> reps, const RppOptions& options) {
  ServiceTour result;
  const DirectedView view = induced_required_graph(g, required.arcs);
  const auto components = weak_components(view);
  if (components.empty()) {
    if (!reps.empty()) throw Error(ErrorCode::kRepsDontCover, "representatives given for an empty required set");
    return result;
  }
  const std::vector<int> bal = balances(view);
  for (VertexId v = 0; v < view.vertex_count; ++v) {
    if (bal[v] != 0) {
      throw Error(ErrorCode::kNotEulerian, "vertex " + std::to_string(v + 1) + " is unbalanced in G[R]");
    }
  }

  std::vector<int> component_of(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int c = 0; c < static_cast<int>(components.size()); ++c) {
    for (VertexId v : components[c]) component_of[v] = c;
  }
  // detour_at[c]: the representative of component c that receives its Euler tour.
  std::vector<VertexId> detour_at(components.size(), -1);
  for (VertexId r : reps) {
    if (r < 0 || r >= g.vertex_count() || component_of[r] < 0) {
      throw Error(ErrorCode::kRepsDontCover, "representative " + std::to_string(r + 1) + " is not on G[R]");
    }
    if (detour_at[component_of[r]] < 0) detour_at[component_of[r]] = r;
  }
  if (std::find(detour_at.begin(), detour_at.end(), -1) != detour_at.end()) {
    throw Error(ErrorCode::kRepsDontCover, "some component of G[R] has no representative");
  }

  // Euler tour per component, keeping track of which required element each step is.
  std::vector<std::vector<int>> component_arcs(components.size());
  for (int i = 0; i < static_cast<int>(view.arcs.size()); ++i) {
    component_arcs[component_of[view.arcs[i].tail]].push_back(i);
  }
  auto append_tour = [&](int c) {
    DirectedView sub{view.vertex_count, {}};
    for (int i : component_arcs[c]) sub.arcs.push_back(view.arcs[i]);
    for (int local : euler_circuit(sub, detour_at[c])) {
      const int i = component_arcs[c][local];
      result.walk.steps.push_back(view.arcs[i]);
      result.service.push_back(required.origin[i]);
    }
  };
  auto append_path = [&](VertexId from, VertexId to) {
    for (const Traversal& t : dm.path(g, from, to)) {
      result.walk.steps.push_back(t);
      result.service.push_back(-1);
    }
  };

  std::vector<VertexId> sites(reps.begin(), reps.end());
  std::vector<int> order{0};
  if (sites.size() > 1) {
    const AtspInstance inst = AtspInstance::from_distances(dm, sites);
    const AtspTour tour = solve_atsp(inst, options.seed, options.exact_atsp_cap);
    if (tour.cost >= kInfinity) throw Error(ErrorCode::kUnreachable, "required components cannot be joined");
    order = tour.order;
  }
  std::vector<char> done(components.size(), 0);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const VertexId site = sites[order[pos]];
    const int c = component_of[site];
    if (!done[c] && detour_at[c] == site) {
      append_tour(c);
      done[c] = 1;
    }
    if (order.size() > 1) append_path(site, sites[order[(pos + 1) % order.size()]]);
  }
  rotate_to_anchor(result, options.anchor);
  return result;
}

RequiredSet balance_required(const MixedMultigraph& g, const DistanceMatrix& dm, const RequiredSet& required) {
  const DirectedView view = induced_required_graph(g, required.arcs);
  const std::vector<int> bal = balances(view);
  std::vector<VertexId> surplus;
  std::vector<VertexId> deficit;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (bal[v] > 0) surplus.push_back(v);
    if (bal[v] < 0) deficit.push_back(v);
  }
  RequiredSet out = required;
  if (surplus.empty()) return out;

  // Transportation form of the flow problem over the shortest-path closure:
  // with nonnegative costs an optimal flow on G decomposes into
  // surplus-to-deficit shortest paths.
  FlowProblem problem;
  problem.vertex_count = g.vertex_count();
  problem.supply.assign(bal.begin(), bal.end());
  for (VertexId s : surplus) {
    for (VertexId t : deficit) {
      if (dm.reachable(s, t)) problem.arcs.push_back({s, t, dm(s, t)});
    }
  }
  const FlowAssignment flow = solve_umcf(problem);
  for (std::size_t i = 0; i < problem.arcs.size(); ++i) {
    if (flow.flow[i] == 0) continue;
    const auto path = dm.path(g, problem.arcs[i].u, problem.arcs[i].v);
    for (std::int64_t unit = 0; unit < flow.flow[i]; ++unit) {
      for (const Traversal& t : path) out.add(t.via, -1);
    }
  }
  return out;
}

ServiceTour solve_drpp(const MixedMultigraph& g, const DistanceMatrix& dm, const RequiredSet& required,
                       std::span<const VertexId> reps, const RppOptions& options) {
  return solve_eulerian_rpp(g, dm, balance_required(g, dm, required), reps, options);
}

namespace {

// Cheapest choice of one vertex per component (2 or 3 components), joined
// by the best cycle through them. Ties keep the lexicographically first
// combination.
std::vector<VertexId> exhaustive_representatives(const DistanceMatrix& dm,
                                                 const std::vector<std::vector<VertexId>>& components) {
  std::vector<VertexId> best;
  Cost best_cost = kInfinity + 1;
  if (components.size() == 2) {
    for (VertexId a : components[0]) {
      for (VertexId b : components[1]) {
        const Cost c = add_costs(dm(a, b), dm(b, a));
        if (c < best_cost) {
          best_cost = c;
          best = {a, b};
        }
      }
    }
    return best;
  }
  for (VertexId a : components[0]) {
    for (VertexId b : components[1]) {
      const Cost ab = dm(a, b);
      const Cost ba = dm(b, a);
      for (VertexId c : components[2]) {
        const Cost cost = std::min(add_costs(ab, add_costs(dm(b, c), dm(c, a))),
                                   add_costs(ba, add_costs(dm(a, c), dm(c, b))));
        if (cost < best_cost) {
          best_cost = cost;
          best = {a, b, c};
        }
      }
    }
  }
  return best;
}

}  // namespace

ServiceTour solve_drpp(const MixedMultigraph& g, const DistanceMatrix& dm, const RequiredSet& required,
                       const RppOptions& options) {
  const RequiredSet balanced = balance_required(g, dm, required);
  const auto components = weak_components(induced_required_graph(g, balanced.arcs));
  std::vector<VertexId> reps;
  const auto count = static_cast<int>(components.size());
  if (count == 1) {
    const auto& only = components.front();
    const bool anchored = options.anchor && std::binary_search(only.begin(), only.end(), *options.anchor);
    reps.push_back(anchored ? *options.anchor : only.front());
  } else if (count >= 2 && count <= std::min(options.exhaustive_join_limit, 3)) {
    reps = exhaustive_representatives(dm, components);
  } else {
    for (const auto& component : components) reps.push_back(component.front());
  }
  return solve_eulerian_rpp(g, dm, balanced, reps, options);
}

ServiceTour solve_mwrpp(const MixedMultigraph& g, const DistanceMatrix& dm, std::span<const MemberRef> required,
                        DirectionChoice choice, const RppOptions& options) {
  return solve_drpp(g, dm, direct_edges(g, required, choice), options);
}

}  // namespace mwcarp
