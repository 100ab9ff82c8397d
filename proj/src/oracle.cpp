// Exhaustive reference solver for tiny instances. Deliberately shares no
// machinery with the heuristic pipeline: distances come from Bellman-Ford,
// routes from enumerating serve orders and directions.

#include <algorithm>
#include <numeric>

#include "mwcarp/carp.hpp"
#include "mwcarp/error.hpp"

namespace mwcarp {
namespace {

constexpr int kMaxDemandMembers = 6;
constexpr int kMaxVertices = 8;

struct ShortestPaths {
  int n = 0;
  std::vector<Cost> dist;
  std::vector<ArcId> last;  // last traversal on a shortest path

  Cost at(VertexId u, VertexId v) const { return dist[static_cast<std::size_t>(u * n + v)]; }

  std::vector<Traversal> path(const MixedMultigraph& g, VertexId u, VertexId v) const {
    std::vector<Traversal> out;
    for (VertexId x = v; x != u;) {
      const ArcId a = last[static_cast<std::size_t>(u * n + x)];
      out.push_back(traversal_of(g, a));
      x = g.tail(a);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }
};

ShortestPaths bellman_ford(const MixedMultigraph& g) {
  const int n = g.vertex_count();
  std::vector<ArcId> all;
  for (int e = 0; e < static_cast<int>(g.edges().size()); ++e) {
    all.push_back(ArcId::forward(e));
    all.push_back(ArcId::backward(e));
  }
  for (int a = 0; a < static_cast<int>(g.arcs().size()); ++a) all.push_back(ArcId::directed(a));

  ShortestPaths sp{n, std::vector<Cost>(static_cast<std::size_t>(n * n), kInfinity),
                   std::vector<ArcId>(static_cast<std::size_t>(n * n))};
  for (VertexId s = 0; s < n; ++s) {
    Cost* d = &sp.dist[static_cast<std::size_t>(s * n)];
    d[s] = 0;
    for (int round = 0; round < n; ++round) {
      bool changed = false;
      for (ArcId a : all) {
        const VertexId u = g.tail(a);
        const VertexId v = g.head(a);
        if (d[u] >= kInfinity || v == s) continue;
        if (d[u] + g.cost(a) < d[v]) {
          d[v] = d[u] + g.cost(a);
          sp.last[static_cast<std::size_t>(s * n + v)] = a;
          changed = true;
        }
      }
      if (!changed) break;
    }
  }
  return sp;
}

struct BestRoute {
  Cost cost = kInfinity;
  std::vector<ArcId> serve;  // in serve order, with chosen directions
};

// Cheapest closed walk from the depot serving exactly `members`, trying
// every order and every direction of undirected members.
BestRoute best_route(const Instance& inst, const ShortestPaths& sp, std::vector<MemberRef> members) {
  const MixedMultigraph& g = inst.graph;
  BestRoute best;
  std::sort(members.begin(), members.end());
  const int k = static_cast<int>(members.size());
  do {
    for (int dirs = 0; dirs < (1 << k); ++dirs) {
      std::vector<ArcId> serve;
      bool skip = false;
      for (int i = 0; i < k; ++i) {
        const MemberRef m = members[i];
        const bool back = (dirs >> i) & 1;
        if (m.kind == MemberKind::kArc) {
          if (back) skip = true;
          serve.push_back(ArcId::directed(m.index));
        } else {
          serve.push_back(back ? ArcId::backward(m.index) : ArcId::forward(m.index));
        }
      }
      if (skip) continue;
      Cost c = 0;
      VertexId at = inst.depot;
      for (ArcId a : serve) {
        c = add_costs(c, add_costs(sp.at(at, g.tail(a)), g.cost(a)));
        at = g.head(a);
      }
      c = add_costs(c, sp.at(at, inst.depot));
      if (c < best.cost) best = {c, serve};
    }
  } while (std::next_permutation(members.begin(), members.end()));
  return best;
}

}  // namespace

Solution oracle_solve(const Instance& inst) {
  const MixedMultigraph& g = inst.graph;
  const std::vector<MemberRef> required = demand_arcs(inst);
  const int k = static_cast<int>(required.size());
  if (k > kMaxDemandMembers || g.vertex_count() > kMaxVertices) {
    throw Error(ErrorCode::kTooLarge, "oracle is limited to 6 demand members and 8 vertices");
  }
  const ShortestPaths sp = bellman_ford(g);
  const int full = (1 << k) - 1;

  std::vector<BestRoute> route(static_cast<std::size_t>(full) + 1);
  for (int mask = 1; mask <= full; ++mask) {
    std::vector<MemberRef> members;
    std::int64_t load = 0;
    for (int i = 0; i < k; ++i) {
      if ((mask >> i) & 1) {
        members.push_back(required[i]);
        load += inst.demand(required[i]);
      }
    }
    if (load <= inst.capacity) route[mask] = best_route(inst, sp, members);
  }

  // Partition DP; the block holding the lowest remaining member is chosen
  // first, so every unordered partition is seen once.
  std::vector<Cost> best(static_cast<std::size_t>(full) + 1, kInfinity);
  std::vector<int> choice(static_cast<std::size_t>(full) + 1, 0);
  best[0] = 0;
  for (int mask = 1; mask <= full; ++mask) {
    const int low = mask & -mask;
    for (int sub = mask; sub > 0; sub = (sub - 1) & mask) {
      if (!(sub & low) || route[sub].cost >= kInfinity || best[mask ^ sub] >= kInfinity) continue;
      const Cost c = route[sub].cost + best[mask ^ sub];
      if (c < best[mask]) {
        best[mask] = c;
        choice[mask] = sub;
      }
    }
  }
  if (best[full] >= kInfinity) throw Error(ErrorCode::kInfeasible, "no feasible set of routes");

  Solution sol;
  for (int mask = full; mask > 0; mask ^= choice[mask]) {
    const BestRoute& br = route[choice[mask]];
    Route r;
    VertexId at = inst.depot;
    for (ArcId a : br.serve) {
      r.walk.append(sp.path(g, at, g.tail(a)));
      r.walk.steps.push_back(traversal_of(g, a));
      r.served.push_back(member_of(a));
      at = g.head(a);
    }
    r.walk.append(sp.path(g, at, inst.depot));
    r.cost = r.walk.cost(g);
    sol.total_cost += r.cost;
    sol.routes.push_back(std::move(r));
  }
  return sol;
}

}  // namespace mwcarp
