// Service-direction heuristics for undirected required edges.

#include <algorithm>
#include <random>
#include <string>

#include "mwcarp/error.hpp"
#include "mwcarp/random.hpp"
#include "mwcarp/rpp.hpp"

namespace mwcarp {
namespace {

bool is_path_heuristic(ServiceHeuristic h) {
  return h == ServiceHeuristic::kPoR || h == ServiceHeuristic::kPoP || h == ServiceHeuristic::kPoS;
}

// Undirected required edges whose direction is still open. Edge slots are
// indices into `members`; vertices are host vertices.
class OpenEdges {
 public:
  OpenEdges(const MixedMultigraph& g, std::span<const MemberRef> members, std::span<const int> open)
      : g_(g), members_(members), incident_(static_cast<std::size_t>(g.vertex_count())) {
    for (int slot : open) {
      alive_.push_back(1);
      slots_.push_back(slot);
      const Edge& e = edge(static_cast<int>(slots_.size()) - 1);
      incident_[e.u].push_back(static_cast<int>(slots_.size()) - 1);
      if (e.v != e.u) incident_[e.v].push_back(static_cast<int>(slots_.size()) - 1);
    }
  }

  int count() const { return static_cast<int>(slots_.size()); }
  bool alive(int id) const { return alive_[id] != 0; }
  void kill(int id) { alive_[id] = 0; }
  int slot(int id) const { return slots_[id]; }
  const Edge& edge(int id) const { return g_.edges()[members_[slots_[id]].index]; }
  VertexId other(int id, VertexId v) const { return edge(id).u == v ? edge(id).v : edge(id).u; }
  const std::vector<int>& incident(VertexId v) const { return incident_[v]; }
  int vertex_count() const { return static_cast<int>(incident_.size()); }
  bool any_alive() const { return std::find(alive_.begin(), alive_.end(), 1) != alive_.end(); }

 private:
  const MixedMultigraph& g_;
  std::span<const MemberRef> members_;
  std::vector<std::vector<int>> incident_;
  std::vector<char> alive_;
  std::vector<int> slots_;
};

class Orienter {
 public:
  Orienter(const MixedMultigraph& g, std::span<const MemberRef> members, DirectionChoice choice)
      : g_(g),
        members_(members),
        choice_(choice),
        rng_(choice.seed),
        chosen_(members.size()),
        balance_(static_cast<std::size_t>(g.vertex_count()), 0) {}

  RequiredSet run() {
    std::vector<int> open;
    for (int slot = 0; slot < static_cast<int>(members_.size()); ++slot) {
      const MemberRef m = members_[slot];
      if (!g_.contains(m)) {
        throw Error(ErrorCode::kDanglingReference, "required member " + to_label(m) + " not in graph");
      }
      if (m.kind == MemberKind::kArc) {
        fix(slot, ArcId::directed(m.index));
        continue;
      }
      const Edge& e = g_.edges()[m.index];
      if (e.cost_uv < e.cost_vu) {
        fix(slot, ArcId::forward(m.index));
      } else if (e.cost_vu < e.cost_uv) {
        fix(slot, ArcId::backward(m.index));
      } else if (e.u == e.v) {
        fix(slot, ArcId::forward(m.index));
      } else {
        open.push_back(slot);
      }
    }

    if (is_path_heuristic(choice_.heuristic)) {
      OpenEdges edges(g_, members_, open);
      orient_cycles(edges);
      orient_paths(edges);
    } else {
      for (int slot : open) orient_single(slot);
    }

    RequiredSet out;
    for (int slot = 0; slot < static_cast<int>(members_.size()); ++slot) out.add(chosen_[slot], slot);
    return out;
  }

 private:
  void fix(int slot, ArcId a) {
    chosen_[slot] = a;
    ++balance_[g_.head(a)];
    --balance_[g_.tail(a)];
  }

  // Orients edge `slot` as tail -> head.
  void fix_between(int slot, VertexId tail, VertexId head) {
    const int e = members_[slot].index;
    fix(slot, g_.edges()[e].u == tail && g_.edges()[e].v == head ? ArcId::forward(e) : ArcId::backward(e));
  }

  // True if the pair (x, y) should be traversed x -> y.
  bool level_pair(VertexId x, VertexId y) {
    if (balance_[y] < balance_[x]) return true;
    if (balance_[y] > balance_[x]) return false;
    return coin_flip(rng_);
  }

  // Picks a random endpoint z and enters it iff its balance is negative.
  bool level_single(VertexId x, VertexId y) {
    const bool pick_y = coin_flip(rng_);
    const VertexId z = pick_y ? y : x;
    const bool into_z = balance_[z] < 0;
    return pick_y == into_z;
  }

  bool decide(VertexId x, VertexId y) {
    switch (choice_.heuristic) {
      case ServiceHeuristic::kEoR:
      case ServiceHeuristic::kPoR:
        return coin_flip(rng_);
      case ServiceHeuristic::kEoP:
      case ServiceHeuristic::kPoP:
        return level_pair(x, y);
      case ServiceHeuristic::kEoS:
      case ServiceHeuristic::kPoS:
        return level_single(x, y);
    }
    return true;
  }

  void orient_single(int slot) {
    const Edge& e = g_.edges()[members_[slot].index];
    if (decide(e.u, e.v)) {
      fix_between(slot, e.u, e.v);
    } else {
      fix_between(slot, e.v, e.u);
    }
  }

  // Repeatedly finds an undirected cycle by depth-first search and orients
  // it in the direction it was discovered.
  void orient_cycles(OpenEdges& edges) {
    while (true) {
      std::vector<int> cycle;
      std::vector<VertexId> cycle_tails;
      if (!find_cycle(edges, cycle, cycle_tails)) return;
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        const VertexId tail = cycle_tails[i];
        fix_between(edges.slot(cycle[i]), tail, edges.other(cycle[i], tail));
        edges.kill(cycle[i]);
      }
    }
  }

  bool find_cycle(const OpenEdges& edges, std::vector<int>& cycle, std::vector<VertexId>& tails) const {
    const int n = edges.vertex_count();
    std::vector<int> depth(static_cast<std::size_t>(n), -1);
    std::vector<int> parent_edge(static_cast<std::size_t>(n), -1);
    std::vector<VertexId> parent(static_cast<std::size_t>(n), -1);
    std::vector<std::size_t> cursor(static_cast<std::size_t>(n), 0);
    for (VertexId root = 0; root < n; ++root) {
      if (depth[root] >= 0 || edges.incident(root).empty()) continue;
      depth[root] = 0;
      std::vector<VertexId> stack{root};
      while (!stack.empty()) {
        const VertexId v = stack.back();
        if (cursor[v] == edges.incident(v).size()) {
          stack.pop_back();
          continue;
        }
        const int id = edges.incident(v)[cursor[v]++];
        if (!edges.alive(id) || id == parent_edge[v]) continue;
        const VertexId w = edges.other(id, v);
        if (depth[w] < 0) {
          depth[w] = depth[v] + 1;
          parent[w] = v;
          parent_edge[w] = id;
          stack.push_back(w);
          continue;
        }
        if (depth[w] > depth[v]) continue;  // already explored descendant
        // Back edge v -> w closes the tree path w -> ... -> v.
        std::vector<int> path_edges;
        std::vector<VertexId> path_tails;
        for (VertexId x = v; x != w; x = parent[x]) {
          path_edges.push_back(parent_edge[x]);
          path_tails.push_back(parent[x]);
        }
        cycle.assign(path_edges.rbegin(), path_edges.rend());
        tails.assign(path_tails.rbegin(), path_tails.rend());
        cycle.push_back(id);
        tails.push_back(v);
        return true;
      }
    }
    return false;
  }

  // Farthest vertex (in edges) from `from` within its tree; ties to the
  // lowest index. Fills parent pointers for path recovery.
  VertexId farthest(const OpenEdges& edges, VertexId from, std::vector<int>& via, std::vector<int>& dist,
                    std::vector<VertexId>& touched) const {
    for (VertexId v : touched) {
      dist[v] = -1;
      via[v] = -1;
    }
    touched.assign(1, from);
    dist[from] = 0;
    for (std::size_t head = 0; head < touched.size(); ++head) {
      const VertexId v = touched[head];
      for (int id : edges.incident(v)) {
        if (!edges.alive(id)) continue;
        const VertexId w = edges.other(id, v);
        if (dist[w] >= 0) continue;
        dist[w] = dist[v] + 1;
        via[w] = id;
        touched.push_back(w);
      }
    }
    VertexId best = from;
    for (VertexId v : touched) {
      if (dist[v] > dist[best] || (dist[v] == dist[best] && v < best)) best = v;
    }
    return best;
  }

  // Repeatedly orients a longest path of the remaining forest.
  void orient_paths(OpenEdges& edges) {
    const int n = edges.vertex_count();
    std::vector<int> via(static_cast<std::size_t>(n), -1);
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<VertexId> touched;
    while (edges.any_alive()) {
      int best_length = 0;
      VertexId best_x = -1;
      std::vector<int> best_path;
      std::fill(seen.begin(), seen.end(), 0);
      for (VertexId root = 0; root < n; ++root) {
        if (seen[root]) continue;
        const auto& inc = edges.incident(root);
        if (std::none_of(inc.begin(), inc.end(), [&](int id) { return edges.alive(id); })) continue;
        // Double sweep: the farthest vertex from any vertex is an endpoint of
        // a longest path in a tree.
        const VertexId x = farthest(edges, root, via, dist, touched);
        for (VertexId v : touched) seen[v] = 1;
        const VertexId y = farthest(edges, x, via, dist, touched);
        if (dist[y] > best_length) {
          best_length = dist[y];
          best_x = x;
          best_path.clear();
          for (VertexId v = y; v != x; v = edges.other(via[v], v)) best_path.push_back(via[v]);
          std::reverse(best_path.begin(), best_path.end());  // now ordered x -> y
        }
      }
      VertexId y = best_x;
      for (int id : best_path) y = edges.other(id, y);
      const bool forward = decide(best_x, y);
      VertexId at = forward ? best_x : y;
      if (!forward) std::reverse(best_path.begin(), best_path.end());
      for (int id : best_path) {
        const VertexId next = edges.other(id, at);
        fix_between(edges.slot(id), at, next);
        edges.kill(id);
        at = next;
      }
    }
  }

  const MixedMultigraph& g_;
  std::span<const MemberRef> members_;
  DirectionChoice choice_;
  std::mt19937_64 rng_;
  std::vector<ArcId> chosen_;
  std::vector<int> balance_;
};

}  // namespace

RequiredSet direct_edges(const MixedMultigraph& g, std::span<const MemberRef> required, DirectionChoice choice) {
  return Orienter(g, required, choice).run();
}

}  // namespace mwcarp
