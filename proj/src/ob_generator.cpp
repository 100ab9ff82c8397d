#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

#include "mwcarp/bench.hpp"
#include "mwcarp/error.hpp"
#include "mwcarp/random.hpp"

namespace mwcarp {
namespace {

struct Candidate {
  MemberRef member;
  VertexId u = 0;
  VertexId v = 0;
  Cost cost = 0;  // cheapest traversal
};

std::vector<Candidate> all_members(const MixedMultigraph& g) {
  std::vector<Candidate> out;
  for (int e = 0; e < static_cast<int>(g.edges().size()); ++e) {
    const Edge& x = g.edges()[e];
    out.push_back({MemberRef::edge(e), x.u, x.v, std::min(x.cost_uv, x.cost_vu)});
  }
  for (int a = 0; a < static_cast<int>(g.arcs().size()); ++a) {
    const Arc& x = g.arcs()[a];
    out.push_back({MemberRef::arc(a), x.u, x.v, x.cost});
  }
  return out;
}

std::optional<ObResult> attempt(const Instance& inst, const DistanceMatrix& dm, const std::vector<Candidate>& members,
                                const ObConfig& cfg, std::mt19937_64& rng) {
  const int n = inst.graph.vertex_count();
  std::vector<std::size_t> chosen;
  while (static_cast<int>(chosen.size()) < cfg.bridges) {
    const std::size_t pick = uniform_index(rng, members.size());
    if (std::find(chosen.begin(), chosen.end(), pick) == chosen.end()) chosen.push_back(pick);
  }
  std::vector<VertexId> centers;
  for (std::size_t i : chosen) {
    centers.push_back(members[i].u);
    centers.push_back(members[i].v);
  }
  std::sort(centers.begin(), centers.end());
  centers.erase(std::unique(centers.begin(), centers.end()), centers.end());
  if (centers.size() < 2) return std::nullopt;

  const int k = static_cast<int>(centers.size());
  std::vector<int> cluster_of(static_cast<std::size_t>(n), 0);
  std::vector<int> size(static_cast<std::size_t>(k), 0);
  for (VertexId v = 0; v < n; ++v) {
    Cost best = kInfinity + 1;
    for (int c = 0; c < k; ++c) {
      const Cost d = std::min(dm(v, centers[c]), dm(centers[c], v));
      if (d < best) {
        best = d;
        cluster_of[v] = c;
      }
    }
    ++size[cluster_of[v]];
  }
  // Every cluster must hold at least (n / k) / imbalance vertices.
  for (int s : size) {
    if (static_cast<std::int64_t>(s) * cfg.imbalance * k < n) return std::nullopt;
  }

  // Per cluster pair keep the bridges plus the cheapest other members, up
  // to `keep` in total.
  std::vector<char> is_bridge(members.size(), 0);
  for (std::size_t i : chosen) is_bridge[i] = 1;
  std::map<std::pair<int, int>, std::vector<std::size_t>> between;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const int a = cluster_of[members[i].u];
    const int b = cluster_of[members[i].v];
    if (a != b) between[{std::min(a, b), std::max(a, b)}].push_back(i);
  }
  std::vector<char> keep(members.size(), 1);
  std::vector<char> zero(members.size(), 0);
  for (std::size_t i : chosen) zero[i] = 1;
  for (auto& [pair, list] : between) {
    std::stable_sort(list.begin(), list.end(), [&](std::size_t x, std::size_t y) {
      if (is_bridge[x] != is_bridge[y]) return is_bridge[x] > is_bridge[y];
      return members[x].cost < members[y].cost;
    });
    for (std::size_t r = 0; r < list.size(); ++r) {
      if (static_cast<int>(r) >= cfg.keep && !is_bridge[list[r]]) keep[list[r]] = 0;
      zero[list[r]] = 1;
    }
  }

  ObResult out;
  Instance& o = out.instance;
  o.name = (cfg.bridges == 1 ? "ob-" : "ob2-") + inst.name;
  o.depot = inst.depot;
  o.capacity = inst.capacity;
  o.service_surcharge = inst.service_surcharge;
  std::vector<Edge> edges;
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (!keep[i]) continue;
    const MemberRef m = members[i].member;
    const std::int64_t d = zero[i] ? 0 : inst.demand(m);
    if (m.kind == MemberKind::kEdge) {
      if (is_bridge[i]) out.bridges.push_back(MemberRef::edge(static_cast<std::int32_t>(edges.size())));
      edges.push_back(inst.graph.edges()[m.index]);
      o.edge_demand.push_back(d);
    } else {
      if (is_bridge[i]) out.bridges.push_back(MemberRef::arc(static_cast<std::int32_t>(arcs.size())));
      arcs.push_back(inst.graph.arcs()[m.index]);
      o.arc_demand.push_back(d);
    }
  }
  o.graph = MixedMultigraph(n, std::move(edges), std::move(arcs));
  if (!strongly_connected(all_pairs_shortest_paths(o.graph))) return std::nullopt;
  out.cluster_of = std::move(cluster_of);
  out.centers = std::move(centers);
  return out;
}

}  // namespace

ObResult generate_ob_detailed(const Instance& inst, const ObConfig& cfg) {
  if (cfg.bridges < 1 || cfg.bridges > 2) throw std::invalid_argument("bridges must be 1 or 2");
  if (cfg.keep < 1 || cfg.max_attempts < 1 || cfg.imbalance < 1) {
    throw std::invalid_argument("keep, max_attempts and imbalance must be positive");
  }
  const DistanceMatrix dm = all_pairs_shortest_paths(inst.graph);
  if (!strongly_connected(dm)) throw Error(ErrorCode::kNotStronglyConnected, "input graph is not strongly connected");
  const auto members = all_members(inst.graph);
  if (static_cast<int>(members.size()) < cfg.bridges) {
    throw Error(ErrorCode::kGenerationFailed, "not enough members to choose bridges from");
  }
  for (int a = 0; a < cfg.max_attempts; ++a) {
    std::mt19937_64 rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(a)));
    if (auto result = attempt(inst, dm, members, cfg, rng)) {
      result->attempts = a + 1;
      return std::move(*result);
    }
  }
  throw Error(ErrorCode::kGenerationFailed, "no admissible instance after " + std::to_string(cfg.max_attempts) + " attempts");
}

Instance generate_ob(const Instance& inst, const ObConfig& cfg) { return generate_ob_detailed(inst, cfg).instance; }

}  // namespace mwcarp
