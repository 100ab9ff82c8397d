#include "mwcarp/flow.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <utility>

#include "mwcarp/error.hpp"

namespace mwcarp {
namespace {

struct Residual {
  int to;
  std::int64_t capacity;
  Cost cost;
};

class ResidualNetwork {
 public:
  explicit ResidualNetwork(int nodes) : adjacency_(static_cast<std::size_t>(nodes)) {}

  // Returns the index of the forward residual arc; its twin is index ^ 1.
  int add(int from, int to, std::int64_t capacity, Cost cost) {
    const int id = static_cast<int>(arcs_.size());
    arcs_.push_back({to, capacity, cost});
    adjacency_[from].push_back(id);
    arcs_.push_back({from, 0, -cost});
    adjacency_[to].push_back(id + 1);
    return id;
  }

  int node_count() const { return static_cast<int>(adjacency_.size()); }
  const std::vector<int>& out(int v) const { return adjacency_[v]; }
  Residual& arc(int id) { return arcs_[id]; }
  const Residual& arc(int id) const { return arcs_[id]; }

 private:
  std::vector<Residual> arcs_;
  std::vector<std::vector<int>> adjacency_;
};

}  // namespace

FlowAssignment solve_umcf(const FlowProblem& problem) {
  const int n = problem.vertex_count;
  if (static_cast<int>(problem.supply.size()) != n) {
    throw Error(ErrorCode::kInfeasible, "supply vector does not match vertex count");
  }
  if (std::accumulate(problem.supply.begin(), problem.supply.end(), std::int64_t{0}) != 0) {
    throw Error(ErrorCode::kInfeasible, "supplies do not sum to zero");
  }
  std::int64_t total_supply = 0;
  for (std::int64_t s : problem.supply) total_supply += std::max<std::int64_t>(s, 0);

  FlowAssignment result;
  result.flow.assign(problem.arcs.size(), 0);
  if (total_supply == 0) return result;

  const int source = n;
  const int sink = n + 1;
  ResidualNetwork net(n + 2);
  std::vector<int> handle(problem.arcs.size());
  for (std::size_t i = 0; i < problem.arcs.size(); ++i) {
    const FlowArc& a = problem.arcs[i];
    if (a.cost < 0) throw Error(ErrorCode::kInfeasible, "negative arc cost");
    // Any optimal flow moves at most the total supply across a single arc.
    handle[i] = net.add(a.u, a.v, total_supply, a.cost);
  }
  for (int v = 0; v < n; ++v) {
    if (problem.supply[v] > 0) net.add(source, v, problem.supply[v], 0);
    if (problem.supply[v] < 0) net.add(v, sink, -problem.supply[v], 0);
  }

  std::vector<Cost> potential(static_cast<std::size_t>(n) + 2, 0);
  std::vector<Cost> dist(potential.size());
  std::vector<int> via(potential.size());
  std::int64_t routed = 0;
  using Entry = std::pair<Cost, int>;
  while (routed < total_supply) {
    std::fill(dist.begin(), dist.end(), kInfinity);
    std::fill(via.begin(), via.end(), -1);
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    dist[source] = 0;
    heap.emplace(0, source);
    while (!heap.empty()) {
      const auto [d, v] = heap.top();
      heap.pop();
      if (d != dist[v]) continue;
      for (int id : net.out(v)) {
        const Residual& r = net.arc(id);
        if (r.capacity == 0) continue;
        const Cost reduced = r.cost + potential[v] - potential[r.to];
        if (d + reduced < dist[r.to]) {
          dist[r.to] = d + reduced;
          via[r.to] = id;
          heap.emplace(dist[r.to], r.to);
        }
      }
    }
    if (dist[sink] >= kInfinity) {
      throw Error(ErrorCode::kInfeasible, "surplus cannot reach remaining deficit");
    }
    for (std::size_t v = 0; v < potential.size(); ++v) potential[v] += std::min(dist[v], dist[sink]);

    std::int64_t push = total_supply - routed;
    for (int v = sink; v != source; v = net.arc(via[v] ^ 1).to) push = std::min(push, net.arc(via[v]).capacity);
    for (int v = sink; v != source; v = net.arc(via[v] ^ 1).to) {
      net.arc(via[v]).capacity -= push;
      net.arc(via[v] ^ 1).capacity += push;
    }
    routed += push;
  }

  for (std::size_t i = 0; i < problem.arcs.size(); ++i) {
    result.flow[i] = net.arc(handle[i] ^ 1).capacity;
    result.total_cost = add_costs(result.total_cost, problem.arcs[i].cost * result.flow[i]);
  }
  return result;
}

bool satisfies_conservation(const FlowProblem& problem, const FlowAssignment& assignment) {
  if (assignment.flow.size() != problem.arcs.size()) return false;
  std::vector<std::int64_t> net(static_cast<std::size_t>(problem.vertex_count), 0);
  Cost cost = 0;
  for (std::size_t i = 0; i < problem.arcs.size(); ++i) {
    const std::int64_t f = assignment.flow[i];
    if (f < 0) return false;
    net[problem.arcs[i].u] += f;
    net[problem.arcs[i].v] -= f;
    cost += problem.arcs[i].cost * f;
  }
  for (int v = 0; v < problem.vertex_count; ++v) {
    if (net[v] != problem.supply[v]) return false;
  }
  return cost == assignment.total_cost;
}

}  // namespace mwcarp
