#include "mwcarp/graph.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "mwcarp/error.hpp"
#include "mwcarp/simd/kernels.hpp"

namespace mwcarp {

Cost add_costs(Cost a, Cost b) {
  if (a >= kInfinity || b >= kInfinity) return kInfinity;
  const Cost sum = a + b;
  if (sum >= kInfinity) throw Error(ErrorCode::kInvalidGraph, "cost overflow");
  return sum;
}

ArcId ArcId::reversed() const {
  switch (kind) {
    case ArcKind::kEdgeForward:
      return backward(index);
    case ArcKind::kEdgeBackward:
      return forward(index);
    case ArcKind::kDirected:
      break;
  }
  throw Error(ErrorCode::kDanglingReference, "directed arc has no reverse traversal");
}

MemberRef member_of(ArcId a) {
  return a.is_edge() ? MemberRef::edge(a.index) : MemberRef::arc(a.index);
}

std::string to_label(MemberRef m) {
  return (m.kind == MemberKind::kEdge ? "e" : "a") + std::to_string(m.index + 1);
}

std::string to_label(ArcId a) {
  switch (a.kind) {
    case ArcKind::kDirected:
      return "a" + std::to_string(a.index + 1);
    case ArcKind::kEdgeForward:
      return "e" + std::to_string(a.index + 1) + ">";
    case ArcKind::kEdgeBackward:
      return "e" + std::to_string(a.index + 1) + "<";
  }
  return "?";
}

MixedMultigraph::MixedMultigraph(int vertex_count, std::vector<Edge> edges, std::vector<Arc> arcs)
    : n_(vertex_count), edges_(std::move(edges)), arcs_(std::move(arcs)) {
  if (n_ < 0) throw Error(ErrorCode::kInvalidGraph, "negative vertex count");
  auto valid = [this](VertexId v) { return v >= 0 && v < n_; };
  Cost total = 0;
  auto account = [&total](Cost c) {
    if (c < 0 || c >= kInfinity) throw Error(ErrorCode::kInvalidGraph, "cost out of range");
    total = add_costs(total, c);
  };
  for (const Edge& e : edges_) {
    if (!valid(e.u) || !valid(e.v)) throw Error(ErrorCode::kInvalidGraph, "edge endpoint out of range");
    account(e.cost_uv);
    account(e.cost_vu);
  }
  for (const Arc& a : arcs_) {
    if (!valid(a.u) || !valid(a.v)) throw Error(ErrorCode::kInvalidGraph, "arc endpoint out of range");
    account(a.cost);
  }

  std::vector<int> degree(static_cast<std::size_t>(n_) + 1, 0);
  for (const Edge& e : edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  for (const Arc& a : arcs_) ++degree[a.u];
  out_begin_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (int v = 0; v < n_; ++v) out_begin_[v + 1] = out_begin_[v] + degree[v];
  out_.resize(static_cast<std::size_t>(out_begin_[n_]));
  std::vector<int> fill(out_begin_.begin(), out_begin_.end() - 1);
  for (std::int32_t i = 0; i < static_cast<std::int32_t>(edges_.size()); ++i) {
    out_[fill[edges_[i].u]++] = ArcId::forward(i);
    out_[fill[edges_[i].v]++] = ArcId::backward(i);
  }
  for (std::int32_t i = 0; i < static_cast<std::int32_t>(arcs_.size()); ++i) {
    out_[fill[arcs_[i].u]++] = ArcId::directed(i);
  }
}

bool MixedMultigraph::contains(ArcId a) const {
  if (a.index < 0) return false;
  return a.is_edge() ? a.index < static_cast<std::int32_t>(edges_.size())
                     : a.index < static_cast<std::int32_t>(arcs_.size());
}

bool MixedMultigraph::contains(MemberRef m) const {
  if (m.index < 0) return false;
  return m.kind == MemberKind::kEdge ? m.index < static_cast<std::int32_t>(edges_.size())
                                     : m.index < static_cast<std::int32_t>(arcs_.size());
}

VertexId MixedMultigraph::tail(ArcId a) const {
  switch (a.kind) {
    case ArcKind::kDirected:
      return arcs_.at(a.index).u;
    case ArcKind::kEdgeForward:
      return edges_.at(a.index).u;
    case ArcKind::kEdgeBackward:
      return edges_.at(a.index).v;
  }
  return -1;
}

VertexId MixedMultigraph::head(ArcId a) const {
  switch (a.kind) {
    case ArcKind::kDirected:
      return arcs_.at(a.index).v;
    case ArcKind::kEdgeForward:
      return edges_.at(a.index).v;
    case ArcKind::kEdgeBackward:
      return edges_.at(a.index).u;
  }
  return -1;
}

Cost MixedMultigraph::cost(ArcId a) const {
  switch (a.kind) {
    case ArcKind::kDirected:
      return arcs_.at(a.index).cost;
    case ArcKind::kEdgeForward:
      return edges_.at(a.index).cost_uv;
    case ArcKind::kEdgeBackward:
      return edges_.at(a.index).cost_vu;
  }
  return kInfinity;
}

std::span<const ArcId> MixedMultigraph::out_traversals(VertexId v) const {
  return std::span<const ArcId>(out_).subspan(out_begin_[v], out_begin_[v + 1] - out_begin_[v]);
}

int MixedMultigraph::encode(ArcId a) const {
  switch (a.kind) {
    case ArcKind::kDirected:
      return a.index;
    case ArcKind::kEdgeForward:
      return static_cast<int>(arcs_.size()) + 2 * a.index;
    case ArcKind::kEdgeBackward:
      return static_cast<int>(arcs_.size()) + 2 * a.index + 1;
  }
  return -1;
}

ArcId MixedMultigraph::decode(int code) const {
  const int m_a = static_cast<int>(arcs_.size());
  if (code < m_a) return ArcId::directed(code);
  const int e = (code - m_a) / 2;
  return (code - m_a) % 2 == 0 ? ArcId::forward(e) : ArcId::backward(e);
}

Traversal traversal_of(const MixedMultigraph& g, ArcId a) {
  return {g.tail(a), g.head(a), a};
}

bool Walk::is_connected() const {
  for (std::size_t i = 1; i < steps.size(); ++i) {
    if (steps[i - 1].head != steps[i].tail) return false;
  }
  return true;
}

Cost Walk::cost(const MixedMultigraph& g) const {
  Cost total = 0;
  for (const Traversal& t : steps) total = add_costs(total, g.cost(t.via));
  return total;
}

void Walk::append(std::span<const Traversal> more) {
  steps.insert(steps.end(), more.begin(), more.end());
}

DirectedView induced_required_graph(const MixedMultigraph& g, std::span<const ArcId> required) {
  DirectedView view{g.vertex_count(), {}};
  view.arcs.reserve(required.size());
  for (ArcId a : required) {
    if (!g.contains(a)) {
      throw Error(ErrorCode::kDanglingReference, "required traversal " + to_label(a) + " not in graph");
    }
    view.arcs.push_back(traversal_of(g, a));
  }
  return view;
}

int balance(const DirectedView& view, VertexId v) {
  int b = 0;
  for (const Traversal& t : view.arcs) {
    if (t.head == v) ++b;
    if (t.tail == v) --b;
  }
  return b;
}

std::vector<int> balances(const DirectedView& view) {
  std::vector<int> b(static_cast<std::size_t>(view.vertex_count), 0);
  for (const Traversal& t : view.arcs) {
    ++b[t.head];
    --b[t.tail];
  }
  return b;
}

namespace {

struct DisjointSets {
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
  std::vector<int> parent;
};

}  // namespace

std::vector<std::vector<VertexId>> weak_components(const DirectedView& view) {
  DisjointSets sets(view.vertex_count);
  std::vector<char> touched(static_cast<std::size_t>(view.vertex_count), 0);
  for (const Traversal& t : view.arcs) {
    touched[t.tail] = touched[t.head] = 1;
    sets.unite(t.tail, t.head);
  }
  std::vector<std::vector<VertexId>> components;
  std::vector<int> slot(static_cast<std::size_t>(view.vertex_count), -1);
  for (VertexId v = 0; v < view.vertex_count; ++v) {
    if (!touched[v]) continue;
    const int root = sets.find(v);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(components.size());
      components.emplace_back();
    }
    components[slot[root]].push_back(v);
  }
  return components;
}

std::vector<int> euler_circuit(const DirectedView& view, VertexId start) {
  if (view.arcs.empty()) return {};
  const int n = view.vertex_count;
  if (start < 0 || start >= n) throw Error(ErrorCode::kStartNotInGraph, "start vertex out of range");

  std::vector<int> out_begin(static_cast<std::size_t>(n) + 1, 0);
  for (const Traversal& t : view.arcs) ++out_begin[t.tail + 1];
  for (int v = 0; v < n; ++v) out_begin[v + 1] += out_begin[v];
  std::vector<int> out(view.arcs.size());
  {
    std::vector<int> fill(out_begin.begin(), out_begin.end() - 1);
    for (int i = 0; i < static_cast<int>(view.arcs.size()); ++i) out[fill[view.arcs[i].tail]++] = i;
  }
  const bool touched = std::any_of(view.arcs.begin(), view.arcs.end(),
                                   [start](const Traversal& t) { return t.tail == start || t.head == start; });
  if (!touched) throw Error(ErrorCode::kStartNotInGraph, "start vertex has no incident arc");
  const std::vector<int> bal = balances(view);
  for (VertexId v = 0; v < n; ++v) {
    if (bal[v] != 0) {
      throw Error(ErrorCode::kNotEulerian, "vertex " + std::to_string(v + 1) + " has balance " +
                                               std::to_string(bal[v]));
    }
  }
  if (weak_components(view).size() != 1) throw Error(ErrorCode::kDisconnected, "arc set is not weakly connected");

  std::vector<int> next(out_begin.begin(), out_begin.end() - 1);
  std::vector<std::pair<VertexId, int>> stack{{start, -1}};
  std::vector<int> circuit;
  circuit.reserve(view.arcs.size());
  while (!stack.empty()) {
    const VertexId v = stack.back().first;
    if (next[v] < out_begin[v + 1]) {
      const int arc = out[next[v]++];
      stack.emplace_back(view.arcs[arc].head, arc);
    } else {
      if (stack.back().second >= 0) circuit.push_back(stack.back().second);
      stack.pop_back();
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  return circuit;
}

Walk euler_tour(const DirectedView& view, VertexId start) {
  Walk tour;
  for (int i : euler_circuit(view, start)) tour.steps.push_back(view.arcs[i]);
  return tour;
}

DistanceMatrix::DistanceMatrix(int n, std::vector<Cost> dist, std::vector<std::int32_t> pred)
    : n_(n), dist_(std::move(dist)), pred_(std::move(pred)) {}

std::vector<Traversal> DistanceMatrix::path(const MixedMultigraph& g, VertexId u, VertexId v) const {
  std::vector<Traversal> steps;
  if (u == v) return steps;
  if (!reachable(u, v)) {
    throw Error(ErrorCode::kUnreachable,
                "vertex " + std::to_string(v + 1) + " unreachable from " + std::to_string(u + 1));
  }
  VertexId at = v;
  while (at != u) {
    const ArcId a = g.decode(last_arc(u, at));
    steps.push_back(traversal_of(g, a));
    at = steps.back().tail;
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

DistanceMatrix all_pairs_shortest_paths(const MixedMultigraph& g) {
  return all_pairs_shortest_paths(g, simd::active_kernels());
}

DistanceMatrix all_pairs_shortest_paths(const MixedMultigraph& g, const simd::KernelTable& kernels) {
  const int n = g.vertex_count();
  const auto nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  std::vector<Cost> dist(nn, kInfinity);
  std::vector<std::int32_t> pred(nn, -1);
  auto at = [n](VertexId u, VertexId v) {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v);
  };
  for (VertexId u = 0; u < n; ++u) {
    for (ArcId a : g.out_traversals(u)) {
      const VertexId v = g.head(a);
      if (v == u) continue;
      if (g.cost(a) < dist[at(u, v)]) {
        dist[at(u, v)] = g.cost(a);
        pred[at(u, v)] = g.encode(a);
      }
    }
    dist[at(u, u)] = 0;
  }
  for (VertexId k = 0; k < n; ++k) {
    const Cost* row_k = dist.data() + at(k, 0);
    const std::int32_t* pred_k = pred.data() + at(k, 0);
    for (VertexId i = 0; i < n; ++i) {
      const Cost d_ik = dist[at(i, k)];
      if (i == k || d_ik >= kInfinity) continue;
      kernels.relax_row(dist.data() + at(i, 0), pred.data() + at(i, 0), row_k, pred_k, d_ik,
                        static_cast<std::size_t>(n));
    }
  }
  return DistanceMatrix(n, std::move(dist), std::move(pred));
}

bool strongly_connected(const DistanceMatrix& dm) {
  return std::all_of(dm.raw_distances().begin(), dm.raw_distances().end(),
                     [](Cost c) { return c < kInfinity; });
}

}  // namespace mwcarp
