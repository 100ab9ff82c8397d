#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace mwcarp {

namespace simd {
struct KernelTable;
}

using Cost = std::int64_t;

// Distinguished "unreachable" value. Chosen so that the sum of two
// sentinels still fits in Cost; finite sums must stay strictly below it.
inline constexpr Cost kInfinity = std::numeric_limits<Cost>::max() / 4;

// Saturating at kInfinity; throws if two finite costs overflow the range.
Cost add_costs(Cost a, Cost b);

using VertexId = std::int32_t;

enum class ArcKind : std::uint8_t { kDirected, kEdgeForward, kEdgeBackward };

/// One directed traversal of a graph member: a directed arc, or an
/// undirected edge taken u->v (forward) or v->u (backward).
struct ArcId {
  ArcKind kind = ArcKind::kDirected;
  std::int32_t index = -1;

  static constexpr ArcId directed(std::int32_t i) { return {ArcKind::kDirected, i}; }
  static constexpr ArcId forward(std::int32_t e) { return {ArcKind::kEdgeForward, e}; }
  static constexpr ArcId backward(std::int32_t e) { return {ArcKind::kEdgeBackward, e}; }

  bool is_edge() const { return kind != ArcKind::kDirected; }
  /// The opposite traversal of the same edge; only valid for edges.
  ArcId reversed() const;

  friend auto operator<=>(const ArcId&, const ArcId&) = default;
};

enum class MemberKind : std::uint8_t { kEdge, kArc };

/// An element of E ∪ A, i.e. the thing that carries demand and is served,
/// independent of the direction in which it is traversed.
struct MemberRef {
  MemberKind kind = MemberKind::kArc;
  std::int32_t index = -1;

  static constexpr MemberRef edge(std::int32_t i) { return {MemberKind::kEdge, i}; }
  static constexpr MemberRef arc(std::int32_t i) { return {MemberKind::kArc, i}; }

  friend auto operator<=>(const MemberRef&, const MemberRef&) = default;
};

MemberRef member_of(ArcId a);
/// "e3" / "a7" style label, 1-indexed to match the instance file order.
std::string to_label(MemberRef m);
/// "a7", "e3>" (u->v) or "e3<" (v->u), 1-indexed.
std::string to_label(ArcId a);

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Cost cost_uv = 0;
  Cost cost_vu = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Arc {
  VertexId u = 0;
  VertexId v = 0;
  Cost cost = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Mixed multigraph G = (V, E, A) with per-direction edge costs. Parallel
/// members and loops are allowed. Immutable once constructed.
class MixedMultigraph {
 public:
  MixedMultigraph() = default;
  MixedMultigraph(int vertex_count, std::vector<Edge> edges, std::vector<Arc> arcs);

  int vertex_count() const { return n_; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Arc> arcs() const { return arcs_; }

  bool contains(ArcId a) const;
  bool contains(MemberRef m) const;
  VertexId tail(ArcId a) const;
  VertexId head(ArcId a) const;
  Cost cost(ArcId a) const;

  /// Every traversal leaving v: edge directions first (edge order), then
  /// arcs (arc order).
  std::span<const ArcId> out_traversals(VertexId v) const;

  /// Dense numbering of all traversals, used for predecessor tables.
  int traversal_count() const { return static_cast<int>(arcs_.size() + 2 * edges_.size()); }
  int encode(ArcId a) const;
  ArcId decode(int code) const;

  friend bool operator==(const MixedMultigraph& a, const MixedMultigraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.arcs_ == b.arcs_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Arc> arcs_;
  std::vector<int> out_begin_;
  std::vector<ArcId> out_;
};

/// One element of a walk or of a directed multigraph view.
struct Traversal {
  VertexId tail = 0;
  VertexId head = 0;
  ArcId via;

  friend bool operator==(const Traversal&, const Traversal&) = default;
};

Traversal traversal_of(const MixedMultigraph& g, ArcId a);

struct Walk {
  std::vector<Traversal> steps;

  bool empty() const { return steps.empty(); }
  std::size_t size() const { return steps.size(); }
  VertexId start() const { return steps.front().tail; }
  VertexId end() const { return steps.back().head; }
  /// Consecutive steps chain head-to-tail.
  bool is_connected() const;
  bool is_closed() const { return !empty() && is_connected() && start() == end(); }
  Cost cost(const MixedMultigraph& g) const;
  void append(std::span<const Traversal> more);
};

/// Directed multigraph induced by a multiset of traversals (G[R]). Every
/// element counts as its own arc, so multiplicities may exceed the host's.
struct DirectedView {
  int vertex_count = 0;
  std::vector<Traversal> arcs;
};

DirectedView induced_required_graph(const MixedMultigraph& g, std::span<const ArcId> required);

/// In-degree minus out-degree; loops contribute nothing.
int balance(const DirectedView& view, VertexId v);
std::vector<int> balances(const DirectedView& view);

/// Weakly connected components of the arcs in the view. Vertices without
/// incident arcs are not part of any component. Components are ordered by
/// their smallest vertex, and each is sorted ascending.
std::vector<std::vector<VertexId>> weak_components(const DirectedView& view);

/// Hierholzer's algorithm. Successor arcs are taken in view order.
/// Throws kNotEulerian, kDisconnected or kStartNotInGraph.
Walk euler_tour(const DirectedView& view, VertexId start);
/// Same circuit as euler_tour, as indices into view.arcs.
std::vector<int> euler_circuit(const DirectedView& view, VertexId start);

class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(int n, std::vector<Cost> dist, std::vector<std::int32_t> pred);

  int size() const { return n_; }
  Cost operator()(VertexId u, VertexId v) const { return dist_[index(u, v)]; }
  bool reachable(VertexId u, VertexId v) const { return (*this)(u, v) < kInfinity; }

  /// Code (MixedMultigraph::encode) of the last traversal on a shortest
  /// u->v path, or -1 when u == v or v is unreachable.
  std::int32_t last_arc(VertexId u, VertexId v) const { return pred_[index(u, v)]; }

  /// Shortest u->v walk; empty for u == v. Throws kUnreachable.
  std::vector<Traversal> path(const MixedMultigraph& g, VertexId u, VertexId v) const;

  std::span<const Cost> raw_distances() const { return dist_; }

 private:
  std::size_t index(VertexId u, VertexId v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }

  int n_ = 0;
  std::vector<Cost> dist_;
  std::vector<std::int32_t> pred_;
};

/// Floyd-Warshall over the mixed graph (edges both ways at their
/// directional cost, arcs forward only), using the fastest available
/// relaxation kernel.
DistanceMatrix all_pairs_shortest_paths(const MixedMultigraph& g);
DistanceMatrix all_pairs_shortest_paths(const MixedMultigraph& g, const simd::KernelTable& kernels);

bool strongly_connected(const DistanceMatrix& dm);

}  // namespace mwcarp
