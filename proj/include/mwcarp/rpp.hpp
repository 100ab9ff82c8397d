#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mwcarp/atsp.hpp"
#include "mwcarp/graph.hpp"

namespace mwcarp {

/// How undirected required edges with equal costs in both directions get
/// their service direction. EO* orient edge by edge, PO* orient whole
/// undirected cycles and then longest paths of the remaining forest.
/// R = random, P = level the balance of the pair of endpoints,
/// S = fix the balance of a single random endpoint.
enum class ServiceHeuristic { kEoR, kEoP, kEoS, kPoR, kPoP, kPoS };

inline constexpr std::array<ServiceHeuristic, 6> kAllHeuristics = {
    ServiceHeuristic::kEoR, ServiceHeuristic::kEoP, ServiceHeuristic::kEoS,
    ServiceHeuristic::kPoR, ServiceHeuristic::kPoP, ServiceHeuristic::kPoS};

/// "eo-r", "po-s", ...
std::string_view to_string(ServiceHeuristic h);
std::optional<ServiceHeuristic> parse_heuristic(std::string_view text);

struct DirectionChoice {
  ServiceHeuristic heuristic = ServiceHeuristic::kEoR;
  std::uint64_t seed = 0;
};

/// Multiset of required traversals. origin[i] is the caller's index of the
/// required member that arcs[i] serves, or -1 for arcs that were added
/// only to balance the graph.
struct RequiredSet {
  std::vector<ArcId> arcs;
  std::vector<std::int32_t> origin;

  std::size_t size() const { return arcs.size(); }
  void add(ArcId a, std::int32_t from) {
    arcs.push_back(a);
    origin.push_back(from);
  }
};

/// A closed walk plus, for every step, the origin index of the required
/// element that step serves (-1 for deadheading).
struct ServiceTour {
  Walk walk;
  std::vector<std::int32_t> service;
};

struct RppOptions {
  int exact_atsp_cap = kDefaultExactAtspCap;
  /// Up to this many components, representatives are chosen by trying
  /// every vertex combination.
  int exhaustive_join_limit = 3;
  std::uint64_t seed = 0;
  /// Rotate the closed result so that it starts here when the vertex lies
  /// on it.
  std::optional<VertexId> anchor;
};

/// Required set whose components are all Eulerian: Euler tour per
/// component, joined along an ATSP cycle over `reps`. Every component needs
/// at least one representative; the first listed one receives the detour.
ServiceTour solve_eulerian_rpp(const MixedMultigraph& g, const DistanceMatrix& dm, const RequiredSet& required,
                               std::span<const VertexId> reps, const RppOptions& options = {});

/// R plus a minimum-cost multiset of shortest-path arcs that balances every
/// vertex of G[R]. Added arcs carry origin -1.
RequiredSet balance_required(const MixedMultigraph& g, const DistanceMatrix& dm, const RequiredSet& required);

/// Balance, then join with the given representatives (one per component
/// of G[R]).
ServiceTour solve_drpp(const MixedMultigraph& g, const DistanceMatrix& dm, const RequiredSet& required,
                       std::span<const VertexId> reps, const RppOptions& options = {});

/// Balance, then choose representatives of the balanced components
/// automatically (exhaustively for few components, lowest vertex otherwise).
ServiceTour solve_drpp(const MixedMultigraph& g, const DistanceMatrix& dm, const RequiredSet& required,
                       const RppOptions& options = {});

/// Replaces every required member by one required traversal; origin is the
/// member's position in `required`. A strictly cheaper edge direction always
/// wins; ties are settled by the heuristic.
RequiredSet direct_edges(const MixedMultigraph& g, std::span<const MemberRef> required, DirectionChoice choice);

/// direct_edges followed by solve_drpp. Service tags index `required`.
ServiceTour solve_mwrpp(const MixedMultigraph& g, const DistanceMatrix& dm, std::span<const MemberRef> required,
                        DirectionChoice choice, const RppOptions& options = {});

}  // namespace mwcarp
