#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mwcarp/graph.hpp"

namespace mwcarp {

namespace simd {
struct KernelTable;
}

inline constexpr int kDefaultExactAtspCap = 18;

/// Complete asymmetric cost matrix over k sites; kInfinity marks an
/// unusable leg.
class AtspInstance {
 public:
  AtspInstance() = default;
  AtspInstance(int k, std::vector<Cost> costs);

  /// Sites are the given vertices; leg costs are their shortest-path distances.
  static AtspInstance from_distances(const DistanceMatrix& dm, std::span<const VertexId> sites);

  int size() const { return k_; }
  Cost operator()(int from, int to) const {
    return costs_[static_cast<std::size_t>(from) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(to)];
  }

 private:
  int k_ = 0;
  std::vector<Cost> costs_;
};

struct AtspTour {
  std::vector<int> order;
  Cost cost = 0;
};

/// Cost of the cyclic order, including the closing leg; kInfinity if any leg is.
Cost tour_cost(const AtspInstance& inst, std::span<const int> order);

/// Exact dynamic program over subsets; throws kTooLarge above `cap` sites.
AtspTour held_karp(const AtspInstance& inst, int cap = kDefaultExactAtspCap);
AtspTour held_karp(const AtspInstance& inst, int cap, const simd::KernelTable& kernels);

/// Nearest-neighbour construction from every start followed by
/// orientation-preserving 3-arc exchanges to a local optimum.
AtspTour atsp_heuristic(const AtspInstance& inst, std::uint64_t seed);

/// held_karp when k <= cap, atsp_heuristic otherwise.
AtspTour solve_atsp(const AtspInstance& inst, std::uint64_t seed, int cap = kDefaultExactAtspCap);

}  // namespace mwcarp
