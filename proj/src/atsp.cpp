#include "mwcarp/atsp.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "mwcarp/error.hpp"
#include "mwcarp/random.hpp"
#include "mwcarp/simd/kernels.hpp"

namespace mwcarp {

AtspInstance::AtspInstance(int k, std::vector<Cost> costs) : k_(k), costs_(std::move(costs)) {
  if (k < 0 || costs_.size() != static_cast<std::size_t>(k) * static_cast<std::size_t>(k)) {
    throw Error(ErrorCode::kInvalidGraph, "ATSP matrix has wrong shape");
  }
  for (Cost& c : costs_) {
    if (c < 0) throw Error(ErrorCode::kInvalidGraph, "negative ATSP cost");
    c = std::min(c, kInfinity);
  }
}

AtspInstance AtspInstance::from_distances(const DistanceMatrix& dm, std::span<const VertexId> sites) {
  const int k = static_cast<int>(sites.size());
  std::vector<Cost> costs(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) costs[static_cast<std::size_t>(i) * k + j] = i == j ? 0 : dm(sites[i], sites[j]);
  }
  return AtspInstance(k, std::move(costs));
}

Cost tour_cost(const AtspInstance& inst, std::span<const int> order) {
  if (order.size() <= 1) return 0;
  Cost total = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    total = add_costs(total, inst(order[i], order[(i + 1) % order.size()]));
  }
  return total;
}

AtspTour held_karp(const AtspInstance& inst, int cap) {
  return held_karp(inst, cap, simd::active_kernels());
}

AtspTour held_karp(const AtspInstance& inst, int cap, const simd::KernelTable& kernels) {
  const int k = inst.size();
  if (k < 1) throw Error(ErrorCode::kInvalidGraph, "ATSP instance has no sites");
  if (k > cap) {
    throw Error(ErrorCode::kTooLarge, std::to_string(k) + " sites exceed exact cap " + std::to_string(cap));
  }
  if (k == 1) return {{0}, 0};

  // Site 0 is the fixed start; subsets range over sites 1..k-1, stored as
  // bits 0..m-1.
  const int m = k - 1;
  const std::size_t states = std::size_t{1} << m;
  const auto width = static_cast<std::size_t>(m);
  std::vector<Cost> best(states * width, kInfinity);
  std::vector<std::uint8_t> parent(states * width, 0);
  // into[j][i] = cost of site i+1 -> site j+1, contiguous in i for the kernel.
  std::vector<Cost> into(width * width);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i) into[j * width + i] = inst(i + 1, j + 1);
  }
  for (int j = 0; j < m; ++j) best[(std::size_t{1} << j) * width + j] = inst(0, j + 1);

  for (std::size_t mask = 1; mask < states; ++mask) {
    if ((mask & (mask - 1)) == 0) continue;
    for (int j = 0; j < m; ++j) {
      if (!(mask & (std::size_t{1} << j))) continue;
      const std::size_t prev = mask ^ (std::size_t{1} << j);
      const simd::ArgMin arg = kernels.min_plus(best.data() + prev * width, into.data() + j * width, width);
      best[mask * width + j] = std::min(arg.value, kInfinity);
      parent[mask * width + j] = static_cast<std::uint8_t>(arg.index);
    }
  }

  std::vector<Cost> closing(width);
  for (int j = 0; j < m; ++j) closing[j] = inst(j + 1, 0);
  const std::size_t full = states - 1;
  const simd::ArgMin last = kernels.min_plus(best.data() + full * width, closing.data(), width);

  AtspTour tour;
  tour.cost = std::min(last.value, kInfinity);
  if (tour.cost >= kInfinity) {
    // No finite cycle exists; parents are meaningless.
    tour.order.resize(static_cast<std::size_t>(k));
    std::iota(tour.order.begin(), tour.order.end(), 0);
    return tour;
  }
  std::vector<int> reversed;
  std::size_t mask = full;
  int j = static_cast<int>(last.index);
  while (mask != 0) {
    reversed.push_back(j + 1);
    const int i = parent[mask * width + j];
    mask ^= std::size_t{1} << j;
    j = i;
  }
  tour.order.push_back(0);
  tour.order.insert(tour.order.end(), reversed.rbegin(), reversed.rend());
  return tour;
}

namespace {

std::vector<int> nearest_neighbour(const AtspInstance& inst, int start, std::mt19937_64& rng) {
  const int k = inst.size();
  std::vector<int> order{start};
  std::vector<char> used(static_cast<std::size_t>(k), 0);
  used[start] = 1;
  for (int step = 1; step < k; ++step) {
    const int from = order.back();
    Cost best = kInfinity + 1;
    std::vector<int> ties;
    for (int to = 0; to < k; ++to) {
      if (used[to]) continue;
      if (inst(from, to) < best) {
        best = inst(from, to);
        ties.assign(1, to);
      } else if (inst(from, to) == best) {
        ties.push_back(to);
      }
    }
    const int next = ties[uniform_index(rng, ties.size())];
    used[next] = 1;
    order.push_back(next);
  }
  return order;
}

// Replaces arcs (t_i,t_i+1), (t_j,t_j+1), (t_l,t_l+1) by (t_i,t_j+1),
// (t_l,t_i+1), (t_j,t_l+1): the segments i+1..j and j+1..l swap places and
// keep their orientation.
bool improve_once(const AtspInstance& inst, std::vector<int>& t) {
  const int k = static_cast<int>(t.size());
  auto at = [&](int p) { return t[p % k]; };
  for (int i = 0; i + 2 < k; ++i) {
    for (int j = i + 1; j + 1 < k; ++j) {
      for (int l = j + 1; l < k; ++l) {
        const Cost before = inst(at(i), at(i + 1)) + inst(at(j), at(j + 1)) + inst(at(l), at(l + 1));
        const Cost after = inst(at(i), at(j + 1)) + inst(at(l), at(i + 1)) + inst(at(j), at(l + 1));
        if (after < before) {
          std::rotate(t.begin() + i + 1, t.begin() + j + 1, t.begin() + l + 1);
          return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

AtspTour atsp_heuristic(const AtspInstance& inst, std::uint64_t seed) {
  const int k = inst.size();
  if (k < 1) throw Error(ErrorCode::kInvalidGraph, "ATSP instance has no sites");
  std::mt19937_64 rng(seed);
  AtspTour best;
  best.cost = kInfinity + 1;
  for (int start = 0; start < k; ++start) {
    std::vector<int> order = nearest_neighbour(inst, start, rng);
    while (improve_once(inst, order)) {
    }
    const Cost c = tour_cost(inst, order);
    if (c < best.cost) best = {std::move(order), c};
  }
  // Report the cycle starting at site 0 so results compare across solvers.
  std::rotate(best.order.begin(), std::find(best.order.begin(), best.order.end(), 0), best.order.end());
  return best;
}

AtspTour solve_atsp(const AtspInstance& inst, std::uint64_t seed, int cap) {
  return inst.size() <= cap ? held_karp(inst, cap) : atsp_heuristic(inst, seed);
}

}  // namespace mwcarp
