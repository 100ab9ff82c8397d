#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mwcarp/carp.hpp"

namespace mwcarp {

struct InstanceStats {
  int vertices = 0;
  int edges = 0;
  int arcs = 0;
  int demand_members = 0;
  int components = 0;  // C: weak components of the graph induced by demand members
  std::int64_t total_demand = 0;
  std::int64_t capacity = 0;
};

InstanceStats stats(const Instance& inst);

struct ReferenceBound {
  std::string_view instance;
  std::int64_t lb = 0;
  std::int64_t ub = 0;
  std::string_view table;  // "lpr", "mval", "egl" or "ob"
  int components = -1;     // published C, known for "ob" rows only
};

std::span<const ReferenceBound> reference_bounds();
std::optional<ReferenceBound> lookup_bound(std::string_view instance);

/// River-city transformation: random bridge members split the vertex set
/// into clusters, inter-cluster members are thinned out and lose their
/// demand.
struct ObConfig {
  int bridges = 1;
  int keep = 3;
  std::uint64_t seed = 0;
  int max_attempts = 100;
  int imbalance = 3;
};

struct ObResult {
  Instance instance;
  std::vector<int> cluster_of;       // cluster index per vertex
  std::vector<VertexId> centers;     // cluster index -> bridge endpoint
  std::vector<MemberRef> bridges;    // in the output's numbering
  int attempts = 0;
};

/// Throws kNotStronglyConnected for a bad input and kGenerationFailed when
/// no attempt passes the connectivity and cluster-size checks.
ObResult generate_ob_detailed(const Instance& inst, const ObConfig& cfg);
Instance generate_ob(const Instance& inst, const ObConfig& cfg);

}  // namespace mwcarp
