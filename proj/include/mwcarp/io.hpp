#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "mwcarp/carp.hpp"

namespace mwcarp {

/// Line-oriented text format, vertices 1-indexed:
///
///   NAME <token>
///   VERTICES <n>
///   DEPOT <v>
///   CAPACITY <Q>
///   EDGES <m>      then m lines  <u> <v> <cost_uv> <cost_vu> <demand>
///   ARCS <m>       then m lines  <u> <v> <cost> <demand>
///   END
///
/// `#` starts a comment. An optional SERVICE_SURCHARGE <c> line may precede
/// EDGES. Throws kParseError (with line number) or kSemanticError.
Instance parse_instance(std::string_view text);
std::string write_instance(const Instance& inst);

/// Tolerant reader for the common third-party CARP layouts (the
/// Spanish-keyword gdb/egl files and the MCARP lpr/mval files). Not
/// guaranteed to round-trip.
Instance parse_legacy_instance(std::string_view text);

enum class InstanceFormat { kCanonical, kLegacy };

/// Throws kParseError when the file cannot be read.
Instance read_instance_file(const std::string& path, InstanceFormat format);
std::string read_text_file(const std::string& path);

struct SolutionMeta {
  std::string heuristic;
  std::uint64_t seed = 0;
  int runs = 0;
};

/// JSON with a fixed key order; byte-identical for identical inputs.
std::string write_solution(const Instance& inst, const Solution& sol, const SolutionMeta& meta);

/// Reads the routes back. Traversals are taken as written, so a tampered
/// file parses and is then rejected by validate().
Solution parse_solution(std::string_view text);

}  // namespace mwcarp
