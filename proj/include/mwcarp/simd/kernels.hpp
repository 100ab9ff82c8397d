#pragma once

// Data-parallel inner loops used by the shortest-path and Held-Karp
// solvers. Every kernel has a portable scalar reference; vector variants
// must produce bit-identical results and are chosen at runtime.

#include <cstddef>
#include <cstdint>
#include <span>

namespace mwcarp::simd {

enum class Isa { kScalar, kAvx2 };

const char* to_string(Isa isa);

struct ArgMin {
  std::int64_t value;
  std::size_t index;
};

struct KernelTable {
  Isa isa;

  // One Floyd-Warshall row update through pivot k:
  //   if d_ik + dist_k[j] < dist_i[j]: dist_i[j] = d_ik + dist_k[j], pred_i[j] = pred_k[j]
  // Requires d_ik and every dist entry to be at most the infinity sentinel.
  void (*relax_row)(std::int64_t* dist_i, std::int32_t* pred_i, const std::int64_t* dist_k,
                    const std::int32_t* pred_k, std::int64_t d_ik, std::size_t n);

  // min_j a[j] + b[j] with the lowest index on ties. n >= 1; entries at
  // most the infinity sentinel, so sums never overflow.
  ArgMin (*min_plus)(const std::int64_t* a, const std::int64_t* b, std::size_t n);
};

bool available(Isa isa);
std::span<const Isa> available_isas();

/// Throws std::invalid_argument if the ISA is not usable on this machine.
const KernelTable& kernels(Isa isa);

/// Widest usable ISA. MWCARP_ISA=scalar in the environment pins the
/// scalar reference.
const KernelTable& active_kernels();

namespace detail {
extern const KernelTable kScalarTable;
#if defined(MWCARP_BUILD_AVX2)
extern const KernelTable kAvx2Table;
#endif
}  // namespace detail

}  // namespace mwcarp::simd
