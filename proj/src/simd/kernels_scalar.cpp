#include "mwcarp/simd/kernels.hpp"

namespace mwcarp::simd {
namespace {

void relax_row_scalar(std::int64_t* dist_i, std::int32_t* pred_i, const std::int64_t* dist_k,
                      const std::int32_t* pred_k, std::int64_t d_ik, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) {
    const std::int64_t candidate = d_ik + dist_k[j];
    if (candidate < dist_i[j]) {
      dist_i[j] = candidate;
      pred_i[j] = pred_k[j];
    }
  }
}

ArgMin min_plus_scalar(const std::int64_t* a, const std::int64_t* b, std::size_t n) {
  ArgMin best{a[0] + b[0], 0};
  for (std::size_t j = 1; j < n; ++j) {
    const std::int64_t s = a[j] + b[j];
    if (s < best.value) best = {s, j};
  }
  return best;
}

}  // namespace

namespace detail {
const KernelTable kScalarTable{Isa::kScalar, &relax_row_scalar, &min_plus_scalar};
}  // namespace detail

}  // namespace mwcarp::simd
