// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include "mwcarp/simd/kernels.hpp"

namespace mwcarp::simd {
namespace {

void relax_row_avx2(std::int64_t* dist_i, std::int32_t* pred_i, const std::int64_t* dist_k,
                    const std::int32_t* pred_k, std::int64_t d_ik, std::size_t n) {
  const __m256i dik = _mm256_set1_epi64x(d_ik);
  // Picks the low 32 bits of each 64-bit mask lane into lanes 0..3.
  const __m256i pack_lo = _mm256_setr_epi32(0, 2, 4, 6, 0, 2, 4, 6);
  std::size_t j = 0;
  for (; j + 8 <= n; j += 8) {
    const __m256i dk0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dist_k + j));
    const __m256i dk1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dist_k + j + 4));
    const __m256i di0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dist_i + j));
    const __m256i di1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dist_i + j + 4));
    const __m256i c0 = _mm256_add_epi64(dik, dk0);
    const __m256i c1 = _mm256_add_epi64(dik, dk1);
    const __m256i m0 = _mm256_cmpgt_epi64(di0, c0);
    const __m256i m1 = _mm256_cmpgt_epi64(di1, c1);
    if (_mm256_testz_si256(m0, m0) && _mm256_testz_si256(m1, m1)) continue;
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dist_i + j), _mm256_blendv_epi8(di0, c0, m0));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dist_i + j + 4), _mm256_blendv_epi8(di1, c1, m1));
    const __m256i mask32 = _mm256_blend_epi32(_mm256_permutevar8x32_epi32(m0, pack_lo),
                                              _mm256_permutevar8x32_epi32(m1, pack_lo), 0xF0);
    const __m256i pi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(pred_i + j));
    const __m256i pk = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(pred_k + j));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(pred_i + j), _mm256_blendv_epi8(pi, pk, mask32));
  }
  for (; j < n; ++j) {
    const std::int64_t candidate = d_ik + dist_k[j];
    if (candidate < dist_i[j]) {
      dist_i[j] = candidate;
      pred_i[j] = pred_k[j];
    }
  }
}

ArgMin min_plus_avx2(const std::int64_t* a, const std::int64_t* b, std::size_t n) {
  if (n < 8) {
    ArgMin best{a[0] + b[0], 0};
    for (std::size_t j = 1; j < n; ++j) {
      const std::int64_t s = a[j] + b[j];
      if (s < best.value) best = {s, j};
    }
    return best;
  }
  __m256i vmin = _mm256_add_epi64(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a)),
                                  _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b)));
  std::size_t j = 4;
  for (; j + 4 <= n; j += 4) {
    const __m256i s = _mm256_add_epi64(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + j)),
                                       _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + j)));
    vmin = _mm256_blendv_epi8(vmin, s, _mm256_cmpgt_epi64(vmin, s));
  }
  alignas(32) std::int64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), vmin);
  std::int64_t value = lanes[0];
  for (int l = 1; l < 4; ++l) value = lanes[l] < value ? lanes[l] : value;
  for (; j < n; ++j) {
    const std::int64_t s = a[j] + b[j];
    value = s < value ? s : value;
  }
  // First index attaining the minimum, to match the scalar tie-breaking.
  std::size_t index = 0;
  while (a[index] + b[index] != value) ++index;
  return {value, index};
}

}  // namespace

namespace detail {
const KernelTable kAvx2Table{Isa::kAvx2, &relax_row_avx2, &min_plus_avx2};
}  // namespace detail

}  // namespace mwcarp::simd
