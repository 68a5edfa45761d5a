#include <immintrin.h>

#include <cstdint>
#include <limits>

#include "gdelta/kernels/linear_form.hpp"

namespace gdelta::kernels {

// Callers guarantee fits_int32().
std::size_t filter_avx2(const LinearForm& form, CandidateBlock& block) {
  const std::size_t n = block.size();
  const std::size_t r = block.rank;
  const std::int64_t cap = std::numeric_limits<std::int32_t>::max();
  const __m256i bound = _mm256_set1_epi32(static_cast<std::int32_t>(form.bound < cap ? form.bound : cap));
  const __m256i zero = _mm256_setzero_si256();
  __m256i coef[kMaxRank];
  for (std::size_t i = 0; i < r; ++i) coef[i] = _mm256_set1_epi32(static_cast<std::int32_t>(form.coef[i]));

  std::size_t out = 0;
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    __m256i dot = zero;
    for (std::size_t i = 0; i < r; ++i) {
      const __m256i w = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(block.coord[i].data() + k));
      dot = _mm256_add_epi32(dot, _mm256_mullo_epi32(coef[i], w));
    }
    __m256i bad = _mm256_cmpgt_epi32(_mm256_abs_epi32(dot), bound);
    if (form.nonzero) bad = _mm256_or_si256(bad, _mm256_cmpeq_epi32(dot, zero));
    unsigned keep = ~static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(bad))) & 0xffu;
    if (keep == 0xffu && out == k) {
      out += 8;
      continue;
    }
    while (keep) {
      const std::size_t src = k + static_cast<std::size_t>(__builtin_ctz(keep));
      keep &= keep - 1;
      block.id[out] = block.id[src];
      for (std::size_t i = 0; i < r; ++i) block.coord[i][out] = block.coord[i][src];
      ++out;
    }
  }
  for (; k < n; ++k) {
    std::int64_t dot = 0;
    for (std::size_t i = 0; i < r; ++i) dot += form.coef[i] * block.coord[i][k];
    const std::int64_t mag = dot < 0 ? -dot : dot;
    if (mag > form.bound || (form.nonzero && dot == 0)) continue;
    block.id[out] = block.id[k];
    for (std::size_t i = 0; i < r; ++i) block.coord[i][out] = block.coord[i][k];
    ++out;
  }
  block.truncate(out);
  return out;
}

}  // namespace gdelta::kernels
