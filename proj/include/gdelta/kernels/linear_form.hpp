#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace gdelta::kernels {

inline constexpr std::size_t kMaxRank = 8;

/// Test |c . w| <= bound, and additionally c . w != 0 when nonzero is set.
struct LinearForm {
  std::array<std::int64_t, kMaxRank> coef{};
  std::int64_t bound = 0;
  bool nonzero = false;
};

/// Structure-of-arrays batch of candidate columns: id[k] with coordinates coord[i][k], i < rank.
struct CandidateBlock {
  std::size_t rank = 0;
  std::int32_t max_abs_coord = 0;
  std::vector<std::int32_t> id;
  std::array<std::vector<std::int32_t>, kMaxRank> coord;

  std::size_t size() const { return id.size(); }
  void clear();
  void push(std::int32_t cand_id, const std::int32_t* w);
  /// Keeps the first n entries.
  void truncate(std::size_t n);
};

enum class KernelIsa { scalar, avx2 };

/// Removes the block entries failing the form, preserving order. Returns the new size.
std::size_t filter_scalar(const LinearForm& form, CandidateBlock& block);
/// Same contract; requires sum |c_i| * max_abs_coord < 2^31 and an AVX2 CPU.
std::size_t filter_avx2(const LinearForm& form, CandidateBlock& block);

/// Whether the running CPU and this build support the AVX2 variant.
bool avx2_available();

/// Whether filter_avx2 may be used for this form on this block.
bool fits_int32(const LinearForm& form, const CandidateBlock& block);

/// Picks the AVX2 variant when available and in range, the scalar one otherwise.
std::size_t filter_inplace(const LinearForm& form, CandidateBlock& block);

/// Forces one variant for all later filter_inplace calls (tests and benchmarks); scalar is always legal.
void force_isa(KernelIsa isa);
KernelIsa active_isa();

}  // namespace gdelta::kernels
