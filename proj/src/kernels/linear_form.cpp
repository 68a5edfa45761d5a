#include "gdelta/kernels/linear_form.hpp"

#include <atomic>

#include "gdelta/errors.hpp"

namespace gdelta::kernels {

namespace {

KernelIsa detect() {
#if defined(GDELTA_HAVE_AVX2_KERNELS)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) return KernelIsa::avx2;
#endif
  return KernelIsa::scalar;
}

std::atomic<KernelIsa>& isa_slot() {
  static std::atomic<KernelIsa> slot{detect()};
  return slot;
}

}  // namespace

void CandidateBlock::clear() {
  id.clear();
  for (std::size_t i = 0; i < rank; ++i) coord[i].clear();
}

void CandidateBlock::push(std::int32_t cand_id, const std::int32_t* w) {
  id.push_back(cand_id);
  for (std::size_t i = 0; i < rank; ++i) coord[i].push_back(w[i]);
}

void CandidateBlock::truncate(std::size_t n) {
  id.resize(n);
  for (std::size_t i = 0; i < rank; ++i) coord[i].resize(n);
}

bool avx2_available() { return detect() == KernelIsa::avx2; }

bool fits_int32(const LinearForm& form, const CandidateBlock& block) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < block.rank; ++i) {
    const std::int64_t c = form.coef[i] < 0 ? -form.coef[i] : form.coef[i];
    if (c > (std::int64_t{1} << 31)) return false;
    total += c * block.max_abs_coord;
    if (total >= (std::int64_t{1} << 31)) return false;
  }
  return true;
}

std::size_t filter_inplace(const LinearForm& form, CandidateBlock& block) {
#if defined(GDELTA_HAVE_AVX2_KERNELS)
  if (isa_slot().load(std::memory_order_relaxed) == KernelIsa::avx2 && fits_int32(form, block))
    return filter_avx2(form, block);
#endif
  return filter_scalar(form, block);
}

void force_isa(KernelIsa isa) {
  if (isa == KernelIsa::avx2 && !avx2_available()) throw InvalidInput("force_isa: AVX2 kernels unavailable");
  isa_slot().store(isa);
}

KernelIsa active_isa() { return isa_slot().load(); }

#if !defined(GDELTA_HAVE_AVX2_KERNELS)
std::size_t filter_avx2(const LinearForm& form, CandidateBlock& block) { return filter_scalar(form, block); }
#endif

}  // namespace gdelta::kernels
