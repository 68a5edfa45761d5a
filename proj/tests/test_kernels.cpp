#include <doctest.h>

#include <random>

#include "gdelta/kernels/linear_form.hpp"
#include "gdelta/pipeline.hpp"

using namespace gdelta;
using namespace gdelta::kernels;

namespace {

CandidateBlock random_block(std::mt19937_64& rng, std::size_t r, std::int32_t max_abs, std::size_t n) {
  CandidateBlock b;
  b.rank = r;
  b.max_abs_coord = max_abs;
  std::uniform_int_distribution<std::int32_t> dist(-max_abs, max_abs);
  std::int32_t w[kMaxRank];
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < r; ++i) w[i] = dist(rng);
    b.push(static_cast<std::int32_t>(k), w);
  }
  return b;
}

LinearForm random_form(std::mt19937_64& rng, std::size_t r, std::int64_t max_coef, bool nonzero) {
  LinearForm f;
  std::uniform_int_distribution<std::int64_t> dist(-max_coef, max_coef);
  for (std::size_t i = 0; i < r; ++i) f.coef[i] = dist(rng);
  std::uniform_int_distribution<std::int64_t> bound(0, max_coef * 2);
  f.bound = bound(rng);
  f.nonzero = nonzero;
  return f;
}

struct IsaGuard {
  KernelIsa saved = active_isa();
  ~IsaGuard() { force_isa(saved); }
};

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("scalar filter keeps exactly the passing entries in order") {
    CandidateBlock b;
    b.rank = 2;
    b.max_abs_coord = 3;
    const std::int32_t pts[][2] = {{1, 1}, {1, -1}, {2, 1}, {3, 3}, {0, 2}};
    for (std::int32_t k = 0; k < 5; ++k) b.push(k, pts[k]);
    LinearForm f;
    f.coef = {1, -1};
    f.bound = 1;
    f.nonzero = true;
    CHECK(filter_scalar(f, b) == 1);
    CHECK(b.id == std::vector<std::int32_t>{2});
    CHECK(b.coord[0] == std::vector<std::int32_t>{2});
  }

  TEST_CASE("fits_int32 guards the 32-bit variant") {
    CandidateBlock b;
    b.rank = 3;
    b.max_abs_coord = 1000;
    LinearForm f;
    f.coef = {1000, 1000, 1000};
    CHECK(fits_int32(f, b));
    f.coef = {2000000, 1000000, 1000};
    CHECK_FALSE(fits_int32(f, b));
  }

  TEST_CASE("AVX2 and scalar variants agree") {
    if (!avx2_available()) {
      MESSAGE("AVX2 not available on this CPU; equivalence check skipped");
      return;
    }
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 3000; ++trial) {
      const std::size_t r = 1 + trial % kMaxRank;
      const std::int32_t max_abs = 1 + static_cast<std::int32_t>(rng() % 600);
      const std::size_t n = rng() % 70;
      CandidateBlock a = random_block(rng, r, max_abs, n);
      // Scale coefficients so the largest forms sit right at the int32 limit.
      const std::int64_t cap = ((std::int64_t{1} << 31) - 1) / (static_cast<std::int64_t>(r) * max_abs);
      const std::int64_t max_coef = trial % 5 == 0 ? cap : std::min<std::int64_t>(cap, 50);
      const LinearForm f = random_form(rng, r, max_coef, trial % 2 == 0);
      REQUIRE(fits_int32(f, a));
      CandidateBlock b = a;
      const std::size_t ns = filter_scalar(f, a);
      const std::size_t nv = filter_avx2(f, b);
      CHECK(ns == nv);
      CHECK(a.id == b.id);
      for (std::size_t i = 0; i < r; ++i) CHECK(a.coord[i] == b.coord[i]);
    }
  }

  TEST_CASE("pipeline results do not depend on the kernel variant") {
    IsaGuard guard;
    force_isa(KernelIsa::scalar);
    const auto g_scalar = compute_g(9, 3);
    const auto h_scalar = compute_h(3, 3);
    if (!avx2_available()) return;
    force_isa(KernelIsa::avx2);
    const auto g_vec = compute_g(9, 3);
    const auto h_vec = compute_h(3, 3);
    CHECK(g_scalar.value == g_vec.value);
    CHECK(g_scalar.witness == g_vec.witness);
    CHECK(g_scalar.nodes == g_vec.nodes);
    CHECK(h_scalar.value == h_vec.value);
    CHECK(h_scalar.witness == h_vec.witness);
  }
}
