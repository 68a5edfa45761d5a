#include <doctest.h>

#include <numeric>
#include <set>

#include "brute_force.hpp"
#include "gdelta/errors.hpp"
#include "gdelta/hnfspace.hpp"
#include "gdelta/modsolve.hpp"

using namespace gdelta;
using namespace gdelta::testing;

namespace {

bool in_kernel_mod(const HnfMatrix& a, const Column& v, Entry delta) {
  const Column w = a.matrix() * std::span<const Entry>(v);
  return std::all_of(w.begin(), w.end(), [&](Entry e) { return e % delta == 0; });
}

}  // namespace

TEST_SUITE("modsolve") {
  TEST_CASE("solve_mod examples") {
    const auto s = solve_mod(HnfMatrix(IntMatrix{{1, 0}, {0, 5}}), 5);
    CHECK(s.solutions == std::vector<Column>{{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}});

    const auto one = solve_mod(HnfMatrix(IntMatrix::identity(3)), 1);
    CHECK(one.solutions == std::vector<Column>{{0, 0, 0}});

    const HnfMatrix a(IntMatrix{{2, 1}, {0, 2}});
    const auto four = solve_mod(a, 4);
    CHECK(four.solutions.size() == 4);
    CHECK(four.solutions == brute_force_residues(a, 4));
    CHECK_THROWS_AS(solve_mod(a, 5), InvalidInput);
  }

  TEST_CASE("solve_mod matches residue brute force for every HNF with r <= 3, delta <= 20") {
    for (std::size_t r = 1; r <= 3; ++r)
      for (Entry delta = 1; delta <= 20; ++delta)
        for (const auto& h : enumerate_hnf({delta, r, HnfMode::all})) {
          const auto s = solve_mod(h, delta);
          REQUIRE(s.solutions.size() == static_cast<std::size_t>(delta));
          CHECK(s.solutions == brute_force_residues(h, delta));
        }
  }

  TEST_CASE("solve_mod matches brute force on op-reduced HNFs with r = 4, delta <= 12") {
    for (Entry delta = 1; delta <= 12; ++delta)
      for (const auto& h : enumerate_hnf({delta, 4, HnfMode::op_reduced})) {
        const auto s = solve_mod(h, delta);
        REQUIRE(s.solutions.size() == static_cast<std::size_t>(delta));
        CHECK(s.solutions == brute_force_residues(h, delta));
      }
  }

  TEST_CASE("generic lift examples") {
    CHECK(lift_representatives({0, 0}, 3, CandidateMode::generic) == std::vector<Column>{{3, -3}, {3, 3}});
    CHECK(lift_representatives({1, 2}, 3, CandidateMode::generic) == std::vector<Column>{{1, -1}, {1, 2}});
    CHECK_THROWS_AS(lift_representatives({3, 0}, 3, CandidateMode::generic), InvalidInput);
  }

  TEST_CASE("non-generic lift example") {
    CHECK(lift_representatives({0, 1}, 2, CandidateMode::non_generic) == std::vector<Column>{{0, 1}, {2, -1}, {2, 1}});
  }

  TEST_CASE("generic lifts: 2^(r-1) vectors, nonzero entries within delta, same residue") {
    for (Entry delta = 1; delta <= 7; ++delta)
      for (std::size_t r = 1; r <= 4; ++r) {
        Column x(r, 0);
        for (int trial = 0; trial < 20; ++trial) {
          for (std::size_t i = 0; i < r; ++i) x[i] = (trial * 7 + static_cast<Entry>(i) * 3) % delta;
          const auto lifts = lift_representatives(x, delta, CandidateMode::generic);
          CHECK(lifts.size() == (std::size_t{1} << (r - 1)));
          for (const auto& v : lifts) {
            CHECK(v[0] > 0);
            for (std::size_t i = 0; i < r; ++i) {
              CHECK(v[i] != 0);
              CHECK(std::abs(v[i]) <= delta);
              CHECK(((v[i] % delta) + delta) % delta == x[i]);
            }
          }
        }
      }
  }

  TEST_CASE("prune_parallel examples") {
    CandidateColumns c{{{1, 1}, {2, 2}, {1, 2}}, CandidateMode::generic};
    CHECK(prune_parallel(c).columns == std::vector<Column>{{1, 1}, {1, 2}});
    CandidateColumns plain{{{1, 1}, {1, 2}, {1, 3}}, CandidateMode::generic};
    CHECK(prune_parallel(plain).columns == plain.columns);
    CandidateColumns chain{{{1, 2}, {2, 4}, {3, 6}}, CandidateMode::generic};
    CHECK(prune_parallel(chain).columns == std::vector<Column>{{1, 2}});
    CandidateColumns ng{{{1, 1}}, CandidateMode::non_generic};
    CHECK_THROWS_AS(prune_parallel(ng), InvalidInput);
  }

  TEST_CASE("generic candidates: in the kernel mod delta, 2^(r-1) delta before pruning, pairwise non-parallel after") {
    for (Entry delta : {1, 2, 5, 6, 9})
      for (std::size_t r : {2, 3, 4})
        for (const auto& h : enumerate_hnf({delta, r, HnfMode::op_reduced})) {
          std::size_t raw = 0;
          std::set<Column> distinct;
          for (const auto& x : solve_mod(h, delta).solutions)
            for (const auto& v : lift_representatives(x, delta, CandidateMode::generic)) {
              ++raw;
              distinct.insert(v);
            }
          CHECK(raw == (std::size_t{1} << (r - 1)) * static_cast<std::size_t>(delta));
          CHECK(distinct.size() == raw);
          const auto cands = build_candidates(h, delta, CandidateMode::generic);
          for (std::size_t i = 0; i < cands.columns.size(); ++i) {
            const auto& v = cands.columns[i];
            CHECK(in_kernel_mod(h, v, delta));
            CHECK(v[0] > 0);
            for (std::size_t j = i + 1; j < cands.columns.size(); ++j) {
              const auto& w = cands.columns[j];
              bool parallel = true;
              for (std::size_t a = 0; a < r && parallel; ++a)
                for (std::size_t b = a + 1; b < r && parallel; ++b) parallel = v[a] * w[b] == v[b] * w[a];
              CHECK_FALSE(parallel);
            }
          }
        }
  }

  TEST_CASE("non-generic candidates: restricted universe") {
    for (Entry delta : {2, 3, 4})
      for (const auto& h : enumerate_hnf({delta, 3, HnfMode::op_reduced})) {
        const auto cands = build_candidates(h, delta, CandidateMode::non_generic);
        std::set<Column> seen(cands.columns.begin(), cands.columns.end());
        CHECK(seen.size() == cands.columns.size());
        for (const auto& v : cands.columns) {
          CHECK(in_kernel_mod(h, v, delta));
          const auto first = std::find_if(v.begin(), v.end(), [](Entry e) { return e != 0; });
          REQUIRE(first != v.end());
          CHECK(*first > 0);
          Column neg = v;
          for (auto& e : neg) e = -e;
          CHECK(seen.count(neg) == 0);
          const auto nz = std::count_if(v.begin(), v.end(), [](Entry e) { return e != 0; });
          CHECK_FALSE((nz == 1 && *first == delta));
        }
      }
  }

  TEST_CASE("non-generic candidates with negations") {
    const HnfMatrix h(IntMatrix{{1, 0}, {0, 2}});
    const auto restricted = build_candidates(h, 2, CandidateMode::non_generic);
    const auto full = build_candidates(h, 2, CandidateMode::non_generic, true);
    const std::set<Column> all(full.columns.begin(), full.columns.end());
    CHECK(all.count({0, 0}) == 1);
    CHECK(all.count({2, 0}) == 0);
    CHECK(all.count({0, 2}) == 0);
    CHECK(all.count({-2, 0}) == 1);
    CHECK(full.columns.size() == 2 * restricted.columns.size() + 1 + 2);
  }
}
