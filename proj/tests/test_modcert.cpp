#include <doctest.h>

#include <random>

#include "gdelta/errors.hpp"
#include "gdelta/families.hpp"
#include "gdelta/modcert.hpp"
#include "test_support.hpp"

using namespace gdelta;
using namespace gdelta::testing;

TEST_SUITE("modcert") {
  TEST_CASE("is_generic examples") {
    CHECK(is_generic(IntMatrix{{1, 0, 1}, {0, 1, 1}}));
    CHECK_FALSE(is_generic(IntMatrix{{1, 0, 2}, {0, 1, 0}}));
    CHECK(is_generic(construct_f1(4)));
    CHECK_THROWS_AS(is_generic(IntMatrix{{1, 2}, {2, 4}}), InvalidInput);
  }

  TEST_CASE("is_delta_modular examples") {
    CHECK(is_delta_modular(IntMatrix::identity(2), 1));
    CHECK(is_delta_modular(construct_f1(3), 3));
    CHECK_FALSE(is_delta_modular(construct_f1(3), 4));
    CHECK_THROWS_AS(is_delta_modular(IntMatrix{{1, 2}, {2, 4}}, 1), InvalidInput);
  }

  TEST_CASE("is_totally_generic examples") {
    CHECK(is_totally_generic(IntMatrix{{1}}));
    CHECK(is_totally_generic(IntMatrix{{1, 1}, {1, 2}}));
    CHECK_FALSE(is_totally_generic(IntMatrix{{1, 1}, {1, 1}}));
    CHECK_FALSE(is_totally_generic(IntMatrix{{1, 0}, {1, 2}}));
  }

  TEST_CASE("is_delta_bound examples") {
    CHECK(is_delta_bound(IntMatrix{{5}}, 5));
    CHECK_FALSE(is_delta_bound(IntMatrix{{6}}, 5));
    CHECK_FALSE(is_delta_bound(IntMatrix{{3, -2}, {2, 3}}, 3));
    CHECK(is_delta_bound(IntMatrix{{3, -2}, {2, 1}}, 3));
  }

  TEST_CASE("certify examples") {
    const auto f2 = certify(construct_f2(5), 5);
    CHECK(f2.is_delta_modular);
    CHECK(f2.is_generic);
    CHECK(f2.columns == 8);

    const auto zero = certify(IntMatrix(2, 2), 1);
    CHECK(zero.rank == 0);
    CHECK_FALSE(zero.is_generic);
    CHECK_FALSE(zero.is_delta_modular);

    const auto f3 = certify(construct_f3(8), 8);
    CHECK(f3.is_delta_modular);
    CHECK(f3.columns == 12);
  }

  TEST_CASE("certify on a rank-deficient matrix reports instead of throwing") {
    const auto rep = certify(IntMatrix{{1, 2, 3}, {2, 4, 6}}, 6);
    CHECK(rep.rank == 1);
    CHECK(rep.max_abs_top_minor == 6);
    CHECK(rep.is_delta_modular);
    CHECK(rep.zero_top_minor_count == 0);
    CHECK(rep.columns_distinct);
  }

  TEST_CASE("report invariants") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 300; ++trial) {
      const IntMatrix a = random_matrix(rng, 2 + trial % 2, 3 + trial % 3, -3, 3);
      const auto rep = certify(a, 4);
      CHECK(rep.is_generic == (rep.rank > 0 && rep.zero_top_minor_count == 0));
      if (rep.is_delta_modular) {
        CHECK(rep.is_delta_submodular);
        CHECK(rep.max_abs_top_minor == 4);
      }
    }
  }

  TEST_CASE("genericity and modularity are invariant under equivalence moves") {
    std::mt19937_64 rng(31);
    std::vector<std::pair<IntMatrix, Entry>> corpus{{construct_f1(6), 6}, {construct_f2(7), 7}, {construct_f3(8), 8},
                                                   {construct_basic(3, 3), 3}, {construct_vandermonde(5, 3), 8}};
    for (int trial = 0; trial < 200; ++trial) corpus.emplace_back(random_matrix(rng, 2 + trial % 3, 5, -3, 3), 1 + trial % 9);
    for (const auto& [a, delta] : corpus) {
      if (rank(a) != a.rows()) continue;
      for (int k = 0; k < 3; ++k) {
        const IntMatrix b = random_equivalent(rng, a);
        CHECK(is_generic(a) == is_generic(b));
        CHECK(is_delta_modular(a, delta) == is_delta_modular(b, delta));
      }
    }
  }

  TEST_CASE("a matrix is modular for at most one delta") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 100; ++trial) {
      const IntMatrix a = random_matrix(rng, 2, 4, -3, 3);
      if (rank(a) != 2) continue;
      const Entry d = certify(a, 1).max_abs_top_minor;
      for (Entry other = 1; other <= 20; ++other) CHECK(is_delta_modular(a, other) == (other == d));
    }
  }

  TEST_CASE("columns_distinct") {
    CHECK(columns_distinct(IntMatrix{{1, 0}, {0, 1}}));
    CHECK_FALSE(columns_distinct(IntMatrix{{1, 1}, {2, 2}}));
  }
}
