#include <doctest.h>

#include <filesystem>
#include <random>

#include "gdelta/errors.hpp"
#include "gdelta/matrix_io.hpp"
#include "test_support.hpp"

using namespace gdelta;

TEST_SUITE("matrix_io") {
  TEST_CASE("format and parse examples") {
    const IntMatrix m{{1, 0, -3}, {0, 1, 4}};
    CHECK(format_matrix(m) == "2 3\n1 0 -3\n0 1 4\n");
    CHECK(parse_matrix("2 3\n1 0 -3\n0 1 4\n") == m);
    CHECK(parse_matrix("  2 3 1 0 -3\n\n 0 1 4  ") == m);
    CHECK(format_witness(m) == "1,0;0,1;-3,4");
    CHECK(parse_witness("1,0;0,1;-3,4") == m);
  }

  TEST_CASE("malformed input throws") {
    CHECK_THROWS_AS(parse_matrix(""), InvalidInput);
    CHECK_THROWS_AS(parse_matrix("2 2\n1 2\n3\n"), InvalidInput);
    CHECK_THROWS_AS(parse_matrix("1 2\n1 x\n"), InvalidInput);
    CHECK_THROWS_AS(parse_matrix("1 1\n1 2\n"), InvalidInput);
    CHECK_THROWS_AS(parse_witness(""), InvalidInput);
    CHECK_THROWS_AS(parse_witness("1,0;1"), InvalidInput);
    CHECK_THROWS_AS(parse_witness("1,,0"), InvalidInput);
  }

  TEST_CASE("round trips on random matrices") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t r = 1 + rng() % 5;
      const std::size_t n = 1 + rng() % 8;
      const IntMatrix m = testing::random_matrix(rng, r, n, -1000, 1000);
      CHECK(parse_matrix(format_matrix(m)) == m);
      CHECK(parse_witness(format_witness(m)) == m);
    }
  }

  TEST_CASE("file round trip") {
    const auto path = std::filesystem::temp_directory_path() / "gdelta_matrix_io_test.txt";
    const IntMatrix m{{2, 1}, {1, 2}};
    write_matrix_file(path, m);
    CHECK(read_matrix_file(path) == m);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(read_matrix_file(path), InvalidInput);
  }
}
