#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "gdelta/int_matrix.hpp"

namespace gdelta {

struct BoundReport {
  Entry delta = 1;
  std::size_t r = 2;
  Entry lower_bound = 0;
  /// Construction attaining lower_bound: basic, f1, f2, f3, 30s24 or vandermonde(p=..).
  std::string lower_provenance;
  Entry upper_linear = 0;
  /// floor(130 r^3 delta^(2/r)); only for r >= 3.
  std::optional<Entry> upper_sublinear;
  /// r + 1 whenever r >= 2 delta - 1.
  std::optional<Entry> exact_if_forced;
};

/// Least prime strictly above delta, by trial division.
Entry smallest_prime_above(Entry delta);

/// Upper fields only.
BoundReport upper_bound(Entry delta, std::size_t r);

/// Lower field only.
BoundReport lower_bound(Entry delta, std::size_t r);

/// Both halves.
BoundReport bounds(Entry delta, std::size_t r);

/// Largest |r x r minor| of construct_vandermonde(p, r); memoized.
Entry vandermonde_modularity(Entry p, std::size_t r);

}  // namespace gdelta
