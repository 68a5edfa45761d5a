#pragma once

#include <cstddef>
#include <vector>

namespace gdelta {

/// Calls visit(idx) for every k-subset of {0..n-1} in colexicographic order. Stops early
/// when visit returns false; returns false iff stopped early.
template <class Visit>
bool for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return true;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    if (!visit(static_cast<const std::vector<std::size_t>&>(idx))) return false;
    // Colex successor: bump the lowest position that can move, reset the ones below it.
    std::size_t i = 0;
    while (i < k && idx[i] + 1 == (i + 1 < k ? idx[i + 1] : n)) ++i;
    if (i == k) return true;
    ++idx[i];
    for (std::size_t j = 0; j < i; ++j) idx[j] = j;
  }
}

}  // namespace gdelta
