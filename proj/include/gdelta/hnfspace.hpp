#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gdelta/exactmat.hpp"

namespace gdelta {

enum class HnfMode { all, op_reduced };

struct HnfEnumConfig {
  Entry delta = 1;
  std::size_t rank = 1;
  HnfMode mode = HnfMode::all;
};

/// Deterministic single-consumer stream of r x r HNFs with determinant delta.
///
/// Diagonals come from ordered factorizations of delta in lexicographic order (only
/// non-decreasing ones in op_reduced mode); for each diagonal the strictly-upper entries
/// are run as a mixed-radix counter in row-major order, first entry most significant.
/// op_reduced mode additionally requires h(i,i) <= gcd(h(i,i+1), h(i+1,i+1)) and, for
/// diagonal (1,..,1,delta), a last column 0 <= v_1 <= .. <= v_{r-1} <= delta/2.
class HnfStream {
 public:
  explicit HnfStream(HnfEnumConfig cfg);

  std::optional<HnfMatrix> next();

 private:
  bool load_diagonal();
  bool advance_filling();
  IntMatrix current() const;

  HnfEnumConfig cfg_;
  std::vector<std::vector<Entry>> diagonals_;
  std::size_t diag_pos_ = 0;
  // Strictly-upper positions in row-major order with their admissible values.
  std::vector<std::pair<std::size_t, std::size_t>> slots_;
  std::vector<std::vector<Entry>> choices_;
  std::vector<std::size_t> counter_;
  bool last_column_mode_ = false;  // diagonal (1,..,1,delta): monotone last column
  bool pending_ = false;
};

std::vector<HnfMatrix> enumerate_hnf(const HnfEnumConfig& cfg);

/// Closed-form number of r x r HNFs with determinant delta.
std::uint64_t count_hnf_closed_form(Entry delta, std::size_t r);

/// Sorts the diagonal by adjacent swaps until h(i,i) <= gcd(h(i,i+1), h(i+1,i+1)) for all i.
HnfMatrix reduce_op1(const HnfMatrix& a);

/// For diagonal (1,..,1,delta): folds the last column into [0, delta/2] and sorts it.
HnfMatrix reduce_op2(const HnfMatrix& a);

/// Both operations; the result always lies in the op_reduced stream.
HnfMatrix reduce_ops(const HnfMatrix& a);

bool satisfies_op_constraints(const HnfMatrix& a);

/// Number of equivalence classes among all HNFs of determinant delta, counted over the
/// op-reduced list. Throws ResourceCapExceeded when that list is longer than list_cap.
std::size_t count_inequivalent(Entry delta, std::size_t r, std::size_t list_cap = 200000);

/// Number of distinct equivalence classes in an arbitrary list of square matrices.
std::size_t count_classes(const std::vector<HnfMatrix>& list);

/// Prime factorization as (prime, exponent) pairs, ascending.
std::vector<std::pair<Entry, int>> factorize(Entry n);

}  // namespace gdelta
