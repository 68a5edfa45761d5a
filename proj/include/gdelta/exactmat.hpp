#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gdelta/int_matrix.hpp"

namespace gdelta {

/// Square upper-triangular matrix with positive diagonal and 0 <= h(i,j) < h(j,j) for i < j.
/// Construction validates the invariants.
class HnfMatrix {
 public:
  explicit HnfMatrix(IntMatrix inner);

  const IntMatrix& matrix() const { return inner_; }
  std::size_t rank() const { return inner_.rows(); }
  Entry operator()(std::size_t i, std::size_t j) const { return inner_(i, j); }
  std::vector<Entry> diagonal() const;
  /// Product of the diagonal.
  Entry determinant() const;

  friend bool operator==(const HnfMatrix&, const HnfMatrix&) = default;
  friend auto operator<=>(const HnfMatrix& a, const HnfMatrix& b) { return a.inner_ <=> b.inner_; }

  static bool satisfies_invariants(const IntMatrix& m);

 private:
  IntMatrix inner_;
};

struct HnfDecomposition {
  IntMatrix unimodular;  // U with A = U * H
  HnfMatrix hnf;
};

struct SnfDecomposition {
  IntMatrix left;     // P
  IntMatrix diag;     // S = P * A * Q
  IntMatrix right;    // Q
  std::vector<Entry> alphas;
};

/// Exact determinant of the submatrix picked by row_idx x col_idx. Cofactor formulas up
/// to 3x3, fraction-free Bareiss (128-bit, checked) above that.
Entry minor(const IntMatrix& a, std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx);

/// Determinant of a square matrix.
Entry determinant(const IntMatrix& a);

/// Determinant of an n x n row-major block. No index validation; same arithmetic as minor().
Entry det_row_major(std::span<const Entry> m, std::size_t n);

/// Rank over the rationals.
std::size_t rank(const IntMatrix& a);

/// A = U * H with H the Hermite normal form. Throws InvalidInput on singular input.
HnfDecomposition hnf(const IntMatrix& a);

/// P * A * Q = diag(alpha_1..alpha_r), alpha_i | alpha_{i+1}. Throws InvalidInput on singular input.
SnfDecomposition snf(const IntMatrix& a);

/// Whether A2 = S * A1 * D * P for unimodular S, sign diagonal D and permutation P.
/// Decided by brute force over (P, D); inputs must be square and nonsingular.
bool equivalent(const IntMatrix& a1, const IntMatrix& a2);

/// Smallest HNF (in IntMatrix order) over the orbit {hnf(A * D * P)}. Two square nonsingular
/// matrices are equivalent iff their keys coincide.
HnfMatrix equivalence_key(const IntMatrix& a);

}  // namespace gdelta
