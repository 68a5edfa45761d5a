#pragma once

#include <cstddef>
#include <span>

#include "gdelta/int_matrix.hpp"

namespace gdelta {

/// (I_r | delta * 1): generic delta-modular with r + 1 columns.
IntMatrix construct_basic(Entry delta, std::size_t r);

/// Columns (1,0), (0,1), (1,1), (1,2), .., (1,delta): delta + 2 columns.
IntMatrix construct_f1(Entry delta);

/// construct_f1 plus the column (2, delta); delta must be odd and at least 3.
IntMatrix construct_f2(Entry delta);

/// Whether delta = 12s + 2 (s >= 1) or delta = 12s + 8 (s >= 0).
bool f3_admissible(Entry delta);

/// M(a, b) with the parameter vectors for delta = 12s + 2 or 12s + 8: delta + 4 columns.
IntMatrix construct_f3(Entry delta);

/// Column (0,1), then for j = 1..m every (j, k) with a_j <= k <= b_j and gcd(j, k) = 1.
IntMatrix construct_M(std::span<const Entry> a, std::span<const Entry> b);

/// nu_s for s = 0..12.
Entry nu_30s24(int s);

/// The five-block M(a, b) for delta = 30s + 24, s = 0..12: delta + 2 + floor(nu_s / 2) columns.
IntMatrix construct_30s24(int s);

/// Columns (1, [t]_p, [t^2]_p, .., [t^(r-1)]_p) for t = 1..p, residues taken in 1..p.
IntMatrix construct_vandermonde(Entry p, std::size_t r);

bool is_prime(Entry n);

}  // namespace gdelta
