#include "gdelta/exactmat.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "gdelta/checked.hpp"
#include "gdelta/errors.hpp"

namespace gdelta {

namespace {

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

void check_indices(std::span<const std::size_t> idx, std::size_t limit, const char* what) {
  std::vector<bool> seen(limit, false);
  for (std::size_t i : idx) {
    if (i >= limit) throw InvalidInput(std::string("minor: ") + what + " index out of range");
    if (seen[i]) throw InvalidInput(std::string("minor: duplicate ") + what + " index");
    seen[i] = true;
  }
}

i128 bareiss(std::vector<i128> m, std::size_t n) {
  auto at = [&](std::size_t i, std::size_t j) -> i128& { return m[i * n + j]; };
  i128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        i128 num = checked_sub(checked_mul(at(i, j), at(k, k)), checked_mul(at(i, k), at(k, j)));
        at(i, j) = num / prev;
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return sign > 0 ? at(n - 1, n - 1) : -at(n - 1, n - 1);
}

i128 small_det(const std::vector<i128>& m, std::size_t n) {
  switch (n) {
    case 1:
      return m[0];
    case 2:
      return checked_sub(checked_mul(m[0], m[3]), checked_mul(m[1], m[2]));
    case 3: {
      i128 a = checked_mul(m[0], checked_sub(checked_mul(m[4], m[8]), checked_mul(m[5], m[7])));
      i128 b = checked_mul(m[1], checked_sub(checked_mul(m[3], m[8]), checked_mul(m[5], m[6])));
      i128 c = checked_mul(m[2], checked_sub(checked_mul(m[3], m[7]), checked_mul(m[4], m[6])));
      return checked_add(checked_sub(a, b), c);
    }
    default:
      return bareiss(m, n);
  }
}

}  // namespace

HnfMatrix::HnfMatrix(IntMatrix inner) : inner_(std::move(inner)) {
  if (!satisfies_invariants(inner_)) throw InvalidInput("matrix is not in Hermite normal form: " + inner_.to_string());
}

bool HnfMatrix::satisfies_invariants(const IntMatrix& m) {
  if (!m.is_square()) return false;
  const std::size_t n = m.rows();
  for (std::size_t j = 0; j < n; ++j) {
    if (m(j, j) <= 0) return false;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > j && m(i, j) != 0) return false;
      if (i < j && (m(i, j) < 0 || m(i, j) >= m(j, j))) return false;
    }
  }
  return true;
}

std::vector<Entry> HnfMatrix::diagonal() const {
  std::vector<Entry> d(rank());
  for (std::size_t i = 0; i < rank(); ++i) d[i] = inner_(i, i);
  return d;
}

Entry HnfMatrix::determinant() const {
  Entry p = 1;
  for (std::size_t i = 0; i < rank(); ++i) p = checked_mul(p, inner_(i, i));
  return p;
}

Entry minor(const IntMatrix& a, std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) {
  if (row_idx.size() != col_idx.size() || row_idx.empty())
    throw InvalidInput("minor: index lists must be non-empty and of equal length");
  check_indices(row_idx, a.rows(), "row");
  check_indices(col_idx, a.cols(), "column");
  const std::size_t n = row_idx.size();
  std::vector<i128> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = a(row_idx[i], col_idx[j]);
  return narrow_to_i64(small_det(m, n));
}

Entry det_row_major(std::span<const Entry> m, std::size_t n) {
  if (m.size() != n * n || n == 0) throw InvalidInput("det_row_major: size mismatch");
  std::vector<i128> w(m.begin(), m.end());
  return narrow_to_i64(small_det(w, n));
}

Entry determinant(const IntMatrix& a) {
  if (!a.is_square()) throw InvalidInput("determinant: matrix is not square");
  std::vector<std::size_t> idx(a.rows());
  std::iota(idx.begin(), idx.end(), 0);
  return minor(a, idx, idx);
}

std::size_t rank(const IntMatrix& a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<i128> m(a.data().begin(), a.data().end());
  auto at = [&](std::size_t i, std::size_t j) -> i128& { return m[i * cols + j]; };
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && at(p, c) == 0) ++p;
    if (p == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(at(r, j), at(p, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (at(i, c) == 0) continue;
      i128 content = 0;
      for (std::size_t j = c + 1; j < cols; ++j) {
        at(i, j) = checked_sub(checked_mul(at(i, j), at(r, c)), checked_mul(at(i, c), at(r, j)));
        content = gcd128(content, at(i, j));
      }
      at(i, c) = 0;
      if (content > 1)
        for (std::size_t j = c + 1; j < cols; ++j) at(i, j) /= content;
    }
    ++r;
  }
  return r;
}

namespace {

// Row-reduces h to Hermite form. Each row operation E is mirrored as fwd <- E * fwd and
// inv <- inv * E^{-1} for whichever of the two is given.
void row_reduce(IntMatrix& h, IntMatrix* fwd, IntMatrix* inv) {
  const std::size_t n = h.rows();
  auto row_add = [&](std::size_t dst, std::size_t src, Entry q) {
    if (q == 0) return;
    h.add_row_multiple(dst, src, q);
    if (fwd) fwd->add_row_multiple(dst, src, q);
    if (inv) inv->add_col_multiple(src, dst, checked_sub(0, q));
  };
  auto row_swap = [&](std::size_t x, std::size_t y) {
    h.swap_rows(x, y);
    if (fwd) fwd->swap_rows(x, y);
    if (inv) inv->swap_cols(x, y);
  };

  for (std::size_t j = 0; j < n; ++j) {
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = j; i < n; ++i)
        if (h(i, j) != 0 && (!best || abs_i64(h(i, j)) < abs_i64(h(*best, j)))) best = i;
      if (!best) throw InvalidInput("hnf: matrix is singular");
      row_swap(j, *best);
      bool clean = true;
      for (std::size_t i = j + 1; i < n; ++i) {
        if (h(i, j) == 0) continue;
        row_add(i, j, checked_sub(0, floor_div(h(i, j), h(j, j))));
        if (h(i, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(j, j) < 0) {
      h.negate_row(j);
      if (fwd) fwd->negate_row(j);
      if (inv) inv->negate_col(j);
    }
    for (std::size_t i = 0; i < j; ++i) row_add(i, j, checked_sub(0, floor_div(h(i, j), h(j, j))));
  }
}

bool off_diagonal_zero(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && m(i, j) != 0) return false;
  return true;
}

// Extended gcd: returns g = gcd(a, b) > 0 with x a + y b = g.
Entry ext_gcd(Entry a, Entry b, Entry& x, Entry& y) {
  Entry old_r = a, r = b, old_x = 1, cx = 0, old_y = 0, cy = 1;
  while (r != 0) {
    const Entry q = old_r / r;
    old_r = checked_sub(old_r, checked_mul(q, r));
    std::swap(old_r, r);
    old_x = checked_sub(old_x, checked_mul(q, cx));
    std::swap(old_x, cx);
    old_y = checked_sub(old_y, checked_mul(q, cy));
    std::swap(old_y, cy);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_x = -old_x;
    old_y = -old_y;
  }
  x = old_x;
  y = old_y;
  return old_r;
}

// Replaces entries i < j of the diagonal s by gcd and lcm through
// L = [[x, y], [-b/g, a/g]] on rows and R = [[1, -y b/g], [1, x a/g]] on columns.
void gcd_lcm_step(IntMatrix& s, IntMatrix& p, IntMatrix& q, std::size_t i, std::size_t j) {
  const Entry a = s(i, i), b = s(j, j);
  Entry x = 0, y = 0;
  const Entry g = ext_gcd(a, b, x, y);
  const Entry bg = b / g, ag = a / g;
  const std::size_t n = s.rows();
  for (std::size_t c = 0; c < n; ++c) {
    const Entry pi = p(i, c), pj = p(j, c);
    p(i, c) = checked_add(checked_mul(x, pi), checked_mul(y, pj));
    p(j, c) = checked_add(checked_mul(-bg, pi), checked_mul(ag, pj));
  }
  const Entry r01 = checked_mul(-y, bg), r11 = checked_mul(x, ag);
  for (std::size_t rr = 0; rr < n; ++rr) {
    const Entry qi = q(rr, i), qj = q(rr, j);
    q(rr, i) = checked_add(qi, qj);
    q(rr, j) = checked_add(checked_mul(r01, qi), checked_mul(r11, qj));
  }
  s(i, i) = g;
  s(j, j) = checked_mul(ag, b);
}

}  // namespace

HnfDecomposition hnf(const IntMatrix& a) {
  if (!a.is_square()) throw InvalidInput("hnf: matrix is not square");
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  row_reduce(h, nullptr, &u);
  return {std::move(u), HnfMatrix(std::move(h))};
}

SnfDecomposition snf(const IntMatrix& a) {
  if (!a.is_square()) throw InvalidInput("snf: matrix is not square");
  const std::size_t n = a.rows();
  IntMatrix s = a;
  IntMatrix p = IntMatrix::identity(n);
  IntMatrix qt = IntMatrix::identity(n);
  // Alternate row and column Hermite reduction until diagonal.
  try {
    for (;;) {
      row_reduce(s, &p, nullptr);
      if (off_diagonal_zero(s)) break;
      s = s.transposed();
      row_reduce(s, &qt, nullptr);
      s = s.transposed();
      if (off_diagonal_zero(s)) break;
    }
  } catch (const InvalidInput&) {
    throw InvalidInput("snf: matrix is singular");
  }
  IntMatrix q = qt.transposed();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (s(j, j) % s(i, i) != 0) gcd_lcm_step(s, p, q, i, j);
  std::vector<Entry> alphas(n);
  for (std::size_t i = 0; i < n; ++i) alphas[i] = s(i, i);
  return {std::move(p), std::move(s), std::move(q), std::move(alphas)};
}

namespace {

template <class Visit>
void for_each_signed_permutation(const IntMatrix& a, Visit&& visit) {
  const std::size_t n = a.cols();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  IntMatrix m = a;
  do {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      for (std::size_t j = 0; j < n; ++j) {
        const Entry sgn = (mask >> j) & 1 ? -1 : 1;
        for (std::size_t i = 0; i < a.rows(); ++i) m(i, j) = sgn * a(i, perm[j]);
      }
      if (!visit(m)) return;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

bool equivalent(const IntMatrix& a1, const IntMatrix& a2) {
  if (a1.rows() != a2.rows() || a1.cols() != a2.cols()) throw InvalidInput("equivalent: shape mismatch");
  if (!a1.is_square()) throw InvalidInput("equivalent: decision procedure needs square matrices");
  const HnfMatrix target = hnf(a2).hnf;
  bool found = false;
  for_each_signed_permutation(a1, [&](const IntMatrix& m) {
    found = hnf(m).hnf == target;
    return !found;
  });
  return found;
}

HnfMatrix equivalence_key(const IntMatrix& a) {
  if (!a.is_square()) throw InvalidInput("equivalence_key: matrix is not square");
  std::optional<HnfMatrix> best;
  for_each_signed_permutation(a, [&](const IntMatrix& m) {
    HnfMatrix h = hnf(m).hnf;
    if (!best || h < *best) best = std::move(h);
    return true;
  });
  return *best;
}

}  // namespace gdelta
