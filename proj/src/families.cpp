#include "gdelta/families.hpp"

#include <numeric>
#include <vector>

#include "gdelta/errors.hpp"

namespace gdelta {

bool is_prime(Entry n) {
  if (n < 2) return false;
  for (Entry d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

IntMatrix construct_basic(Entry delta, std::size_t r) {
  if (delta < 1) throw InvalidInput("construct_basic: delta must be positive");
  if (r < 1) throw InvalidInput("construct_basic: r must be positive");
  IntMatrix m(r, r + 1);
  for (std::size_t i = 0; i < r; ++i) {
    m(i, i) = 1;
    m(i, r) = delta;
  }
  return m;
}

IntMatrix construct_f1(Entry delta) {
  if (delta < 1) throw InvalidInput("construct_f1: delta must be positive");
  std::vector<Column> cols{{1, 0}, {0, 1}};
  for (Entry k = 1; k <= delta; ++k) cols.push_back({1, k});
  return IntMatrix::from_columns(cols);
}

IntMatrix construct_f2(Entry delta) {
  if (delta < 3 || delta % 2 == 0) throw InvalidInput("construct_f2: delta must be odd and at least 3");
  auto cols = construct_f1(delta).columns();
  cols.push_back({2, delta});
  return IntMatrix::from_columns(cols);
}

bool f3_admissible(Entry delta) { return delta >= 4 && (delta % 12 == 2 || delta % 12 == 8); }

IntMatrix construct_f3(Entry delta) {
  if (!f3_admissible(delta)) throw InvalidInput("construct_f3: delta must be 12s+2 (s >= 1) or 12s+8");
  const Entry s = delta / 12;
  if (delta % 12 == 2) {
    const Entry a[] = {0, 4 * s + 1, 9 * s + 1};
    const Entry b[] = {7 * s + 1, 10 * s + 1, 12 * s + 2};
    return construct_M(a, b);
  }
  const Entry a[] = {0, 4 * s + 3, 9 * s + 7};
  const Entry b[] = {7 * s + 5, 10 * s + 7, 12 * s + 8};
  return construct_M(a, b);
}

IntMatrix construct_M(std::span<const Entry> a, std::span<const Entry> b) {
  if (a.size() != b.size()) throw InvalidInput("construct_M: a and b differ in length");
  std::vector<Column> cols{{0, 1}};
  for (std::size_t idx = 0; idx < a.size(); ++idx) {
    const Entry j = static_cast<Entry>(idx) + 1;
    if (a[idx] > b[idx]) throw InvalidInput("construct_M: a_j exceeds b_j");
    for (Entry k = a[idx]; k <= b[idx]; ++k)
      if (std::gcd(j, k) == 1) cols.push_back({j, k});
  }
  return IntMatrix::from_columns(cols);
}

Entry nu_30s24(int s) {
  static constexpr Entry kNu[] = {8, 6, 6, 6, 6, 4, 4, 4, 4, 2, 2, 2, 2};
  if (s < 0 || s > 12) throw InvalidInput("nu_30s24: s must lie in 0..12");
  return kNu[s];
}

IntMatrix construct_30s24(int s) {
  const Entry nu = nu_30s24(s);
  const Entry t = s;
  const Entry a[] = {0, 6 * t + 5, 12 * t + 10, 18 * t + 15, 25 * t + 21};
  const Entry b[] = {11 * t + 9, 16 * t + 13, 21 * t + 17, 26 * t + 13 + nu, 30 * t + 24};
  return construct_M(a, b);
}

IntMatrix construct_vandermonde(Entry p, std::size_t r) {
  if (!is_prime(p)) throw InvalidInput("construct_vandermonde: p must be prime");
  if (r < 2) throw InvalidInput("construct_vandermonde: r must be at least 2");
  if (p < static_cast<Entry>(r)) throw InvalidInput("construct_vandermonde: p must be at least r");
  IntMatrix m(r, static_cast<std::size_t>(p));
  for (Entry t = 1; t <= p; ++t) {
    Entry pw = 1;
    for (std::size_t i = 0; i < r; ++i) {
      m(i, static_cast<std::size_t>(t - 1)) = (i == 0) ? 1 : (pw % p == 0 ? p : pw % p);
      pw = (pw * t) % p;
    }
  }
  return m;
}

}  // namespace gdelta
