#include "gdelta/modsolve.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gdelta/checked.hpp"
#include "gdelta/errors.hpp"

namespace gdelta {

namespace {

bool first_nonzero_positive(const Column& v) {
  for (Entry e : v)
    if (e != 0) return e > 0;
  return false;
}

Column negated(Column v) {
  for (auto& e : v) e = -e;
  return v;
}

// Cartesian product of per-entry option lists, first entry most significant.
std::vector<Column> expand(const std::vector<std::vector<Entry>>& options) {
  std::vector<Column> out;
  Column cur(options.size());
  std::vector<std::size_t> pos(options.size(), 0);
  for (;;) {
    for (std::size_t i = 0; i < options.size(); ++i) cur[i] = options[i][pos[i]];
    out.push_back(cur);
    std::size_t p = options.size();
    while (p > 0) {
      if (++pos[p - 1] < options[p - 1].size()) break;
      pos[p - 1] = 0;
      --p;
    }
    if (p == 0) return out;
  }
}

std::vector<Column> lift_all_signs(const Column& x, Entry delta, bool zero_option) {
  std::vector<std::vector<Entry>> options;
  for (Entry k : x) {
    if (k < 0 || k >= delta) throw InvalidInput("lift_representatives: residue entry out of range");
    if (k != 0)
      options.push_back({k, k - delta});
    else if (zero_option)
      options.push_back({0, delta, -delta});
    else
      options.push_back({delta, -delta});
  }
  return expand(options);
}

}  // namespace

ResidueSolutionSet solve_mod(const HnfMatrix& a, Entry delta) {
  if (delta < 1) throw InvalidInput("solve_mod: delta must be positive");
  if (a.determinant() != delta) throw InvalidInput("solve_mod: det A differs from delta");
  const std::size_t r = a.rank();
  const SnfDecomposition s = snf(a.matrix());

  // y_i ranges over multiples of delta / alpha_i; x = Q y mod delta.
  std::vector<std::vector<Entry>> ys(r);
  for (std::size_t i = 0; i < r; ++i) {
    const Entry alpha = s.alphas[i];
    if (alpha <= 0 || delta % alpha != 0) throw VerificationFailure("solve_mod: elementary divisor does not divide delta");
    for (Entry m = 0; m < alpha; ++m) ys[i].push_back(m * (delta / alpha));
  }
  ResidueSolutionSet out{delta, r, {}};
  for (const auto& y : expand(ys)) {
    Column x(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
      i128 acc = 0;
      for (std::size_t j = 0; j < r; ++j) acc = checked_add(acc, checked_mul(static_cast<i128>(s.right(i, j)), static_cast<i128>(y[j])));
      x[i] = narrow_to_i64(((acc % delta) + delta) % delta);
    }
    out.solutions.push_back(std::move(x));
  }
  std::sort(out.solutions.begin(), out.solutions.end());
  if (std::adjacent_find(out.solutions.begin(), out.solutions.end()) != out.solutions.end())
    throw VerificationFailure("solve_mod: duplicate residue solution");
  return out;
}

std::vector<Column> lift_representatives(const Column& x, Entry delta, CandidateMode mode) {
  if (delta < 1) throw InvalidInput("lift_representatives: delta must be positive");
  if (x.empty()) throw InvalidInput("lift_representatives: empty vector");
  std::vector<Column> out;
  if (mode == CandidateMode::generic) {
    for (auto& v : lift_all_signs(x, delta, false))
      if (v[0] > 0) out.push_back(std::move(v));
  } else {
    for (auto& v : lift_all_signs(x, delta, true)) {
      if (std::all_of(v.begin(), v.end(), [](Entry e) { return e == 0; })) continue;
      out.push_back(first_nonzero_positive(v) ? std::move(v) : negated(std::move(v)));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CandidateColumns prune_parallel(const CandidateColumns& cands) {
  if (cands.mode != CandidateMode::generic) throw InvalidInput("prune_parallel: only defined in generic mode");
  // Keep the shortest multiple per primitive direction.
  std::map<Column, Column> shortest;
  for (const auto& v : cands.columns) {
    Entry g = 0;
    for (Entry e : v) g = std::gcd(g, e);
    if (g == 0) throw InvalidInput("prune_parallel: zero column");
    Column dir = v;
    for (auto& e : dir) e /= g;
    if (!first_nonzero_positive(dir)) dir = negated(std::move(dir));
    auto [it, inserted] = shortest.emplace(dir, v);
    if (!inserted && abs_i64(v[0]) < abs_i64(it->second[0])) it->second = v;
  }
  CandidateColumns out{{}, cands.mode};
  for (auto& [dir, v] : shortest) out.columns.push_back(v);
  std::sort(out.columns.begin(), out.columns.end());
  return out;
}

CandidateColumns build_candidates(const HnfMatrix& a, Entry delta, CandidateMode mode, bool allow_negations) {
  const std::size_t r = a.rank();
  const auto sols = solve_mod(a, delta);
  CandidateColumns out{{}, mode};
  for (const auto& x : sols.solutions)
    for (auto& v : lift_representatives(x, delta, mode)) out.columns.push_back(std::move(v));
  if (mode == CandidateMode::generic) return prune_parallel(out);

  auto is_delta_unit = [&](const Column& v) {
    std::size_t nz = 0;
    bool hit = false;
    for (Entry e : v) {
      if (e != 0) ++nz;
      if (e == delta) hit = true;
    }
    return nz == 1 && hit;
  };
  std::vector<Column> kept;
  for (auto& v : out.columns) {
    if (allow_negations) {
      Column neg = negated(v);
      if (!is_delta_unit(neg)) kept.push_back(std::move(neg));
    }
    if (!is_delta_unit(v)) kept.push_back(std::move(v));
  }
  if (allow_negations) kept.emplace_back(r, 0);
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  out.columns = std::move(kept);
  return out;
}

}  // namespace gdelta
