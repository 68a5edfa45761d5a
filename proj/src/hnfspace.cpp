#include "gdelta/hnfspace.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gdelta/checked.hpp"
#include "gdelta/errors.hpp"

namespace gdelta {

namespace {

void ordered_factorizations(Entry remaining, std::size_t slots, Entry min_factor, bool sorted,
                            std::vector<Entry>& prefix, std::vector<std::vector<Entry>>& out) {
  if (slots == 1) {
    if (!sorted || remaining >= min_factor) {
      prefix.push_back(remaining);
      out.push_back(prefix);
      prefix.pop_back();
    }
    return;
  }
  for (Entry d = sorted ? min_factor : 1; d <= remaining; ++d) {
    if (remaining % d != 0) continue;
    prefix.push_back(d);
    ordered_factorizations(remaining / d, slots - 1, d, sorted, prefix, out);
    prefix.pop_back();
  }
}

bool is_unit_then_delta(const std::vector<Entry>& diag) {
  return std::all_of(diag.begin(), diag.end() - 1, [](Entry d) { return d == 1; });
}

}  // namespace

HnfStream::HnfStream(HnfEnumConfig cfg) : cfg_(cfg) {
  if (cfg_.delta < 1) throw InvalidInput("HnfStream: delta must be >= 1");
  if (cfg_.rank < 1) throw InvalidInput("HnfStream: rank must be >= 1");
  std::vector<Entry> prefix;
  ordered_factorizations(cfg_.delta, cfg_.rank, 1, cfg_.mode == HnfMode::op_reduced, prefix, diagonals_);
}

bool HnfStream::load_diagonal() {
  if (diag_pos_ >= diagonals_.size()) return false;
  const auto& d = diagonals_[diag_pos_];
  const std::size_t r = cfg_.rank;
  const bool op = cfg_.mode == HnfMode::op_reduced;
  slots_.clear();
  choices_.clear();
  last_column_mode_ = op && r >= 2 && is_unit_then_delta(d);
  if (last_column_mode_) {
    for (std::size_t i = 0; i + 1 < r; ++i) slots_.emplace_back(i, r - 1);
  } else {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j) {
        std::vector<Entry> vals;
        for (Entry v = 0; v < d[j]; ++v)
          if (!op || j != i + 1 || std::gcd(v, d[j]) >= d[i]) vals.push_back(v);
        slots_.emplace_back(i, j);
        choices_.push_back(std::move(vals));
      }
  }
  counter_.assign(slots_.size(), 0);
  return true;
}

bool HnfStream::advance_filling() {
  if (last_column_mode_) {
    const std::size_t cap = static_cast<std::size_t>(cfg_.delta / 2);
    std::size_t p = counter_.size();
    while (p > 0 && counter_[p - 1] == cap) --p;
    if (p == 0) return false;
    std::size_t v = ++counter_[p - 1];
    for (std::size_t k = p; k < counter_.size(); ++k) counter_[k] = v;
    return true;
  }
  std::size_t p = counter_.size();
  while (p > 0) {
    if (++counter_[p - 1] < choices_[p - 1].size()) return true;
    counter_[p - 1] = 0;
    --p;
  }
  return false;
}

IntMatrix HnfStream::current() const {
  const auto& d = diagonals_[diag_pos_];
  IntMatrix m(cfg_.rank, cfg_.rank);
  for (std::size_t i = 0; i < cfg_.rank; ++i) m(i, i) = d[i];
  for (std::size_t s = 0; s < slots_.size(); ++s) {
    const auto [i, j] = slots_[s];
    m(i, j) = last_column_mode_ ? static_cast<Entry>(counter_[s]) : choices_[s][counter_[s]];
  }
  return m;
}

std::optional<HnfMatrix> HnfStream::next() {
  if (!pending_) {
    if (!load_diagonal()) return std::nullopt;
    pending_ = true;
  }
  HnfMatrix out(current());
  if (!advance_filling()) {
    pending_ = false;
    ++diag_pos_;
  }
  return out;
}

std::vector<HnfMatrix> enumerate_hnf(const HnfEnumConfig& cfg) {
  HnfStream stream(cfg);
  std::vector<HnfMatrix> out;
  while (auto h = stream.next()) out.push_back(std::move(*h));
  return out;
}

std::vector<std::pair<Entry, int>> factorize(Entry n) {
  if (n < 1) throw InvalidInput("factorize: argument must be positive");
  std::vector<std::pair<Entry, int>> out;
  for (Entry p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t count_hnf_closed_form(Entry delta, std::size_t r) {
  if (delta < 1 || r < 1) throw InvalidInput("count_hnf_closed_form: delta and r must be positive");
  auto ipow = [](i128 b, std::size_t e) {
    i128 acc = 1;
    for (std::size_t k = 0; k < e; ++k) acc = checked_mul(acc, b);
    return acc;
  };
  i128 total = 1;
  for (const auto& [p, e] : factorize(delta)) {
    i128 num = 1, den = 1;
    for (int j = 1; j <= e; ++j) {
      num = checked_mul(num, ipow(p, static_cast<std::size_t>(j) + r - 1) - 1);
      den = checked_mul(den, ipow(p, static_cast<std::size_t>(j)) - 1);
    }
    if (num % den != 0) throw VerificationFailure("count_hnf_closed_form: inexact division");
    total = checked_mul(total, num / den);
  }
  if (total > static_cast<i128>(UINT64_MAX)) throw OverflowError("count_hnf_closed_form: result exceeds 64 bits");
  return static_cast<std::uint64_t>(total);
}

HnfMatrix reduce_op1(const HnfMatrix& a) {
  HnfMatrix cur = a;
  const std::size_t r = a.rank();
  for (;;) {
    std::optional<std::size_t> bad;
    for (std::size_t i = 0; i + 1 < r && !bad; ++i)
      if (cur(i, i) > std::gcd(cur(i, i + 1), cur(i + 1, i + 1))) bad = i;
    if (!bad) return cur;
    // Column swap and re-normalization puts gcd(b, a_{i+1}) at (i, i).
    IntMatrix m = cur.matrix();
    m.swap_cols(*bad, *bad + 1);
    cur = hnf(m).hnf;
  }
}

HnfMatrix reduce_op2(const HnfMatrix& a) {
  const auto diag = a.diagonal();
  if (a.rank() < 2 || !is_unit_then_delta(diag)) throw InvalidInput("reduce_op2: diagonal must be (1,...,1,delta)");
  const std::size_t r = a.rank();
  const Entry delta = diag.back();
  std::vector<Entry> v(r - 1);
  for (std::size_t i = 0; i + 1 < r; ++i) v[i] = 2 * a(i, r - 1) > delta ? delta - a(i, r - 1) : a(i, r - 1);
  std::sort(v.begin(), v.end());
  IntMatrix m = IntMatrix::identity(r);
  m(r - 1, r - 1) = delta;
  for (std::size_t i = 0; i + 1 < r; ++i) m(i, r - 1) = v[i];
  return HnfMatrix(std::move(m));
}

HnfMatrix reduce_ops(const HnfMatrix& a) {
  HnfMatrix h = reduce_op1(a);
  if (h.rank() >= 2 && is_unit_then_delta(h.diagonal())) h = reduce_op2(h);
  return h;
}

bool satisfies_op_constraints(const HnfMatrix& a) {
  const std::size_t r = a.rank();
  for (std::size_t i = 0; i + 1 < r; ++i) {
    if (a(i, i) > a(i + 1, i + 1)) return false;
    if (a(i, i) > std::gcd(a(i, i + 1), a(i + 1, i + 1))) return false;
  }
  const auto diag = a.diagonal();
  if (r >= 2 && is_unit_then_delta(diag)) {
    const Entry delta = diag.back();
    for (std::size_t i = 0; i + 1 < r; ++i) {
      if (2 * a(i, r - 1) > delta) return false;
      if (i > 0 && a(i - 1, r - 1) > a(i, r - 1)) return false;
    }
  }
  return true;
}

std::size_t count_classes(const std::vector<HnfMatrix>& list) {
  std::set<HnfMatrix> keys;
  for (const auto& h : list) keys.insert(equivalence_key(h.matrix()));
  return keys.size();
}

std::size_t count_inequivalent(Entry delta, std::size_t r, std::size_t list_cap) {
  HnfStream stream({delta, r, HnfMode::op_reduced});
  std::vector<HnfMatrix> list;
  while (auto h = stream.next()) {
    if (list.size() >= list_cap) throw ResourceCapExceeded("count_inequivalent: op-reduced list exceeds cap");
    list.push_back(std::move(*h));
  }
  return count_classes(list);
}

}  // namespace gdelta
