#include "gdelta/cliquecore.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "gdelta/checked.hpp"
#include "gdelta/combinations.hpp"
#include "gdelta/errors.hpp"
#include "gdelta/kernels/linear_form.hpp"
#include "gdelta/modcert.hpp"

namespace gdelta {

PairGraph::PairGraph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

void PairGraph::connect(std::size_t i, std::size_t j) {
  bits_[i * words_ + (j >> 6)] |= std::uint64_t{1} << (j & 63);
  bits_[j * words_ + (i >> 6)] |= std::uint64_t{1} << (i & 63);
}

std::size_t PairGraph::degree(std::size_t i) const {
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += static_cast<std::size_t>(std::popcount(row(i)[w]));
  return d;
}

bool pair_compatible(const Column& a, const Column& b, Entry delta, CandidateMode mode) {
  if (a.size() != b.size()) throw InvalidInput("pair_compatible: column lengths differ");
  if (a == b) return false;
  const i128 bound = static_cast<i128>(delta) * delta;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const i128 d = static_cast<i128>(a[i]) * b[j] - static_cast<i128>(a[j]) * b[i];
      if (d > bound || -d > bound) return false;
      if (mode == CandidateMode::generic && d == 0) return false;
    }
  return true;
}

CliqueInstance make_instance(const CandidateColumns& cands, Entry delta, std::size_t r, std::size_t lower_bound) {
  if (delta < 1) throw InvalidInput("make_instance: delta must be positive");
  if (r < 1 || r > kernels::kMaxRank) throw InvalidInput("make_instance: rank out of supported range");
  CliqueInstance inst;
  inst.columns = cands.columns;
  inst.delta = delta;
  inst.r = r;
  inst.mode = cands.mode;
  inst.lower_bound = lower_bound;
  for (const auto& c : inst.columns) {
    if (c.size() != r) throw InvalidInput("make_instance: column length differs from r");
    for (Entry e : c) {
      if (abs_i64(e) > delta) throw InvalidInput("make_instance: entry exceeds delta");
      if (e == 0 && cands.mode == CandidateMode::generic) throw InvalidInput("make_instance: zero entry in generic mode");
    }
  }
  const std::size_t n = inst.columns.size();
  inst.adjacency = PairGraph(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (pair_compatible(inst.columns[i], inst.columns[j], delta, inst.mode)) inst.adjacency.connect(i, j);
  return inst;
}

bool is_hyperedge(const CliqueInstance& inst, std::span<const std::size_t> idx) {
  if (idx.empty()) return false;
  std::vector<Column> cols;
  for (std::size_t i : idx) cols.push_back(inst.columns.at(i));
  const IntMatrix m = IntMatrix::from_columns(cols);
  if (!is_delta_bound(m, inst.delta)) return false;
  if (inst.mode == CandidateMode::generic) return is_totally_generic(m);
  return columns_distinct(m);
}

namespace {

using Clock = std::chrono::steady_clock;

class Search {
 public:
  Search(const CliqueInstance& inst, std::size_t k, const CliqueOptions& opts) : inst_(inst), k_(k), opts_(opts) {
    n_ = inst.columns.size();
    words_ = (n_ + 63) / 64;
    // Relabel by descending pair degree, ties by candidate index.
    std::vector<std::size_t> deg(n_);
    for (std::size_t i = 0; i < n_; ++i) deg[i] = inst.adjacency.degree(i);
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });
    adj_.assign(n_ * words_, 0);
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b)
        if (inst.adjacency.adjacent(order_[a], order_[b])) adj_[a * words_ + (b >> 6)] |= std::uint64_t{1} << (b & 63);
    coords_.resize(n_ * inst.r);
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t i = 0; i < inst.r; ++i) coords_[a * inst.r + i] = static_cast<std::int32_t>(inst.columns[order_[a]][i]);
    delta_pow_.assign(inst.r + 1, 1);
    for (std::size_t m = 1; m <= inst.r; ++m) {
      i128 p = static_cast<i128>(delta_pow_[m - 1]) * inst.delta;
      delta_pow_[m] = p > INT64_MAX ? INT64_MAX : static_cast<Entry>(p);
    }
    need_ = std::max<std::size_t>(1, inst.lower_bound);
  }

  CliqueResult run() {
    const auto t0 = Clock::now();
    levels_.resize(n_ + 2);
    for (auto& l : levels_) {
      l.p.resize(words_);
      l.u.resize(words_);
      l.q.resize(words_);
      l.block.rank = inst_.r;
      l.block.max_abs_coord = static_cast<std::int32_t>(inst_.delta);
    }
    for (std::size_t v = 0; v < n_; ++v) levels_[0].p[v >> 6] |= std::uint64_t{1} << (v & 63);
    if (n_ > 0) expand(0);
    CliqueResult res;
    res.nodes = nodes_;
    res.complete = !aborted_;
    if (!best_.empty()) {
      res.size = best_.size();
      for (std::size_t v : best_) res.members.push_back(order_[v]);
      std::sort(res.members.begin(), res.members.end());
    }
    res.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0);
    return res;
  }

 private:
  struct Level {
    std::vector<std::uint64_t> p, u, q;
    std::vector<std::pair<std::size_t, std::size_t>> colored;
    kernels::CandidateBlock block;
  };

  bool out_of_budget() {
    if (aborted_) return true;
    if (nodes_ > opts_.node_cap) aborted_ = true;
    if ((nodes_ & 1023u) == 0 && opts_.deadline && Clock::now() > *opts_.deadline) aborted_ = true;
    return aborted_;
  }

  void refresh_need() {
    if (opts_.shared_bound) need_ = std::max(need_, opts_.shared_bound->load(std::memory_order_relaxed));
  }

  void record() {
    if (clique_.size() >= need_ && clique_.size() > best_.size()) {
      best_ = clique_;
      need_ = std::max(need_, best_.size() + 1);
    }
  }

  // Greedy sequential coloring of p; colored lists (vertex, color) in color order.
  void color_sort(Level& lv) {
    lv.colored.clear();
    std::copy(lv.p.begin(), lv.p.end(), lv.u.begin());
    std::size_t color = 0;
    for (;;) {
      bool any = false;
      for (std::size_t w = 0; w < words_ && !any; ++w) any = lv.u[w] != 0;
      if (!any) return;
      ++color;
      std::copy(lv.u.begin(), lv.u.end(), lv.q.begin());
      for (std::size_t w = 0; w < words_; ++w) {
        while (lv.q[w]) {
          const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(lv.q[w]));
          lv.q[w] &= lv.q[w] - 1;
          lv.u[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
          const std::uint64_t* nv = adj_.data() + v * words_;
          for (std::size_t x = w; x < words_; ++x) lv.q[x] &= ~nv[x];
          lv.colored.emplace_back(v, color);
        }
      }
    }
  }

  // Linear forms for all subsets of the clique that contain its newest member and have size
  // 2..k-1: adding w to such a subset T gives an (|T|+1)-column set whose minors on each row set
  // R of size |T|+1 are linear in w (expansion along w's column).
  void build_forms(std::vector<kernels::LinearForm>& forms) {
    forms.clear();
    const std::size_t s = clique_.size();
    const std::size_t r = inst_.r;
    const std::size_t newest = clique_.back();
    std::vector<Entry> buf;
    std::vector<std::size_t> tcols;
    for (std::size_t t = 1; t + 2 <= k_ && t + 1 <= s; ++t) {
      const std::size_t m = t + 2;
      if (m > r) break;
      for_each_combination(s - 1, t, [&](const std::vector<std::size_t>& pick) {
        tcols.clear();
        for (std::size_t i : pick) tcols.push_back(clique_[i]);
        tcols.push_back(newest);
        for_each_combination(r, m, [&](const std::vector<std::size_t>& rows) {
          kernels::LinearForm f;
          f.bound = delta_pow_[m];
          f.nonzero = inst_.mode == CandidateMode::generic;
          bool all_zero = true;
          const std::size_t sub = m - 1;
          buf.resize(sub * sub);
          for (std::size_t j = 0; j < m; ++j) {
            std::size_t rr = 0;
            for (std::size_t q = 0; q < m; ++q) {
              if (q == j) continue;
              for (std::size_t c = 0; c < sub; ++c) buf[rr * sub + c] = coords_[tcols[c] * r + rows[q]];
              ++rr;
            }
            Entry d = det_row_major(buf, sub);
            if ((j + m - 1) % 2) d = -d;
            f.coef[rows[j]] = d;
            all_zero = all_zero && d == 0;
          }
          if (all_zero && !f.nonzero) return true;
          forms.push_back(f);
          return true;
        });
        return true;
      });
    }
  }

  // levels_[depth].p holds the candidate set; it is consumed.
  void expand(std::size_t depth) {
    ++nodes_;
    if (out_of_budget()) return;
    refresh_need();
    Level& lv = levels_[depth];
    Level& child = levels_[depth + 1];
    color_sort(lv);
    for (std::size_t idx = lv.colored.size(); idx-- > 0;) {
      const auto [v, color] = lv.colored[idx];
      if (clique_.size() + color < need_) return;
      clique_.push_back(v);
      record();
      const std::uint64_t* nv = adj_.data() + v * words_;
      bool any = false;
      for (std::size_t w = 0; w < words_; ++w) {
        child.p[w] = lv.p[w] & nv[w];
        any = any || child.p[w];
      }
      if (any && k_ >= 3 && clique_.size() >= 2) any = apply_forms(child);
      if (any) expand(depth + 1);
      clique_.pop_back();
      if (aborted_) return;
      lv.p[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
  }

  bool apply_forms(Level& child) {
    build_forms(forms_);
    if (forms_.empty()) return true;
    auto& blk = child.block;
    blk.clear();
    const std::size_t r = inst_.r;
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = child.p[w];
      while (bits) {
        const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        blk.push(static_cast<std::int32_t>(v), coords_.data() + v * r);
      }
    }
    for (const auto& f : forms_)
      if (kernels::filter_inplace(f, blk) == 0) break;
    std::fill(child.p.begin(), child.p.end(), 0);
    for (std::int32_t v : blk.id) child.p[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    return blk.size() > 0;
  }

  const CliqueInstance& inst_;
  std::size_t k_;
  CliqueOptions opts_;
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::size_t> order_;
  std::vector<std::uint64_t> adj_;
  std::vector<std::int32_t> coords_;
  std::vector<Entry> delta_pow_;
  std::vector<Level> levels_;
  std::vector<kernels::LinearForm> forms_;
  std::vector<std::size_t> clique_;
  std::vector<std::size_t> best_;
  std::size_t need_ = 1;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

CliqueResult max_clique_graph(const CliqueInstance& inst, const CliqueOptions& opts) {
  if (inst.r != 2) throw InvalidInput("max_clique_graph: requires r = 2");
  return Search(inst, 2, opts).run();
}

CliqueResult max_hyperclique(const CliqueInstance& inst, std::size_t k, const CliqueOptions& opts) {
  if (k < 2 || k > inst.r) throw InvalidInput("max_hyperclique: k must lie in [2, r]");
  return Search(inst, k, opts).run();
}

CliqueResult max_hyperclique(const CliqueInstance& inst, const CliqueOptions& opts) {
  if (inst.r < 3) throw InvalidInput("max_hyperclique: requires r >= 3");
  return max_hyperclique(inst, inst.r, opts);
}

}  // namespace gdelta
