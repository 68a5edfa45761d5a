#include "gdelta/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "gdelta/checked.hpp"
#include "gdelta/cliquecore.hpp"
#include "gdelta/errors.hpp"
#include "gdelta/families.hpp"
#include "gdelta/hnfspace.hpp"
#include "gdelta/kernels/linear_form.hpp"
#include "gdelta/matrix_io.hpp"
#include "gdelta/modcert.hpp"
#include "gdelta/result_cache.hpp"

namespace gdelta {

namespace {

using Clock = std::chrono::steady_clock;

struct Job {
  std::optional<CliqueResult> result;
};

IntMatrix negated(const IntMatrix& m) {
  IntMatrix out = m;
  for (std::size_t j = 0; j < out.cols(); ++j) out.negate_col(j);
  return out;
}

// A * C / delta with the exact division asserted column by column.
IntMatrix scaled_image(const IntMatrix& a, const std::vector<Column>& cs, Entry delta) {
  std::vector<Column> out;
  for (const auto& v : cs) {
    Column w = a * std::span<const Entry>(v);
    for (auto& e : w) {
      if (e % delta != 0) throw VerificationFailure("A*C is not divisible by delta");
      e /= delta;
    }
    out.push_back(std::move(w));
  }
  return IntMatrix::from_columns(out);
}

void certify_or_throw(const IntMatrix& d, Entry delta, std::size_t r, bool generic, Entry value) {
  const CertReport rep = certify(d, delta);
  bool ok = rep.rank == r && rep.is_delta_modular && rep.columns_distinct && static_cast<Entry>(rep.columns) == value;
  if (generic) ok = ok && rep.is_generic;
  if (!ok) throw VerificationFailure("witness failed re-certification:\n" + rep.to_string());
}

ComputationResult run(Entry delta, std::size_t r, CandidateMode mode, const ComputeOptions& opts) {
  const auto t0 = Clock::now();
  if (delta < 1) throw InvalidInput("delta must be positive");
  if (r < 2) throw InvalidInput("rank must be at least 2");
  if (r > kernels::kMaxRank) throw InvalidInput("rank exceeds the supported maximum");
  const bool generic = mode == CandidateMode::generic;
  const bool negations = !generic && opts.allow_negations;

  const auto hnfs = enumerate_hnf({delta, r, HnfMode::op_reduced});
  std::size_t hint = 0;
  if (generic && opts.use_lower_bound_hint) hint = static_cast<std::size_t>(lower_bound(delta, r).lower_bound) - r;

  CliqueOptions copts;
  copts.node_cap = opts.node_cap;
  if (opts.time_limit) copts.deadline = t0 + *opts.time_limit;
  std::atomic<std::size_t> shared{hint};
  if (!opts.deterministic) copts.shared_bound = &shared;

  std::vector<Job> jobs(hnfs.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    try {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= hnfs.size() || stop.load()) return;
        const auto cands = build_candidates(hnfs[i], delta, mode, negations);
        const auto inst = make_instance(cands, delta, r, hint);
        CliqueResult res = r == 2 ? max_clique_graph(inst, copts) : max_hyperclique(inst, copts);
        if (!res.complete) stop.store(true);
        std::size_t seen = shared.load();
        while (res.size > seen && !shared.compare_exchange_weak(seen, res.size)) {
        }
        jobs[i].result = std::move(res);
      }
    } catch (...) {
      std::lock_guard lock(failure_mu);
      if (!failure) failure = std::current_exception();
      stop.store(true);
    }
  };
  unsigned nthreads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  nthreads = static_cast<unsigned>(std::min<std::size_t>(nthreads, std::max<std::size_t>(1, hnfs.size())));
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  ComputationResult out;
  out.delta = delta;
  out.r = r;
  out.mode = mode;
  out.allow_negations = negations;
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (!jobs[i].result) {
      out.complete = false;
      continue;
    }
    const auto& res = *jobs[i].result;
    ++out.hnfs_processed;
    out.nodes += res.nodes;
    out.complete = out.complete && res.complete;
    if (res.size > 0 && (!best || res.size > jobs[*best].result->size)) best = i;
  }

  if (!best) {
    if (out.complete) throw VerificationFailure("no clique reaches the construction lower bound");
    // Nothing found before the cap: basic construction, marked incomplete.
    out.witness = construct_basic(delta, r);
    out.value = static_cast<Entry>(r) + 1;
    certify_or_throw(out.witness, delta, r, generic, out.value);
  } else {
    const HnfMatrix& a = hnfs[*best];
    const auto& res = *jobs[*best].result;
    const auto cands = build_candidates(a, delta, mode, negations);
    std::vector<Column> cs;
    for (std::size_t m : res.members) cs.push_back(cands.columns.at(m));
    const IntMatrix ac = scaled_image(a.matrix(), cs, delta);
    IntMatrix d = a.matrix().hconcat(ac);
    out.clique_size = res.size;
    out.value = static_cast<Entry>(r + res.size);
    if (!generic && !negations) {
      d = d.hconcat(negated(d)).hconcat(IntMatrix(r, 1));
      out.value = 2 * out.value + 1;
    }
    out.witness = std::move(d);
    out.source_hnf = a;
    out.source_index = *best;
    certify_or_throw(out.witness, delta, r, generic, out.value);
  }
  out.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
  return out;
}

}  // namespace

ComputationResult compute_g(Entry delta, std::size_t r, const ComputeOptions& opts) {
  return run(delta, r, CandidateMode::generic, opts);
}

ComputationResult compute_h(Entry delta, std::size_t r, const ComputeOptions& opts) {
  return run(delta, r, CandidateMode::non_generic, opts);
}

ComputationResult compute(Entry delta, std::size_t r, CandidateMode mode, const ComputeOptions& opts) {
  return run(delta, r, mode, opts);
}

ComputationResult oracle_g(Entry delta, std::size_t r) {
  if (r != 2) throw InvalidInput("oracle_g: only r = 2 is supported");
  if (delta < 1 || delta > 3) throw InvalidInput("oracle_g: delta must lie in 1..3");
  const auto t0 = Clock::now();
  std::vector<Column> universe;
  for (Entry a = -delta; a <= delta; ++a)
    for (Entry b = -delta; b <= delta; ++b)
      if (a > 0 || (a == 0 && b > 0)) universe.push_back({a, b});
  const std::size_t n = universe.size();
  std::vector<std::vector<Entry>> det(n, std::vector<Entry>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      det[i][j] = abs_i64(universe[i][0] * universe[j][1] - universe[i][1] * universe[j][0]);

  std::vector<std::size_t> cur, best;
  auto dfs = [&](auto&& self, std::size_t start, bool attained) -> void {
    if (attained && cur.size() > best.size()) best = cur;
    if (cur.size() + (n - start) <= best.size()) return;
    for (std::size_t i = start; i < n; ++i) {
      bool ok = true;
      bool hit = attained;
      for (std::size_t j : cur) {
        const Entry d = det[i][j];
        if (d == 0 || d > delta) {
          ok = false;
          break;
        }
        hit = hit || d == delta;
      }
      if (!ok) continue;
      cur.push_back(i);
      self(self, i + 1, hit);
      cur.pop_back();
    }
  };
  dfs(dfs, 0, false);

  std::vector<Column> cols;
  for (std::size_t i : best) cols.push_back(universe[i]);
  ComputationResult out;
  out.delta = delta;
  out.r = r;
  out.witness = IntMatrix::from_columns(cols);
  out.value = static_cast<Entry>(best.size());
  out.clique_size = best.size() - r;
  certify_or_throw(out.witness, delta, r, true, out.value);
  out.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
  return out;
}

std::string mode_name(CandidateMode mode) { return mode == CandidateMode::generic ? "generic" : "nongeneric"; }

CandidateMode parse_mode(const std::string& text) {
  if (text == "generic") return CandidateMode::generic;
  if (text == "nongeneric" || text == "non-generic") return CandidateMode::non_generic;
  throw InvalidInput("unknown mode '" + text + "'");
}

std::string csv_header() { return "delta,rank,mode,value,lower_bound,upper_linear,upper_sublinear,excess,witness,elapsed_ms"; }

std::string csv_row(const ComputationResult& res, const BoundReport& b) {
  const bool generic = res.mode == CandidateMode::generic;
  std::ostringstream os;
  os << res.delta << ',' << res.r << ',' << mode_name(res.mode) << ',' << res.value << ',';
  if (generic) os << b.lower_bound;
  os << ',';
  if (generic) os << b.upper_linear;
  os << ',';
  if (generic && b.upper_sublinear) os << *b.upper_sublinear;
  os << ',';
  if (generic && res.r == 2) os << res.value - (res.delta + 2);
  os << ",\"" << format_witness(res.witness) << "\"," << res.elapsed.count();
  return os.str();
}

void compute_table(const std::vector<std::size_t>& ranks, Entry delta_max, CandidateMode mode, std::ostream& out,
                   const ComputeOptions& opts, ResultCache* cache) {
  std::vector<std::size_t> sorted = ranks;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  out << csv_header() << '\n' << std::flush;
  const bool negations = mode == CandidateMode::non_generic && opts.allow_negations;
  for (std::size_t r : sorted) {
    for (Entry delta = 2; delta <= delta_max; ++delta) {
      std::optional<ComputationResult> res;
      if (cache) res = cache->get(delta, r, mode, negations);
      if (!res) {
        res = compute(delta, r, mode, opts);
        if (!res->complete)
          throw ResourceCapExceeded("search incomplete at delta=" + std::to_string(delta) + " rank=" + std::to_string(r) +
                                    " (value >= " + std::to_string(res->value) + ")");
        if (cache) cache->put(*res);
      }
      out << csv_row(*res, bounds(delta, r)) << '\n' << std::flush;
    }
  }
}

}  // namespace gdelta
