#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "brute_force.hpp"
#include "gdelta/boundscalc.hpp"
#include "gdelta/checked.hpp"
#include "gdelta/errors.hpp"
#include "gdelta/exactmat.hpp"
#include "gdelta/hnfspace.hpp"
#include "gdelta/matrix_io.hpp"
#include "gdelta/modcert.hpp"
#include "gdelta/modsolve.hpp"
#include "gdelta/pipeline.hpp"
#include "test_support.hpp"

using namespace gdelta;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    out_.pass = false;
    if (!out_.detail.empty()) out_.detail += "; ";
    out_.detail += what;
  }
  template <class T>
  void equal(const T& got, const T& want, const std::string& what) {
    std::ostringstream os;
    os << what << ": got " << got << ", expected " << want;
    expect(got == want, os.str());
  }
  Outcome take() { return std::move(out_); }

 private:
  Outcome out_;
};

std::vector<ComputationResult>& computed() {
  static std::vector<ComputationResult> all;
  return all;
}

ComputationResult g_of(Entry delta, std::size_t r) {
  auto res = compute_g(delta, r);
  computed().push_back(res);
  return res;
}

ComputationResult h_of(Entry delta, std::size_t r, const ComputeOptions& opts = {}) {
  auto res = compute_h(delta, r, opts);
  computed().push_back(res);
  return res;
}

void check_g(Checker& c, Entry delta, std::size_t r, Entry want) {
  const auto res = g_of(delta, r);
  c.expect(res.complete, "g(" + std::to_string(delta) + "," + std::to_string(r) + ") incomplete");
  c.equal(res.value, want, "g(" + std::to_string(delta) + "," + std::to_string(r) + ")");
}

Outcome criterion1() {
  Checker c;
  for (auto [delta, want] : {std::pair<Entry, Entry>{7, 10}, {13, 16}, {19, 23}, {23, 27}, {24, 30}, {25, 30}})
    check_g(c, delta, 2, want);
  return c.take();
}

Outcome criterion2() {
  Checker c;
  for (auto [delta, want] : {std::pair<Entry, Entry>{2, 4}, {4, 6}, {3, 6}, {5, 8}, {8, 12}, {14, 18}}) check_g(c, delta, 2, want);
  return c.take();
}

Outcome criterion3() {
  Checker c;
  const Entry r3[] = {4, 6, 6, 8, 8, 8, 8, 12, 10};
  for (Entry delta = 2; delta <= 10; ++delta) check_g(c, delta, 3, r3[delta - 2]);
  check_g(c, 2, 4, 5);
  check_g(c, 3, 4, 6);
  check_g(c, 2, 5, 6);
  check_g(c, 5, 5, 8);
  return c.take();
}

Outcome criterion4() {
  Checker c;
  const auto a = g_of(9, 3);
  const auto b = g_of(10, 3);
  c.equal(a.value, Entry{12}, "g(9,3)");
  c.equal(b.value, Entry{10}, "g(10,3)");
  c.expect(a.value > b.value, "g(9,3) > g(10,3)");
  return c.take();
}

Outcome criterion5() {
  Checker c;
  for (Entry delta = 1; delta <= 30; ++delta)
    for (std::size_t r = 1; r <= 4; ++r) {
      std::uint64_t n = 0;
      HnfStream stream({delta, r, HnfMode::all});
      while (stream.next()) ++n;
      const std::uint64_t closed = count_hnf_closed_form(delta, r);
      if (n != closed)
        c.expect(false, "count mismatch at delta=" + std::to_string(delta) + " r=" + std::to_string(r));
    }
  c.equal(count_hnf_closed_form(13, 4), std::uint64_t{2380}, "H(13,4)");
  c.equal(enumerate_hnf({13, 4, HnfMode::op_reduced}).size(), std::size_t{84}, "H_op(13,4)");
  c.equal(count_inequivalent(13, 4), std::size_t{37}, "H_eq(13,4)");
  return c.take();
}

Outcome criterion6() {
  Checker c;
  for (Entry delta = 1; delta <= 12; ++delta)
    for (std::size_t r = 1; r <= 4; ++r)
      for (const auto& h : enumerate_hnf({delta, r, HnfMode::all})) {
        const auto sol = solve_mod(h, delta);
        const auto brute = testing::brute_force_residues(h, delta);
        if (sol.solutions.size() != static_cast<std::size_t>(delta) || sol.solutions != brute) {
          c.expect(false, "solve_mod mismatch for\n" + format_matrix(h.matrix()));
          return c.take();
        }
      }
  return c.take();
}

Outcome criterion7() {
  Checker c;
  for (auto [delta, want] : {std::pair<Entry, Entry>{3, 37}, {5, 53}}) {
    const auto t0 = Clock::now();
    const auto res = h_of(delta, 4);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    std::cout << "  h(" << delta << ",4): value=" << res.value << " status=" << (res.complete ? "complete" : "incomplete")
              << " elapsed_ms=" << ms << '\n';
    c.expect(res.complete, "h(" + std::to_string(delta) + ",4) status=incomplete");
    if (res.complete) c.equal(res.value, want, "h(" + std::to_string(delta) + ",4) mismatch");
  }
  return c.take();
}

Outcome criterion8() {
  Checker c;
  for (Entry delta = 1; delta <= 3; ++delta) {
    const auto o = oracle_g(delta);
    const auto p = g_of(delta, 2);
    c.equal(p.value, o.value, "compute_g vs oracle_g at delta=" + std::to_string(delta));
  }
  return c.take();
}

Outcome criterion9() {
  Checker c;
  std::mt19937_64 rng(20240901);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
    const IntMatrix a = testing::random_nonsingular(rng, n);
    const auto hd = hnf(a);
    const bool hnf_ok = HnfMatrix::satisfies_invariants(hd.hnf.matrix()) && hd.unimodular * hd.hnf.matrix() == a &&
                        abs_i64(determinant(hd.unimodular)) == 1;
    const auto sd = snf(a);
    bool snf_ok = testing::triple_product_equals(sd.left, a, sd.right, sd.diag);
    Entry prod = 1;
    for (std::size_t i = 0; i < n; ++i) {
      prod *= sd.alphas[i];
      snf_ok = snf_ok && sd.diag(i, i) == sd.alphas[i] && sd.alphas[i] > 0;
      for (std::size_t j = 0; j < n; ++j) snf_ok = snf_ok && (i == j || sd.diag(i, j) == 0);
      if (i + 1 < n) snf_ok = snf_ok && sd.alphas[i + 1] % sd.alphas[i] == 0;
    }
    snf_ok = snf_ok && prod == abs_i64(determinant(a));
    if (!hnf_ok || !snf_ok) {
      c.expect(false, "decomposition invariant failed for\n" + format_matrix(a));
      break;
    }
  }
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = 2 + static_cast<std::size_t>(trial % 3);
    const IntMatrix a = testing::random_matrix(rng, r, r + 3, -4, 4);
    if (rank(a) != r) continue;
    const Entry delta = certify(a, 1).max_abs_top_minor;
    const IntMatrix b = testing::random_equivalent(rng, a);
    if (is_generic(a) != is_generic(b) || is_delta_modular(a, delta) != is_delta_modular(b, delta)) {
      c.expect(false, "equivalence invariance failed for\n" + format_matrix(a));
      break;
    }
  }
  if (computed().empty())
    for (auto [delta, r] : {std::pair<Entry, std::size_t>{7, 2}, {9, 3}, {3, 4}}) g_of(delta, r);
  for (const auto& res : computed()) {
    const CertReport rep = certify(res.witness, res.delta);
    const bool generic = res.mode == CandidateMode::generic;
    const bool ok = rep.rank == res.r && rep.is_delta_modular && rep.columns_distinct &&
                    static_cast<Entry>(rep.columns) == res.value && (!generic || rep.is_generic);
    const std::string tag = mode_name(res.mode) + "(" + std::to_string(res.delta) + "," + std::to_string(res.r) + ")";
    c.expect(ok, "witness re-certification failed for " + tag);
    if (!generic) continue;
    const BoundReport b = bounds(res.delta, res.r);
    bool sandwich = b.lower_bound <= res.value && res.value <= b.upper_linear;
    if (b.upper_sublinear) sandwich = sandwich && res.value <= *b.upper_sublinear;
    c.expect(sandwich, "bound sandwich failed for " + tag);
  }
  std::cout << "  re-certified " << computed().size() << " computed results\n";
  return c.take();
}

Outcome criterion10() {
  Checker c;
  const auto t0 = Clock::now();
  std::ostringstream out;
  compute_table({2}, 50, CandidateMode::generic, out);
  const auto secs = std::chrono::duration<double>(Clock::now() - t0).count();
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  c.equal(line, csv_header(), "header");
  Entry expect_delta = 2;
  for (; std::getline(in, line); ++expect_delta) {
    std::vector<std::string> f(1);
    bool quoted = false;
    for (char ch : line) {
      if (ch == '"')
        quoted = !quoted;
      else if (ch == ',' && !quoted)
        f.emplace_back();
      else
        f.back() += ch;
    }
    if (f.size() != 10 || f[0] != std::to_string(expect_delta) || f[1] != "2") {
      c.expect(false, "malformed row: " + line);
      break;
    }
    const IntMatrix w = parse_witness(f[8]);
    const Entry value = std::stoll(f[3]);
    const bool ok = static_cast<Entry>(w.cols()) == value && std::stoll(f[7]) == value - (expect_delta + 2) &&
                    is_generic(w) && is_delta_modular(w, expect_delta);
    c.expect(ok, "row does not certify: delta=" + f[0]);
  }
  c.equal(expect_delta, Entry{51}, "rows through delta=50");
  c.expect(secs < 15 * 60, "table took longer than 15 minutes");
  std::cout << "  table r=2 delta<=50: " << secs << " s\n";
  std::cout << "  not run at this scale: r=2 sweep to delta=450, r=5 sweep to delta=40\n";
  return c.take();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gdelta acceptance checks"};
  std::vector<int> only, skip;
  app.add_option("--only", only, "Run only these criteria")->delimiter(',');
  app.add_option("--skip", skip, "Skip these criteria")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"g(delta,2) exact values", criterion1},
      {"r = 2 family identities", criterion2},
      {"higher-rank values", criterion3},
      {"non-monotonicity g(9,3) > g(10,3)", criterion4},
      {"HNF counting", criterion5},
      {"residue solution counting", criterion6},
      {"h(delta,4) values", criterion7},
      {"oracle equivalence", criterion8},
      {"property suites", criterion9},
      {"table smoke test", criterion10},
  };
  const std::set<int> only_set(only.begin(), only.end()), skip_set(skip.begin(), skip.end());
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if ((!only_set.empty() && !only_set.count(id)) || skip_set.count(id)) continue;
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << criteria[i].first << " (" << ms << " ms)";
    if (!o.pass) std::cout << " -- " << o.detail;
    std::cout << std::endl;
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
