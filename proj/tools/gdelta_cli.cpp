#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "gdelta/boundscalc.hpp"
#include "gdelta/errors.hpp"
#include "gdelta/families.hpp"
#include "gdelta/hnfspace.hpp"
#include "gdelta/matrix_io.hpp"
#include "gdelta/modcert.hpp"
#include "gdelta/pipeline.hpp"
#include "gdelta/result_cache.hpp"

namespace {

using namespace gdelta;

constexpr int kExitOk = 0;
constexpr int kExitNotCertified = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitIncomplete = 3;
constexpr int kExitVerification = 4;

struct SearchFlags {
  std::string mode = "generic";
  bool benchmark = false;
  std::uint64_t cap = 1'000'000'000;
  unsigned threads = 1;
  double time_limit_s = 0;
  bool allow_negations = false;
  std::string cache;

  void attach(CLI::App* cmd) {
    cmd->add_option("--mode", mode, "generic or nongeneric")->check(CLI::IsMember({"generic", "nongeneric"}));
    cmd->add_flag("--deterministic", "Reproducible node counts (default)");
    cmd->add_flag("--benchmark", benchmark, "Share the best clique size across searches");
    cmd->add_option("--cap", cap, "Node limit per clique search");
    cmd->add_option("--threads", threads, "Worker threads, 0 = all cores");
    cmd->add_option("--time-limit", time_limit_s, "Wall-clock budget in seconds, 0 = none");
    cmd->add_flag("--allow-negations", allow_negations, "h-mode: search with the zero column and both v, -v");
    cmd->add_option("--cache", cache, "JSON result cache");
  }

  ComputeOptions options() const {
    ComputeOptions o;
    o.deterministic = !benchmark;
    o.node_cap = cap;
    o.threads = threads;
    o.allow_negations = allow_negations;
    if (time_limit_s > 0) o.time_limit = std::chrono::milliseconds(static_cast<std::int64_t>(time_limit_s * 1000));
    return o;
  }
};

void print_result(const ComputationResult& res) {
  std::cout << "delta=" << res.delta << '\n'
            << "rank=" << res.r << '\n'
            << "mode=" << mode_name(res.mode) << (res.allow_negations ? "+negations" : "") << '\n'
            << "value=" << res.value << '\n'
            << "status=" << (res.complete ? "complete" : "incomplete") << '\n'
            << "clique_size=" << res.clique_size << '\n';
  if (res.source_hnf) std::cout << "source_hnf=" << format_witness(res.source_hnf->matrix()) << '\n';
  std::cout << "source_index=" << res.source_index << '\n'
            << "hnfs_processed=" << res.hnfs_processed << '\n'
            << "nodes=" << res.nodes << '\n'
            << "elapsed_ms=" << res.elapsed.count() << '\n'
            << "witness=" << format_witness(res.witness) << '\n';
}

std::vector<std::size_t> parse_ranks(const std::string& text) {
  std::vector<std::size_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string tok = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!tok.empty()) {
      std::size_t v = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) throw InvalidInput("bad rank '" + tok + "'");
      out.push_back(v);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact column numbers of generic and non-generic delta-modular matrices"};
  app.require_subcommand(1);

  Entry delta = 0;
  std::size_t rank = 0;

  SearchFlags compute_flags;
  std::string witness_path;
  auto* compute = app.add_subcommand("compute", "Compute g (generic) or h (nongeneric)");
  compute->add_option("--delta", delta)->required();
  compute->add_option("--rank", rank)->required();
  compute->add_option("--witness", witness_path, "Also write the witness matrix here");
  compute_flags.attach(compute);

  SearchFlags table_flags;
  std::string ranks_text;
  Entry delta_max = 0;
  std::string csv_path;
  auto* table = app.add_subcommand("table", "Stream a CSV table of values");
  table->add_option("--rank", ranks_text, "Comma-separated ranks")->required();
  table->add_option("--delta-max", delta_max)->required();
  table->add_option("--csv", csv_path, "Write here instead of stdout");
  table_flags.attach(table);

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "Certify a matrix file");
  verify->add_option("path", verify_path)->required();
  verify->add_option("--delta", delta)->required();

  std::string family;
  int s_param = -1;
  Entry p_param = 0;
  auto* construct = app.add_subcommand("construct", "Print an explicit construction");
  construct->add_option("--family", family)
      ->required()
      ->check(CLI::IsMember({"basic", "f1", "f2", "f3", "30s24", "vandermonde"}));
  construct->add_option("--delta", delta);
  construct->add_option("--s", s_param);
  construct->add_option("--p", p_param);
  construct->add_option("--rank", rank);

  bool header = false;
  auto* bounds_cmd = app.add_subcommand("bounds", "Closed-form bounds on g as one CSV row");
  bounds_cmd->add_option("--delta", delta)->required();
  bounds_cmd->add_option("--rank", rank)->required();
  bounds_cmd->add_flag("--header", header, "Print the column names first");

  std::string count_mode = "all";
  auto* count = app.add_subcommand("hnf-count", "Count Hermite normal forms");
  count->add_option("--delta", delta)->required();
  count->add_option("--rank", rank)->required();
  count->add_option("--mode", count_mode)->check(CLI::IsMember({"all", "op", "classes", "closed"}));

  auto* oracle = app.add_subcommand("oracle", "Brute-force g(delta, 2) for delta <= 3");
  oracle->add_option("--delta", delta)->required();
  oracle->add_option("--rank", rank)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  if (*compute) {
    std::optional<ResultCache> cache;
    if (!compute_flags.cache.empty()) cache.emplace(compute_flags.cache);
    const CandidateMode mode = parse_mode(compute_flags.mode);
    const ComputeOptions opts = compute_flags.options();
    std::optional<ComputationResult> res;
    if (cache) res = cache->get(delta, rank, mode, mode == CandidateMode::non_generic && opts.allow_negations);
    if (!res) {
      res = gdelta::compute(delta, rank, mode, opts);
      if (cache && res->complete) cache->put(*res);
    }
    print_result(*res);
    if (!witness_path.empty()) write_matrix_file(witness_path, res->witness);
    return res->complete ? kExitOk : kExitIncomplete;
  }
  if (*table) {
    std::optional<ResultCache> cache;
    if (!table_flags.cache.empty()) cache.emplace(table_flags.cache);
    const auto ranks = parse_ranks(ranks_text);
    for (auto r : ranks)
      if (r < 2) throw InvalidInput("ranks must be at least 2");
    const ComputeOptions opts = table_flags.options();
    const CandidateMode mode = parse_mode(table_flags.mode);
    if (csv_path.empty()) {
      compute_table(ranks, delta_max, mode, std::cout, opts, cache ? &*cache : nullptr);
    } else {
      std::ofstream out(csv_path);
      if (!out) throw InvalidInput("cannot write " + csv_path);
      compute_table(ranks, delta_max, mode, out, opts, cache ? &*cache : nullptr);
    }
    return kExitOk;
  }
  if (*verify) {
    const IntMatrix m = read_matrix_file(verify_path);
    const CertReport rep = certify(m, delta);
    std::cout << rep.to_string();
    return rep.is_delta_modular && rep.columns_distinct ? kExitOk : kExitNotCertified;
  }
  if (*construct) {
    IntMatrix m(1, 1);
    if (family == "basic") {
      m = construct_basic(delta, rank ? rank : 2);
    } else if (family == "f1") {
      m = construct_f1(delta);
    } else if (family == "f2") {
      m = construct_f2(delta);
    } else if (family == "f3") {
      m = construct_f3(delta);
    } else if (family == "30s24") {
      if (s_param < 0) {
        if (delta < 24 || (delta - 24) % 30 != 0) throw InvalidInput("30s24 needs --s or --delta = 30s+24");
        s_param = static_cast<int>((delta - 24) / 30);
      } else if (delta != 0 && delta != 30 * static_cast<Entry>(s_param) + 24) {
        throw InvalidInput("--delta does not equal 30s+24");
      }
      m = construct_30s24(s_param);
    } else {
      m = construct_vandermonde(p_param, rank ? rank : 2);
    }
    std::cout << format_matrix(m);
    return kExitOk;
  }
  if (*bounds_cmd) {
    const BoundReport b = bounds(delta, rank);
    if (header) std::cout << "delta,rank,lower_bound,lower_provenance,upper_linear,upper_sublinear,exact_if_forced\n";
    std::cout << b.delta << ',' << b.r << ',' << b.lower_bound << ',' << b.lower_provenance << ',' << b.upper_linear << ',';
    if (b.upper_sublinear) std::cout << *b.upper_sublinear;
    std::cout << ',';
    if (b.exact_if_forced) std::cout << *b.exact_if_forced;
    std::cout << '\n';
    return kExitOk;
  }
  if (*count) {
    if (delta < 1 || rank < 1) throw InvalidInput("delta and rank must be positive");
    std::uint64_t n = 0;
    if (count_mode == "closed") {
      n = count_hnf_closed_form(delta, rank);
    } else if (count_mode == "classes") {
      n = count_inequivalent(delta, rank);
    } else {
      HnfStream stream({delta, rank, count_mode == "op" ? HnfMode::op_reduced : HnfMode::all});
      while (stream.next()) ++n;
    }
    std::cout << n << '\n';
    return kExitOk;
  }
  if (*oracle) {
    print_result(oracle_g(delta, rank));
    return kExitOk;
  }
  return kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const OverflowError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const ResourceCapExceeded& e) {
    std::cerr << "incomplete: " << e.what() << '\n';
    return kExitIncomplete;
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return kExitVerification;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitVerification;
  }
}
