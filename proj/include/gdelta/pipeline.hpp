#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gdelta/boundscalc.hpp"
#include "gdelta/exactmat.hpp"
#include "gdelta/modsolve.hpp"

namespace gdelta {

/// Bumped whenever a change can alter values or witnesses; part of every cache key.
inline constexpr const char* kAlgorithmVersion = "gdelta-1";

struct ComputeOptions {
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 1;
  /// Off: searches share the best size found so far. The value and witness do not depend on
  /// this flag, only node counts and timing do.
  bool deterministic = true;
  std::uint64_t node_cap = 1'000'000'000;
  std::optional<std::chrono::milliseconds> time_limit;
  /// h-mode only: search the universe with the zero column and both v and -v.
  bool allow_negations = false;
  /// Start every clique search at the best construction's size (generic mode).
  bool use_lower_bound_hint = true;
};

struct ComputationResult {
  Entry delta = 1;
  std::size_t r = 2;
  CandidateMode mode = CandidateMode::generic;
  bool allow_negations = false;
  Entry value = 0;
  IntMatrix witness{1, 1};
  std::optional<HnfMatrix> source_hnf;
  /// Position of source_hnf in the op-reduced stream.
  std::size_t source_index = 0;
  /// Clique size L behind value.
  std::size_t clique_size = 0;
  std::size_t hnfs_processed = 0;
  std::uint64_t nodes = 0;
  std::chrono::milliseconds elapsed{0};
  /// False when a node cap or time limit cut a search short; value is then only a lower bound.
  bool complete = true;
};

/// g(delta, r) by enumeration of op-reduced HNFs and maximum (hyper)clique search.
/// The witness (A, A C / delta) is re-certified; failure throws VerificationFailure.
ComputationResult compute_g(Entry delta, std::size_t r, const ComputeOptions& opts = {});

/// h(delta, r). The search runs over columns without the zero column and without {v, -v}
/// pairs; if that maximum has r + L columns then h = 2 (r + L) + 1, attained by
/// (A, A C / delta, -A, -A C / delta, 0). With allow_negations the unrestricted universe is
/// searched directly and r + L is reported.
ComputationResult compute_h(Entry delta, std::size_t r, const ComputeOptions& opts = {});

/// Dispatches on mode.
ComputationResult compute(Entry delta, std::size_t r, CandidateMode mode, const ComputeOptions& opts = {});

/// Exhaustive g(delta, 2) over all subsets of {v in [-delta, delta]^2 : v != 0, first nonzero
/// entry positive}. No HNF machinery is involved. delta must lie in 1..3.
ComputationResult oracle_g(Entry delta, std::size_t r = 2);

std::string mode_name(CandidateMode mode);
CandidateMode parse_mode(const std::string& text);

class ResultCache;

std::string csv_header();
std::string csv_row(const ComputationResult& res, const BoundReport& b);

/// Streams one CSV row per (r, delta), r ascending then delta = 2..delta_max, flushing after each.
/// An incomplete result stops the table with ResourceCapExceeded before its row is written.
void compute_table(const std::vector<std::size_t>& ranks, Entry delta_max, CandidateMode mode, std::ostream& out,
                   const ComputeOptions& opts = {}, ResultCache* cache = nullptr);

}  // namespace gdelta
