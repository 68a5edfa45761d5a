#pragma once

#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gdelta/modsolve.hpp"

namespace gdelta {

/// Symmetric adjacency stored as one bitset row per vertex.
class PairGraph {
 public:
  PairGraph() = default;
  explicit PairGraph(std::size_t n);

  std::size_t size() const { return n_; }
  std::size_t words() const { return words_; }
  bool adjacent(std::size_t i, std::size_t j) const { return (row(i)[j >> 6] >> (j & 63)) & 1u; }
  void connect(std::size_t i, std::size_t j);
  const std::uint64_t* row(std::size_t i) const { return bits_.data() + i * words_; }
  std::size_t degree(std::size_t i) const;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Candidate columns with the pairwise part of the edge predicate precomputed.
///
/// An index set I with 1 < |I| <= k is a hyperedge iff the columns in I form a totally generic
/// delta-bound matrix (generic mode) or a delta-bound matrix with distinct columns (non_generic).
struct CliqueInstance {
  std::vector<Column> columns;
  Entry delta = 1;
  std::size_t r = 0;
  CandidateMode mode = CandidateMode::generic;
  PairGraph adjacency;
  /// Only cliques of at least this size are searched for; a valid hint never changes the answer.
  std::size_t lower_bound = 0;
};

/// Throws InvalidInput if a column has the wrong length or an entry outside the mode's range.
CliqueInstance make_instance(const CandidateColumns& cands, Entry delta, std::size_t r, std::size_t lower_bound = 0);

struct CliqueOptions {
  std::uint64_t node_cap = 1'000'000'000;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  /// Cross-search hint, read racily; it may only grow and must never exceed the true optimum
  /// of any search it is meant to accelerate without dropping it.
  const std::atomic<std::size_t>* shared_bound = nullptr;
};

struct CliqueResult {
  /// 0 when no clique of size >= lower_bound exists (or none was found before a cap hit).
  std::size_t size = 0;
  std::vector<std::size_t> members;  // ascending candidate indices
  std::uint64_t nodes = 0;
  std::chrono::nanoseconds elapsed{0};
  bool complete = true;
};

/// Full predicate on the selected columns, k = idx.size(), evaluated from scratch.
bool is_hyperedge(const CliqueInstance& inst, std::span<const std::size_t> idx);

/// Pairwise predicate for two columns.
bool pair_compatible(const Column& a, const Column& b, Entry delta, CandidateMode mode);

/// Maximum clique of the pair graph (r = 2).
CliqueResult max_clique_graph(const CliqueInstance& inst, const CliqueOptions& opts = {});

/// Maximum k-hyperclique, 2 <= k <= r (r >= 3 for the default k = r).
CliqueResult max_hyperclique(const CliqueInstance& inst, std::size_t k, const CliqueOptions& opts = {});
CliqueResult max_hyperclique(const CliqueInstance& inst, const CliqueOptions& opts = {});

}  // namespace gdelta
