#pragma once

#include <cstddef>
#include <vector>

#include "gdelta/exactmat.hpp"

namespace gdelta {

enum class CandidateMode { generic, non_generic };

/// All x in {0..delta-1}^r with A x = 0 (mod delta), sorted lexicographically.
struct ResidueSolutionSet {
  Entry delta = 1;
  std::size_t r = 0;
  std::vector<Column> solutions;
};

struct CandidateColumns {
  std::vector<Column> columns;
  CandidateMode mode = CandidateMode::generic;
};

/// Solves A x = 0 (mod delta) through the Smith form of A. Throws InvalidInput unless det A = delta.
ResidueSolutionSet solve_mod(const HnfMatrix& a, Entry delta);

/// Integer representatives with entries in [-delta, delta] of one residue vector.
///
/// generic: entry k != 0 lifts to {k, k - delta}, entry 0 to {delta, -delta}; only vectors with a
/// positive first entry are kept, so there are exactly 2^(r-1).
/// non_generic: entry 0 lifts to {0, delta, -delta}; the zero vector is dropped and each {v, -v}
/// pair is kept once, with a positive first nonzero entry. Output is sorted.
std::vector<Column> lift_representatives(const Column& x, Entry delta, CandidateMode mode);

/// Drops every column that is an integer multiple (factor > 1) of another one. Generic mode only.
CandidateColumns prune_parallel(const CandidateColumns& cands);

/// The candidate universe for one HNF, sorted lexicographically.
///
/// generic: lifts of all residue solutions, parallel multiples pruned.
/// non_generic: lifts of all residue solutions minus the columns delta*e_j, whose images repeat
/// columns of A. With allow_negations both v and -v are kept, the zero column is added and
/// -delta*e_j is kept.
CandidateColumns build_candidates(const HnfMatrix& a, Entry delta, CandidateMode mode, bool allow_negations = false);

}  // namespace gdelta
