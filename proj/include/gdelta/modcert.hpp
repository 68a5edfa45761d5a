#pragma once

#include <cstddef>
#include <string>

#include "gdelta/int_matrix.hpp"

namespace gdelta {

/// Summary of an independent certificate check of a matrix against a target delta.
struct CertReport {
  std::size_t rank = 0;
  std::size_t columns = 0;
  Entry max_abs_top_minor = 0;        // over all rank x rank minors
  std::size_t zero_top_minor_count = 0;
  bool is_generic = false;
  bool is_delta_submodular = false;
  bool is_delta_modular = false;
  bool columns_distinct = false;

  std::string to_string() const;
};

/// Every r x r minor nonzero (r = rows). Throws InvalidInput if the rows are dependent.
bool is_generic(const IntMatrix& a);

/// Largest |r x r minor| equals delta exactly. Throws InvalidInput if the rows are dependent.
bool is_delta_modular(const IntMatrix& a, Entry delta);

/// Every m x m minor is nonzero for 1 <= m <= min(rows, cols).
bool is_totally_generic(const IntMatrix& a);

/// Every m x m minor has absolute value <= delta^m for 1 <= m <= min(rows, cols).
bool is_delta_bound(const IntMatrix& a, Entry delta);

/// Full report. Rank-deficient input is reported, not rejected.
CertReport certify(const IntMatrix& a, Entry delta);

bool columns_distinct(const IntMatrix& a);

}  // namespace gdelta
