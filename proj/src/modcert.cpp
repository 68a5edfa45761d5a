#include "gdelta/modcert.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <vector>

#include "gdelta/checked.hpp"
#include "gdelta/combinations.hpp"
#include "gdelta/errors.hpp"
#include "gdelta/exactmat.hpp"

namespace gdelta {

namespace {

Entry sub_det(const IntMatrix& a, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols,
              std::vector<Entry>& buf) {
  const std::size_t m = rows.size();
  buf.resize(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) buf[i * m + j] = a(rows[i], cols[j]);
  return det_row_major(buf, m);
}

void require_full_row_rank(const IntMatrix& a, const char* who) {
  if (rank(a) != a.rows()) throw InvalidInput(std::string(who) + ": matrix does not have full row rank");
}

// Visits every m x m minor for m = 1..min(rows, cols); stops when visit returns false.
template <class Visit>
bool for_each_minor_all_sizes(const IntMatrix& a, Visit&& visit) {
  std::vector<Entry> buf;
  const std::size_t top = std::min(a.rows(), a.cols());
  for (std::size_t m = 1; m <= top; ++m) {
    bool go = for_each_combination(a.cols(), m, [&](const std::vector<std::size_t>& cols) {
      return for_each_combination(a.rows(), m, [&](const std::vector<std::size_t>& rows) {
        return visit(m, sub_det(a, rows, cols, buf));
      });
    });
    if (!go) return false;
  }
  return true;
}

}  // namespace

std::string CertReport::to_string() const {
  std::ostringstream os;
  os << "rank=" << rank << '\n'
     << "columns=" << columns << '\n'
     << "max_abs_top_minor=" << max_abs_top_minor << '\n'
     << "zero_top_minor_count=" << zero_top_minor_count << '\n'
     << "is_generic=" << (is_generic ? "true" : "false") << '\n'
     << "is_delta_submodular=" << (is_delta_submodular ? "true" : "false") << '\n'
     << "is_delta_modular=" << (is_delta_modular ? "true" : "false") << '\n'
     << "columns_distinct=" << (columns_distinct ? "true" : "false") << '\n';
  return os.str();
}

bool is_generic(const IntMatrix& a) {
  require_full_row_rank(a, "is_generic");
  std::vector<std::size_t> rows(a.rows());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  std::vector<Entry> buf;
  return for_each_combination(a.cols(), a.rows(), [&](const std::vector<std::size_t>& cols) {
    return sub_det(a, rows, cols, buf) != 0;
  });
}

bool is_delta_modular(const IntMatrix& a, Entry delta) {
  if (delta <= 0) throw InvalidInput("is_delta_modular: delta must be positive");
  require_full_row_rank(a, "is_delta_modular");
  std::vector<std::size_t> rows(a.rows());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  std::vector<Entry> buf;
  bool attained = false;
  bool bounded = for_each_combination(a.cols(), a.rows(), [&](const std::vector<std::size_t>& cols) {
    Entry d = abs_i64(sub_det(a, rows, cols, buf));
    attained = attained || d == delta;
    return d <= delta;
  });
  return bounded && attained;
}

bool is_totally_generic(const IntMatrix& a) {
  return for_each_minor_all_sizes(a, [](std::size_t, Entry d) { return d != 0; });
}

bool is_delta_bound(const IntMatrix& a, Entry delta) {
  if (delta <= 0) throw InvalidInput("is_delta_bound: delta must be positive");
  const std::size_t top = std::min(a.rows(), a.cols());
  std::vector<i128> bound(top + 1, 1);
  for (std::size_t m = 1; m <= top; ++m) bound[m] = checked_mul(bound[m - 1], static_cast<i128>(delta));
  return for_each_minor_all_sizes(a, [&](std::size_t m, Entry d) { return static_cast<i128>(abs_i64(d)) <= bound[m]; });
}

bool columns_distinct(const IntMatrix& a) {
  std::set<Column> seen;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!seen.insert(a.column(j)).second) return false;
  return true;
}

CertReport certify(const IntMatrix& a, Entry delta) {
  if (delta <= 0) throw InvalidInput("certify: delta must be positive");
  CertReport rep;
  rep.rank = rank(a);
  rep.columns = a.cols();
  rep.columns_distinct = columns_distinct(a);
  if (rep.rank > 0) {
    std::vector<Entry> buf;
    const std::size_t k = rep.rank;
    for_each_combination(a.cols(), k, [&](const std::vector<std::size_t>& cols) {
      return for_each_combination(a.rows(), k, [&](const std::vector<std::size_t>& rows) {
        Entry d = abs_i64(sub_det(a, rows, cols, buf));
        if (d == 0) ++rep.zero_top_minor_count;
        rep.max_abs_top_minor = std::max(rep.max_abs_top_minor, d);
        return true;
      });
    });
  }
  rep.is_generic = rep.rank > 0 && rep.zero_top_minor_count == 0;
  rep.is_delta_submodular = rep.max_abs_top_minor <= delta;
  rep.is_delta_modular = rep.rank > 0 && rep.max_abs_top_minor == delta;
  return rep;
}

}  // namespace gdelta
