#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace gdelta {

using Entry = std::int64_t;
using Column = std::vector<Entry>;

/// Dense exact-integer matrix, row-major, at least 1x1.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<Entry>> rows);

  static IntMatrix identity(std::size_t n);
  /// All columns must share one length; at least one column is required.
  static IntMatrix from_columns(std::span<const Column> cols);
  static IntMatrix from_row_major(std::size_t rows, std::size_t cols, std::vector<Entry> data);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Entry& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Entry operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Bounds-checked access.
  Entry at(std::size_t i, std::size_t j) const;

  std::span<const Entry> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<Entry> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  Column column(std::size_t j) const;
  std::vector<Column> columns() const;
  const std::vector<Entry>& data() const { return data_; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);
  /// row[dst] += factor * row[src], overflow-checked.
  void add_row_multiple(std::size_t dst, std::size_t src, Entry factor);
  /// col[dst] += factor * col[src], overflow-checked.
  void add_col_multiple(std::size_t dst, std::size_t src, Entry factor);

  IntMatrix transposed() const;
  /// Columns of this followed by the columns of other (same row count).
  IntMatrix hconcat(const IntMatrix& other) const;
  IntMatrix select_columns(std::span<const std::size_t> idx) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  /// Lexicographic on (rows, cols, row-major entries).
  friend std::strong_ordering operator<=>(const IntMatrix& a, const IntMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Entry> data_;
};

/// Overflow-checked product.
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
Column operator*(const IntMatrix& a, std::span<const Entry> x);

}  // namespace gdelta
