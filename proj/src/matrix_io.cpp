#include "gdelta/matrix_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "gdelta/errors.hpp"

namespace gdelta {

namespace {

Entry parse_entry(std::string_view tok) {
  Entry v = 0;
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || ptr != end || tok.empty()) throw InvalidInput("matrix: bad integer '" + std::string(tok) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

}  // namespace

std::string format_matrix(const IntMatrix& m) {
  std::ostringstream os;
  os << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << '\n';
  }
  return os.str();
}

IntMatrix parse_matrix(std::string_view text) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) toks.push_back(text.substr(i, j - i));
    i = j;
  }
  if (toks.size() < 2) throw InvalidInput("matrix: missing 'r n' header");
  const Entry r = parse_entry(toks[0]);
  const Entry n = parse_entry(toks[1]);
  if (r < 1 || n < 1) throw InvalidInput("matrix: dimensions must be positive");
  const auto rows = static_cast<std::size_t>(r);
  const auto cols = static_cast<std::size_t>(n);
  if (toks.size() - 2 != rows * cols) throw InvalidInput("matrix: entry count does not match 'r n'");
  std::vector<Entry> data;
  data.reserve(rows * cols);
  for (std::size_t k = 2; k < toks.size(); ++k) data.push_back(parse_entry(toks[k]));
  return IntMatrix::from_row_major(rows, cols, std::move(data));
}

IntMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_matrix(ss.str());
}

void write_matrix_file(const std::filesystem::path& path, const IntMatrix& m) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << format_matrix(m);
}

std::string format_witness(const IntMatrix& m) {
  std::string out;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (j) out += ';';
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i) out += ',';
      out += std::to_string(m(i, j));
    }
  }
  return out;
}

IntMatrix parse_witness(std::string_view text) {
  std::vector<Column> cols;
  for (auto col : split(text, ';')) {
    Column c;
    for (auto tok : split(col, ',')) c.push_back(parse_entry(tok));
    if (!cols.empty() && c.size() != cols.front().size()) throw InvalidInput("witness: ragged columns");
    cols.push_back(std::move(c));
  }
  return IntMatrix::from_columns(cols);
}

}  // namespace gdelta
