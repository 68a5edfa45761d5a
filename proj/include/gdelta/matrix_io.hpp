#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "gdelta/int_matrix.hpp"

namespace gdelta {

/// "r n\n" followed by r lines of n space-separated integers, each newline-terminated.
std::string format_matrix(const IntMatrix& m);

/// Inverse of format_matrix. Extra whitespace is tolerated; anything else throws InvalidInput.
IntMatrix parse_matrix(std::string_view text);

IntMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const IntMatrix& m);

/// Columns joined by ';', entries within a column by ',', e.g. "1,0;0,1;1,1".
std::string format_witness(const IntMatrix& m);
IntMatrix parse_witness(std::string_view text);

}  // namespace gdelta
