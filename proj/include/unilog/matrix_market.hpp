#pragma once

#include <iosfwd>
#include <string>

#include "unilog/types.hpp"

namespace unilog {

enum class MatrixMarketFormat { coordinate, array };

// Complex general Matrix Market. Values carry 17 significant digits; zero
// entries are dropped from coordinate files.
void write_matrix(std::ostream& out, const CMat& m, MatrixMarketFormat fmt);
void write_matrix_file(const std::string& path, const CMat& m, MatrixMarketFormat fmt);

// Reads either format (complex or real values), detected from the header.
CMat read_matrix(std::istream& in);
CMat read_matrix_file(const std::string& path);

}  // namespace unilog
