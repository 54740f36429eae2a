#include <cstdio>
#include <random>
#include <sstream>

#include "doctest.h"
#include "unilog/errors.hpp"
#include "unilog/matrix_market.hpp"
#include "unilog/models.hpp"
#include "unilog/types.hpp"

using namespace unilog;

namespace {

CMat random_dense(int rows, int cols, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    CMat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
    }
    return m;
}

}  // namespace

TEST_CASE("coordinate round-trip is bitwise exact") {
    const CMat m = random_dense(5, 3, 7);
    std::stringstream ss;
    write_matrix(ss, m, MatrixMarketFormat::coordinate);
    const CMat back = read_matrix(ss);
    REQUIRE(back.rows() == 5);
    REQUIRE(back.cols() == 3);
    CHECK((back - m).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("array round-trip is bitwise exact") {
    const CMat m = random_gapped_unitary(6, 1.0, 3);
    std::stringstream ss;
    write_matrix(ss, m, MatrixMarketFormat::array);
    const CMat back = read_matrix(ss);
    CHECK((back - m).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("coordinate format drops exact zeros") {
    CMat m = CMat::Zero(4, 4);
    m(1, 2) = Complex(0.5, -0.25);
    m(3, 0) = Complex(0.0, 1e-300);
    std::stringstream ss;
    write_matrix(ss, m, MatrixMarketFormat::coordinate);
    const std::string text = ss.str();
    // Header comment line, size line, and exactly two entry lines.
    int entry_lines = 0;
    std::stringstream scan(text);
    std::string line;
    while (std::getline(scan, line)) {
        if (!line.empty() && line[0] != '%' && line.find(' ') != std::string::npos) ++entry_lines;
    }
    CHECK(entry_lines == 1 + 2);  // the size line plus two entries

    const CMat back = read_matrix(ss);
    CHECK((back - m).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("reader accepts real and integer fields") {
    std::stringstream real_mm(
        "%%MatrixMarket matrix coordinate real general\n"
        "2 2 2\n"
        "1 1 1.5\n"
        "2 2 -2.25e-3\n");
    const CMat a = read_matrix(real_mm);
    CHECK(a(0, 0) == Complex(1.5, 0.0));
    CHECK(a(1, 1) == Complex(-2.25e-3, 0.0));
    CHECK(a(0, 1) == Complex(0.0, 0.0));

    std::stringstream int_mm(
        "%%MatrixMarket matrix array integer general\n"
        "% a comment\n"
        "2 1\n"
        "3\n"
        "-4\n");
    const CMat b = read_matrix(int_mm);
    CHECK(b(0, 0) == Complex(3.0, 0.0));
    CHECK(b(1, 0) == Complex(-4.0, 0.0));
}

TEST_CASE("reader rejects malformed input") {
    std::stringstream bad_banner("%%NotMatrixMarket matrix coordinate complex general\n1 1 0\n");
    CHECK_THROWS_AS(read_matrix(bad_banner), ParseError);

    std::stringstream bad_symmetry(
        "%%MatrixMarket matrix coordinate complex symmetric\n1 1 0\n");
    CHECK_THROWS_AS(read_matrix(bad_symmetry), ParseError);

    std::stringstream missing_entries(
        "%%MatrixMarket matrix coordinate complex general\n2 2 3\n1 1 1.0 0.0\n");
    CHECK_THROWS_AS(read_matrix(missing_entries), ParseError);

    std::stringstream out_of_range(
        "%%MatrixMarket matrix coordinate complex general\n2 2 1\n3 1 1.0 0.0\n");
    CHECK_THROWS_AS(read_matrix(out_of_range), ParseError);

    std::stringstream not_numbers(
        "%%MatrixMarket matrix coordinate complex general\n1 1 1\n1 1 x y\n");
    CHECK_THROWS_AS(read_matrix(not_numbers), ParseError);

    std::stringstream empty("");
    CHECK_THROWS_AS(read_matrix(empty), ParseError);
}

TEST_CASE("file round-trip") {
    const CMat m = random_dense(3, 3, 11);
    const std::string path = "mm_roundtrip_test.mtx";
    write_matrix_file(path, m, MatrixMarketFormat::coordinate);
    const CMat back = read_matrix_file(path);
    CHECK((back - m).cwiseAbs().maxCoeff() == 0.0);
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_matrix_file("definitely_missing_file.mtx"), Error);
}
