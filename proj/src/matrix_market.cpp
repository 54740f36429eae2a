#include "unilog/matrix_market.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "unilog/errors.hpp"

namespace unilog {

namespace {

struct Header {
    MatrixMarketFormat fmt;
    bool complex_field;
};

std::string next_data_line(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        const auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '%') continue;
        return line;
    }
    throw ParseError("unexpected end of Matrix Market stream");
}

Header parse_header(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty Matrix Market stream");
    std::istringstream hs(line);
    std::string banner, object, fmt, field, symmetry;
    hs >> banner >> object >> fmt >> field >> symmetry;
    if (banner != "%%MatrixMarket" || object != "matrix") {
        throw ParseError("not a Matrix Market matrix header");
    }
    Header h{};
    if (fmt == "coordinate") {
        h.fmt = MatrixMarketFormat::coordinate;
    } else if (fmt == "array") {
        h.fmt = MatrixMarketFormat::array;
    } else {
        throw ParseError("unsupported Matrix Market format: " + fmt);
    }
    if (field == "complex") {
        h.complex_field = true;
    } else if (field == "real" || field == "integer") {
        h.complex_field = false;
    } else {
        throw ParseError("unsupported Matrix Market field: " + field);
    }
    if (symmetry != "general") {
        throw ParseError("only general symmetry is supported");
    }
    return h;
}

}  // namespace

void write_matrix(std::ostream& out, const CMat& m, MatrixMarketFormat fmt) {
    const auto rows = m.rows();
    const auto cols = m.cols();
    if (fmt == MatrixMarketFormat::array) {
        out << "%%MatrixMarket matrix array complex general\n";
        out << rows << ' ' << cols << '\n';
        for (Eigen::Index j = 0; j < cols; ++j) {
            for (Eigen::Index i = 0; i < rows; ++i) {
                out << format_g17(m(i, j).real()) << ' ' << format_g17(m(i, j).imag()) << '\n';
            }
        }
        return;
    }
    Eigen::Index nnz = 0;
    for (Eigen::Index j = 0; j < cols; ++j) {
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (m(i, j) != Complex(0.0, 0.0)) ++nnz;
        }
    }
    out << "%%MatrixMarket matrix coordinate complex general\n";
    out << rows << ' ' << cols << ' ' << nnz << '\n';
    for (Eigen::Index j = 0; j < cols; ++j) {
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (m(i, j) == Complex(0.0, 0.0)) continue;
            out << (i + 1) << ' ' << (j + 1) << ' ' << format_g17(m(i, j).real()) << ' '
                << format_g17(m(i, j).imag()) << '\n';
        }
    }
}

void write_matrix_file(const std::string& path, const CMat& m, MatrixMarketFormat fmt) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path + " for writing");
    write_matrix(out, m, fmt);
    if (!out.good()) throw Error("write failed on " + path);
}

CMat read_matrix(std::istream& in) {
    const Header h = parse_header(in);
    std::istringstream sizes(next_data_line(in));
    Eigen::Index rows = 0, cols = 0;
    if (!(sizes >> rows >> cols) || rows < 0 || cols < 0) {
        throw ParseError("bad Matrix Market size line");
    }
    CMat m = CMat::Zero(rows, cols);
    if (h.fmt == MatrixMarketFormat::coordinate) {
        Eigen::Index nnz = 0;
        if (!(sizes >> nnz) || nnz < 0) throw ParseError("coordinate header missing nnz");
        for (Eigen::Index k = 0; k < nnz; ++k) {
            std::istringstream row(next_data_line(in));
            Eigen::Index i = 0, j = 0;
            double re = 0.0, im = 0.0;
            if (!(row >> i >> j >> re)) throw ParseError("bad coordinate entry");
            if (h.complex_field && !(row >> im)) throw ParseError("bad complex entry");
            if (i < 1 || i > rows || j < 1 || j > cols) throw ParseError("index out of range");
            m(i - 1, j - 1) = Complex(re, im);
        }
    } else {
        for (Eigen::Index j = 0; j < cols; ++j) {
            for (Eigen::Index i = 0; i < rows; ++i) {
                std::istringstream row(next_data_line(in));
                double re = 0.0, im = 0.0;
                if (!(row >> re)) throw ParseError("bad array entry");
                if (h.complex_field && !(row >> im)) throw ParseError("bad complex entry");
                m(i, j) = Complex(re, im);
            }
        }
    }
    return m;
}

CMat read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return read_matrix(in);
}

}  // namespace unilog
