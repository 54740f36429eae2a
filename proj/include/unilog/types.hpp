#pragma once

#include <charconv>
#include <cmath>
#include <complex>
#include <string>

#include <Eigen/Dense>

namespace unilog {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;
using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Maps x into [0, 2π). The result is never 2π itself, even when x sits a
// rounding error below a multiple of 2π.
inline double phase_mod_2pi(double x) {
    double r = x - kTwoPi * std::floor(x / kTwoPi);
    if (r >= kTwoPi) r = 0.0;
    if (r < 0.0) r += kTwoPi;
    return r;
}

// Circular distance between two phases, in [0, π].
inline double phase_distance(double a, double b) {
    double d = phase_mod_2pi(a - b);
    return std::min(d, kTwoPi - d);
}

// Locale-independent decimal rendering with 17 significant digits, enough to
// round-trip any double.
inline std::string format_g17(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, end);
}

}  // namespace unilog
