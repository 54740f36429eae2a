#include "unilog/models.hpp"

#include <cmath>
#include <random>

#include "unilog/errors.hpp"
#include "unilog/opalg.hpp"

namespace unilog {

CoinedWalk build_coined_walk(int n) {
    if (n < 3) throw InvalidArgumentError("ring size must be at least 3");
    const double r = 1.0 / std::sqrt(2.0);
    CMat u = CMat::Zero(2 * n, 2 * n);
    for (int p = 0; p < n; ++p) {
        const int prev = (p + n - 1) % n;
        const int next = (p + 1) % n;
        // coin 0 rows walk forward and keep H's +,+ column signs; coin 1
        // rows walk backward with the +,− signs.
        u(0 * n + p, 0 * n + prev) = r;
        u(0 * n + p, 1 * n + prev) = r;
        u(1 * n + p, 0 * n + next) = r;
        u(1 * n + p, 1 * n + next) = -r;
    }

    std::vector<Edge> edges;
    edges.reserve(5 * n);
    for (int p = 0; p < n; ++p) {
        const int next = (p + 1) % n;
        edges.push_back({0 * n + p, 0 * n + next});
        edges.push_back({1 * n + p, 1 * n + next});
        edges.push_back({0 * n + p, 1 * n + next});
        edges.push_back({1 * n + p, 0 * n + next});
        edges.push_back({0 * n + p, 1 * n + p});
    }
    CoinedWalk walk{n, std::move(u), Graph(2 * n, std::move(edges)), {}};
    walk.vertex_of.resize(2 * n);
    for (int i = 0; i < 2 * n; ++i) walk.vertex_of[i] = i % n;
    return walk;
}

Complex walk_spectrum_formula(int n, int k, int sign) {
    if (k < 0 || k >= n) throw InvalidArgumentError("momentum index out of range");
    if (sign != 1 && sign != -1) throw InvalidArgumentError("sign must be +1 or -1");
    const double angle = kTwoPi * k / n;
    const double s = std::sin(angle);
    const double c = std::cos(angle);
    // Momentum block (1/sqrt2) [[w, w], [w*, -w*]] with w = e^{-i angle} has
    // trace -i sqrt2 s and determinant -1, so lambda^2 + i sqrt2 s lambda - 1 = 0.
    return Complex(sign * std::sqrt((1.0 + c * c) / 2.0), -s / std::sqrt(2.0));
}

SpectralGap walk_gap_check(int n) {
    if (n < 3) throw InvalidArgumentError("ring size must be at least 3");
    RVec phases(2 * n);
    for (int k = 0; k < n; ++k) {
        phases(2 * k) = phase_mod_2pi(std::arg(walk_spectrum_formula(n, k, +1)));
        phases(2 * k + 1) = phase_mod_2pi(std::arg(walk_spectrum_formula(n, k, -1)));
    }
    const SpectralGap gap = find_gap(phases);
    if (gap.width < kPi / 2.0 - 1e-9) {
        throw Error("walk gap " + format_g17(gap.width) + " fell below pi/2");
    }
    return gap;
}

FourierOp build_fourier_op(int n) {
    if (n < 2) throw InvalidArgumentError("dimension must be at least 2");
    FourierOp op;
    op.n = n;
    op.q.resize(n, n);
    const double r = 1.0 / std::sqrt(static_cast<double>(n));
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            // j·k reduced mod n before the angle to keep the argument small.
            op.q(j, k) = r * std::polar(1.0, kTwoPi * ((j * k) % n) / n);
        }
    }
    return op;
}

CMat fractional_fourier(FourierOp& op, double alpha, double eps) {
    if (!(eps > 0.0)) throw InvalidArgumentError("accuracy target must be positive");
    if (!op.f || op.f_eps > eps / 4.0) {
        LogSeriesResult res = build_log_series(op.q, eps / 4.0);
        op.f = std::move(res.J);
        op.f_series = res.series;
        op.f_eps = eps / 4.0;
    }
    const auto n = op.q.rows();
    const CMat branch = *op.f - op.f_series->gap.zeta * CMat::Identity(n, n);
    return hermitian_exp(branch, alpha);
}

CMat random_gapped_unitary(int n, double delta, std::uint64_t seed) {
    if (n < 1) throw InvalidArgumentError("dimension must be positive");
    if (!(delta > 0.0 && delta < kTwoPi)) throw InvalidArgumentError("gap must lie in (0, 2pi)");
    std::mt19937_64 rng(seed);
    // (0, 1] with 53-bit resolution; keeps log() in Box-Muller finite.
    auto uniform = [&rng]() { return ((rng() >> 11) + 1.0) * 0x1.0p-53; };
    auto gaussian_pair = [&]() {
        const double u1 = uniform();
        const double u2 = uniform();
        const double m = std::sqrt(-2.0 * std::log(u1));
        return Complex(m * std::cos(kTwoPi * u2), m * std::sin(kTwoPi * u2));
    };

    CMat a(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a(i, j) = gaussian_pair();
    }
    Eigen::HouseholderQR<CMat> qr(a);
    CMat q = qr.householderQ() * CMat::Identity(n, n);
    const CMat r_mat = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) {
        const Complex d = r_mat(j, j);
        if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
    }

    CVec eigs(n);
    for (int j = 0; j < n; ++j) {
        eigs(j) = std::polar(1.0, 0.5 * delta + uniform() * (kTwoPi - delta));
    }
    return q * eigs.asDiagonal() * q.adjoint();
}

}  // namespace unilog
