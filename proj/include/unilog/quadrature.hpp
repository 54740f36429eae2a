#pragma once

#include <array>
#include <cmath>
#include <type_traits>

#include "unilog/errors.hpp"
#include "unilog/types.hpp"

namespace unilog {

namespace detail {

inline constexpr int kGaussOrder = 16;

struct GaussRule {
    std::array<double, kGaussOrder> x;
    std::array<double, kGaussOrder> w;
};

// Nodes are the roots of P_16 by Newton iteration; weights via the
// derivative identity P'_n(x) = n(x·P_n − P_{n−1})/(x² − 1).
inline const GaussRule& gauss_rule() {
    static const GaussRule rule = [] {
        GaussRule r{};
        constexpr int n = kGaussOrder;
        for (int i = 0; i < n; ++i) {
            double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 64; ++it) {
                const double p = std::legendre(n, z);
                const double pm = std::legendre(n - 1, z);
                dp = n * (z * p - pm) / (z * z - 1.0);
                const double dz = p / dp;
                z -= dz;
                if (std::abs(dz) < 1e-16) break;
            }
            r.x[i] = z;
            r.w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
        }
        return r;
    }();
    return rule;
}

}  // namespace detail

// ∫_a^b f by composite Gauss–Legendre, doubling the panel count until two
// successive refinements agree within abs_tol. f maps double to double or
// to Complex. min_panels forces a floor on the first refinement so an
// oscillatory integrand cannot alias into false agreement on coarse panels.
template <class F>
auto integrate(F&& f, double a, double b, double abs_tol = 1e-13, int min_panels = 1,
               int max_panels = 1 << 16) {
    using R = std::invoke_result_t<F&, double>;
    const auto& rule = detail::gauss_rule();
    auto composite = [&](int npan) {
        R total{};
        const double h = (b - a) / npan;
        for (int p = 0; p < npan; ++p) {
            const double mid = a + (p + 0.5) * h;
            R panel{};
            for (int i = 0; i < detail::kGaussOrder; ++i) {
                panel += f(mid + 0.5 * h * rule.x[i]) * rule.w[i];
            }
            total += panel * (0.5 * h);
        }
        return total;
    };
    int start = 1;
    while (start < min_panels && start < max_panels) start *= 2;
    R prev = composite(start);
    for (int npan = 2 * start; npan <= max_panels; npan *= 2) {
        const R cur = composite(npan);
        if (std::abs(cur - prev) <= abs_tol) return cur;
        prev = cur;
    }
    throw QuadratureError("quadrature did not reach tolerance " + std::to_string(abs_tol));
}

}  // namespace unilog
