#include "unilog/logseries.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "unilog/errors.hpp"
#include "unilog/opalg.hpp"

namespace unilog {

namespace {

// J_K = d_0·I + Σ_{j=1..K} (d_j W^j + h.c.); pairing j with −j keeps the
// accumulated sum Hermitian exactly, not just to roundoff.
CMat sum_series(const CMat& w, const FourierLayer& layer, int K) {
    const auto n = w.rows();
    CMat j_sum = layer.smoothed_coeff(0).real() * CMat::Identity(n, n);
    CMat power = CMat::Identity(n, n);
    for (int j = 1; j <= K; ++j) {
        power = power * w;
        const CMat term = layer.smoothed_coeff(j) * power;
        j_sum += term + term.adjoint().eval();
    }
    return j_sum;
}

// Grows the coefficient table by doublings until the tail certificate can
// reach eps; returns the table and the smallest certified K.
std::pair<FourierLayer, int> certify_order(double gamma, double eps,
                                           const LogSeriesOptions& opts) {
    double best_tail = -1.0;
    int k_table = opts.k_table_initial;
    while (k_table <= opts.k_table_cap) {
        FourierLayer layer(gamma, k_table);
        if (k_table >= FourierLayer::decay_onset(gamma)) {
            const int K = layer.min_certifiable(eps);
            if (K >= 0) return {std::move(layer), K};
            best_tail = layer.tail_bound(k_table - 1);
        }
        k_table *= 2;
    }
    throw TailNotCertifiableError(best_tail, opts.k_table_cap);
}

void validate_options(double eps, const LogSeriesOptions& opts) {
    if (!(eps > 0.0)) throw InvalidArgumentError("accuracy target must be positive");
    if (!(opts.gamma_fraction > 0.0 && opts.gamma_fraction <= 0.5)) {
        throw InvalidArgumentError("gamma_fraction must lie in (0, 0.5]");
    }
    if (opts.k_table_initial < 2 || opts.k_table_cap < opts.k_table_initial) {
        throw InvalidArgumentError("coefficient table bounds are inconsistent");
    }
}

}  // namespace

LogSeriesResult build_log_series(const CMat& u, double eps, const LogSeriesOptions& opts) {
    validate_options(eps, opts);
    const double defect = unitary_defect(u);
    if (defect > kUnitaryTol) throw NotUnitaryError(defect);

    const UnitaryEigensystem sys = unitary_eigensystem(u);
    const SpectralGap gap = find_gap(sys.phases);
    if (gap.width < opts.gap_threshold) throw GapTooSmallError(gap.width);

    const double gamma = opts.gamma_fraction * gap.width;
    auto [layer, K] = certify_order(gamma, eps, opts);

    LogSeriesResult out;
    out.series.K = K;
    out.series.gamma = gamma;
    out.series.gap = gap;
    out.series.tail = layer.tail_bound(K);
    out.series.tail_remainder = layer.tail_remainder();
    out.series.unitary_defect = defect;
    out.J = sum_series(center_unitary(u, gap), layer, K);
    out.series.err_unitary = operator_norm(u - approximate_unitary(out.J, out.series));
    return out;
}

CMat truncated_series(const CMat& u, const SpectralGap& gap, const FourierLayer& layer, int K) {
    if (K < 0 || K > layer.k_max()) throw InvalidArgumentError("order beyond table");
    return sum_series(center_unitary(u, gap), layer, K);
}

TruncationOrder truncation_order(double delta, double eps, const LogSeriesOptions& opts) {
    validate_options(eps, opts);
    if (!(delta > 0.0)) throw InvalidArgumentError("gap must be positive");
    if (delta < opts.gap_threshold) throw GapTooSmallError(delta);
    auto [layer, K] = certify_order(opts.gamma_fraction * delta, eps, opts);
    return {K, 1.0 / (eps * eps * delta)};
}

LocalityReport sparsity_report(const LogSeries& series, const CMat& J, const Graph& g) {
    const int n = g.vertex_count();
    if (J.rows() != n || J.cols() != n) {
        throw DimensionError("series matrix does not match the sparsity graph");
    }
    const SparsityPattern reach = reach_pattern(SparsityPattern::adjacency(g), series.K);
    const double allowance = static_cast<double>(n) * series.K * 1e-12;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!reach.test(i, j) && std::abs(J(i, j)) > allowance) {
                throw Error("containment violated at (" + std::to_string(i) + ", " +
                            std::to_string(j) + "): |entry| = " + format_g17(std::abs(J(i, j))));
            }
        }
    }
    LocalityReport rep = decay_profile(J, g);
    rep.predicate = "containment";
    rep.tol = allowance;
    rep.passed = true;
    return rep;
}

CMat approximate_unitary(const CMat& J, const LogSeries& series) {
    return std::polar(1.0, -series.gap.zeta) * hermitian_exp(J, 1.0);
}

}  // namespace unilog
