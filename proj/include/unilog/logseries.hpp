#pragma once

#include <optional>

#include "unilog/graph.hpp"
#include "unilog/locality.hpp"
#include "unilog/mollifier.hpp"
#include "unilog/specgap.hpp"
#include "unilog/types.hpp"

namespace unilog {

struct LogSeriesOptions {
    double gamma_fraction = 0.45;  // γ = fraction·Δ; must stay ≤ 0.5 for g = f on spectrum
    double gap_threshold = 1e-3;   // refuse below this Δ
    int k_table_initial = 128;
    int k_table_cap = 4096;
};

// The truncated series J_K = Σ_{|j|≤K} d_j W^j, W = e^{iζ}u, together with
// its certificate. tail is a bound on ‖H − J_K‖∞ over every unitary with
// the given gap; err_unitary and err_vs_oracle are measured afterwards.
struct LogSeries {
    int K = 0;
    double gamma = 0.0;
    SpectralGap gap;
    double tail = 0.0;            // τ(K), certified bound
    double tail_remainder = 0.0;  // heuristic extrapolated share of tail
    double unitary_defect = 0.0;  // measured on the input u
    double err_unitary = 0.0;     // ‖u − e^{−iζ}e^{iJ}‖∞
    std::optional<double> err_vs_oracle;  // ‖H_oracle − J‖∞ when computed
};

struct LogSeriesResult {
    CMat J;
    LogSeries series;
};

// Full pipeline: find the gap, center, pick K as the smallest order with
// tail_bound(K) ≤ eps, and sum the series. The coefficient table grows
// in doublings from k_table_initial to k_table_cap before refusing.
LogSeriesResult build_log_series(const CMat& u, double eps,
                                 const LogSeriesOptions& opts = {});

// Same series at a fixed order K over a fixed coefficient table; no
// certificate search. For studies of the K-dependence.
CMat truncated_series(const CMat& u, const SpectralGap& gap, const FourierLayer& layer, int K);

// Adaptive truncation order for a hypothetical unitary of gap delta, plus
// the analytic guideline 1/(eps²·delta) it is compared against in reports.
struct TruncationOrder {
    int K;
    double guideline;
};
TruncationOrder truncation_order(double delta, double eps, const LogSeriesOptions& opts = {});

// Containment check of J against reach_pattern(g, K) with allowance
// n·K·1e−12, plus the decay profile. Throws when containment fails, which
// indicates a bug rather than an approximation failure.
LocalityReport sparsity_report(const LogSeries& series, const CMat& J, const Graph& g);

// V = e^{−iζ}·e^{iJ}, the unitary that approximates the original u.
CMat approximate_unitary(const CMat& J, const LogSeries& series);

}  // namespace unilog
