#pragma once

#include <optional>
#include <vector>

#include "unilog/graph.hpp"
#include "unilog/logseries.hpp"
#include "unilog/specgap.hpp"
#include "unilog/types.hpp"

namespace unilog {

// Coined walk on the n-ring: U = (|0⟩⟨0|⊗T + |1⟩⟨1|⊗T†)(H_coin⊗I) with
// coin-major basis index c·n + p. basis_graph is the doubled ring on the 2n
// basis states (positions adjacent to ring neighbors across all coin
// combinations, the two coin states of one position joined); U is Z-local on
// it. vertex_of folds basis states back onto the n ring vertices for checks
// that treat the pair as one site.
struct CoinedWalk {
    int n;
    CMat u;
    Graph basis_graph;
    std::vector<int> vertex_of;
};

CoinedWalk build_coined_walk(int n);

// λ_k^± = ±√((1 + cos²(2πk/n))/2) − (i/√2)·sin(2πk/n); sign is +1 or −1.
// |Re λ| ≥ 1/√2, so the spectrum stays clear of the imaginary axis and the
// arcs around ±i are eigenvalue free with width at least π/2.
Complex walk_spectrum_formula(int n, int k, int sign);

// find_gap over the 2n closed-form eigenphases. Throws if the measured gap
// falls below π/2 − 1e−9, which the eigenvalue formula rules out.
SpectralGap walk_gap_check(int n);

// Q_{j,k} = e^{2πijk/n}/√n with the series logarithm cached lazily by
// fractional_fourier. The lazy fill is the one non-reentrant step.
struct FourierOp {
    int n = 0;
    CMat q;
    std::optional<CMat> f;  // J from build_log_series at accuracy f_eps
    std::optional<LogSeries> f_series;
    double f_eps = 0.0;
};

FourierOp build_fourier_op(int n);

// Q^α = e^{iα(F − ζI)} along the gap-centered branch; the cached F is
// (re)built at accuracy eps/4 when missing or too loose. α = 0 gives I to
// machine precision, α = 1 recovers Q within eps.
CMat fractional_fourier(FourierOp& op, double alpha, double eps);

// Haar-like eigenvectors (QR of a seeded Gaussian matrix) with eigenphases
// uniform on [Δ/2, 2π − Δ/2], so the gap around 0 is at least delta by
// construction. Bit-reproducible for a fixed seed.
CMat random_gapped_unitary(int n, double delta, std::uint64_t seed);

}  // namespace unilog
