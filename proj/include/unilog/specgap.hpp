#pragma once

#include "unilog/opalg.hpp"
#include "unilog/types.hpp"

namespace unilog {

// Widest eigenvalue-free arc on the unit circle. zeta rotates the arc
// midpoint to phase 0: e^{iζ}U has no eigenphase in (−Δ/2, Δ/2) mod 2π.
struct SpectralGap {
    double arc_start = 0.0;  // α, last eigenphase before the arc
    double arc_end = 0.0;    // β = α + Δ, possibly ≥ 2π when the arc wraps
    double width = 0.0;      // Δ ∈ (0, 2π]
    double zeta = 0.0;       // 2π − midpoint(α, β) mod 2π
};

// Widest empty circular arc over the given eigenphases (each in [0, 2π),
// order not required). Duplicates within 1e−10 are merged first; ties on
// width resolve to the arc with the smallest start phase.
SpectralGap find_gap(const RVec& phases);

// find_gap over the eigenphases of u.
SpectralGap find_gap(const CMat& u);

// e^{iζ}u; the recomputed gap of the result is centered at 0 within 1e−9.
CMat center_unitary(const CMat& u, const SpectralGap& gap);

inline constexpr double kPhaseDedupeTol = 1e-10;
inline constexpr double kGapTieTol = 1e-12;

}  // namespace unilog
