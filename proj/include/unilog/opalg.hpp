#pragma once

#include "unilog/types.hpp"

namespace unilog {

// Eigendecomposition of a unitary matrix. phases are sorted ascending in
// [0, 2π) with arg(1) = 0; vectors holds the eigenvector columns in the same
// order; residual = max_j ‖U·vec_j − e^{iφ_j}·vec_j‖₂ as measured, never
// assumed zero.
struct UnitaryEigensystem {
    RVec phases;
    CMat vectors;
    double residual = 0.0;
};

// Largest singular value (the spectral norm).
double operator_norm(const CMat& m);

// ‖u†u − I‖∞, the distance from unitarity.
double unitary_defect(const CMat& u);

// ‖h − h†‖∞, the distance from Hermiticity.
double hermitian_defect(const CMat& h);

// Requires unitary_defect(u) ≤ 1e−8. Near-degenerate phase clusters (spacing
// ≤ 1e−8) get their eigenvector columns re-orthonormalized so degeneracy
// never costs unitarity of the eigenvector matrix.
UnitaryEigensystem unitary_eigensystem(const CMat& u);

// e^{i·scale·h} for Hermitian h (defect ≤ 1e−10); result unitary to 1e−10.
CMat hermitian_exp(const CMat& h, double scale);

// Effective Hamiltonian of the centered unitary: H = Σ φ_j |j⟩⟨j| over the
// eigensystem of e^{iζ}u, phases taken in [0, 2π). Throws BranchCutError when
// any eigenphase of e^{iζ}u lies within 1e−8 of the cut at 0; a log of u
// itself is H − ζ·I.
CMat oracle_log(const CMat& u, double zeta);

inline constexpr double kUnitaryTol = 1e-8;
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kBranchCutTol = 1e-8;
inline constexpr double kPhaseClusterTol = 1e-8;

}  // namespace unilog
