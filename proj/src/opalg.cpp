#include "unilog/opalg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "unilog/errors.hpp"

namespace unilog {

double operator_norm(const CMat& m) {
    if (m.rows() == 0) return 0.0;
    Eigen::JacobiSVD<CMat> svd(m);
    return svd.singularValues()(0);
}

double unitary_defect(const CMat& u) {
    if (u.rows() != u.cols()) throw DimensionError("unitary_defect needs a square matrix");
    return operator_norm(u.adjoint() * u - CMat::Identity(u.rows(), u.cols()));
}

double hermitian_defect(const CMat& h) {
    if (h.rows() != h.cols()) throw DimensionError("hermitian_defect needs a square matrix");
    return operator_norm(h - h.adjoint());
}

UnitaryEigensystem unitary_eigensystem(const CMat& u) {
    const double defect = unitary_defect(u);
    if (defect > kUnitaryTol) throw NotUnitaryError(defect);
    const auto n = u.rows();

    // Schur of a normal matrix: T is diagonal up to roundoff and the Schur
    // basis is an orthonormal eigenbasis.
    Eigen::ComplexSchur<CMat> schur(u, /*computeU=*/true);
    if (schur.info() != Eigen::Success) throw Error("Schur iteration failed to converge");

    RVec phases(n);
    for (Eigen::Index j = 0; j < n; ++j) phases(j) = phase_mod_2pi(std::arg(schur.matrixT()(j, j)));

    std::vector<Eigen::Index> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index a, Eigen::Index b) { return phases(a) < phases(b); });

    UnitaryEigensystem sys;
    sys.phases.resize(n);
    sys.vectors.resize(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        sys.phases(j) = phases(order[j]);
        sys.vectors.col(j) = schur.matrixU().col(order[j]);
    }

    // Re-orthonormalize within near-degenerate phase clusters; distinct
    // eigenspaces are orthogonal already, so per-cluster QR restores global
    // unitarity lost to roundoff inside degenerate blocks.
    Eigen::Index lo = 0;
    while (lo < n) {
        Eigen::Index hi = lo + 1;
        while (hi < n && sys.phases(hi) - sys.phases(hi - 1) <= kPhaseClusterTol) ++hi;
        if (hi - lo > 1) {
            Eigen::HouseholderQR<CMat> qr(sys.vectors.middleCols(lo, hi - lo));
            sys.vectors.middleCols(lo, hi - lo) =
                qr.householderQ() * CMat::Identity(n, hi - lo);
        }
        lo = hi;
    }

    sys.residual = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
        const Complex lambda = std::polar(1.0, sys.phases(j));
        sys.residual =
            std::max(sys.residual, (u * sys.vectors.col(j) - lambda * sys.vectors.col(j)).norm());
    }
    return sys;
}

CMat hermitian_exp(const CMat& h, double scale) {
    const double defect = hermitian_defect(h);
    if (defect > kHermitianTol) throw NotHermitianError(defect);
    const CMat sym = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<CMat> es(sym);
    if (es.info() != Eigen::Success) throw Error("Hermitian eigensolver failed to converge");
    const auto n = h.rows();
    CVec expvals(n);
    for (Eigen::Index j = 0; j < n; ++j) expvals(j) = std::polar(1.0, scale * es.eigenvalues()(j));
    return es.eigenvectors() * expvals.asDiagonal() * es.eigenvectors().adjoint();
}

CMat oracle_log(const CMat& u, double zeta) {
    const CMat w = std::polar(1.0, zeta) * u;
    const UnitaryEigensystem sys = unitary_eigensystem(w);
    double nearest = kTwoPi;
    double nearest_phase = 0.0;
    for (Eigen::Index j = 0; j < sys.phases.size(); ++j) {
        const double d = phase_distance(sys.phases(j), 0.0);
        if (d < nearest) {
            nearest = d;
            nearest_phase = sys.phases(j);
        }
    }
    if (nearest <= kBranchCutTol) throw BranchCutError(nearest_phase);
    CMat h = sys.vectors * sys.phases.cast<Complex>().asDiagonal() * sys.vectors.adjoint();
    return 0.5 * (h + h.adjoint());
}

}  // namespace unilog
