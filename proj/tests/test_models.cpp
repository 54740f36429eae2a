#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "unilog/errors.hpp"
#include "unilog/locality.hpp"
#include "unilog/models.hpp"
#include "unilog/opalg.hpp"
#include "unilog/specgap.hpp"
#include "unilog/types.hpp"

using namespace unilog;

namespace {

// Multiset comparison of phases on the circle.
void require_phases_match(RVec got, std::vector<double> want, double tol) {
    REQUIRE(static_cast<size_t>(got.size()) == want.size());
    std::vector<double> g(got.data(), got.data() + got.size());
    for (double& p : g) p = phase_mod_2pi(p);
    for (double& p : want) p = phase_mod_2pi(p);
    std::sort(g.begin(), g.end());
    std::sort(want.begin(), want.end());
    // A wrap mismatch (0 vs 2π−ε) would break pairing; phase_distance guards it.
    for (size_t i = 0; i < want.size(); ++i) {
        CHECK(phase_distance(g[i], want[i]) <= tol);
    }
}

}  // namespace

TEST_CASE("coined walk is unitary with the stated entries") {
    const CoinedWalk walk = build_coined_walk(5);
    const int n = 5;
    CHECK(walk.u.rows() == 2 * n);
    CHECK(unitary_defect(walk.u) <= 1e-14);
    const double r = 1.0 / std::sqrt(2.0);
    for (int p = 0; p < n; ++p) {
        const int prev = (p + n - 1) % n;
        const int next = (p + 1) % n;
        CHECK(walk.u(p, prev) == Complex(r, 0.0));
        CHECK(walk.u(p, n + prev) == Complex(r, 0.0));
        CHECK(walk.u(n + p, next) == Complex(r, 0.0));
        CHECK(walk.u(n + p, n + next) == Complex(-r, 0.0));
    }
    // Exactly 2 entries per row (the checks above account for all of them),
    // so 2·2n nonzeros total.
    int nonzeros = 0;
    for (int i = 0; i < 2 * n; ++i) {
        for (int j = 0; j < 2 * n; ++j) {
            if (walk.u(i, j) != Complex(0.0, 0.0)) ++nonzeros;
        }
    }
    CHECK(nonzeros == 2 * 2 * n);
    CHECK_THROWS_AS(build_coined_walk(2), InvalidArgumentError);
}

TEST_CASE("walk basis graph carries the walk support") {
    const CoinedWalk walk = build_coined_walk(6);
    CHECK(walk.basis_graph.vertex_count() == 12);
    CHECK(walk.basis_graph.edge_count() == 5 * 6);
    CHECK(check_z_local(walk.u, walk.basis_graph, 0.0).passed);
    REQUIRE(walk.vertex_of.size() == 12);
    for (int i = 0; i < 12; ++i) CHECK(walk.vertex_of[i] == i % 6);
}

TEST_CASE("walk spectrum matches the closed form") {
    for (int n : {5, 8}) {
        const CoinedWalk walk = build_coined_walk(n);
        const UnitaryEigensystem sys = unitary_eigensystem(walk.u);
        std::vector<double> want;
        for (int k = 0; k < n; ++k) {
            for (int sign : {+1, -1}) {
                const Complex lam = walk_spectrum_formula(n, k, sign);
                CHECK(std::abs(std::abs(lam) - 1.0) <= 1e-12);
                want.push_back(std::arg(lam));
            }
        }
        require_phases_match(sys.phases, want, 1e-9);
    }
}

TEST_CASE("walk eigenvalues avoid the imaginary axis") {
    for (int n : {5, 6, 9}) {
        for (int k = 0; k < n; ++k) {
            for (int sign : {1, -1}) {
                CHECK(std::abs(walk_spectrum_formula(n, k, sign).real()) >=
                      1.0 / std::sqrt(2.0) - 1e-12);
            }
        }
    }
}

TEST_CASE("walk gap check meets the pi/2 floor") {
    for (int n : {5, 6, 8, 12, 20}) {
        const SpectralGap gap = walk_gap_check(n);
        CHECK(gap.width >= kPi / 2.0 - 1e-9);
    }
    CHECK_THROWS_AS(walk_gap_check(2), InvalidArgumentError);
}

TEST_CASE("fourier matrix entries and unitarity") {
    const FourierOp op = build_fourier_op(4);
    CHECK(unitary_defect(op.q) <= 1e-14);
    CHECK(op.q(0, 0) == Complex(0.5, 0.0));
    CHECK(std::abs(op.q(1, 1) - Complex(0.0, 0.5)) <= 1e-15);
    CHECK(std::abs(op.q(1, 2) - Complex(-0.5, 0.0)) <= 1e-15);
    CHECK(std::abs(op.q(3, 3) - Complex(0.0, 0.5)) <= 1e-15);
    CHECK_FALSE(op.f.has_value());
    CHECK_THROWS_AS(build_fourier_op(1), InvalidArgumentError);
}

TEST_CASE("fourier fourth power is the identity") {
    for (int n : {2, 4, 8}) {
        const FourierOp op = build_fourier_op(n);
        const CMat q2 = op.q * op.q;
        CHECK(operator_norm(q2 * q2 - CMat::Identity(n, n)) <= 1e-12);
        // Eigenphases sit on multiples of π/2.
        const UnitaryEigensystem sys = unitary_eigensystem(op.q);
        for (Eigen::Index i = 0; i < sys.phases.size(); ++i) {
            const double nearest = std::round(sys.phases(i) / (kPi / 2.0)) * (kPi / 2.0);
            CHECK(phase_distance(sys.phases(i), nearest) <= 1e-9);
        }
    }
}

TEST_CASE("fractional fourier endpoints and composition") {
    FourierOp op = build_fourier_op(8);
    const double eps = 1e-6;
    CHECK(operator_norm(fractional_fourier(op, 0.0, eps) - CMat::Identity(8, 8)) <= 1e-12);
    CHECK(operator_norm(fractional_fourier(op, 1.0, eps) - op.q) <= eps);
    const CMat half = fractional_fourier(op, 0.5, eps);
    CHECK(operator_norm(half * half - op.q) <= 4.0 * eps);
    CHECK(unitary_defect(half) <= 1e-10);
    // Thirds compose as well.
    const CMat third = fractional_fourier(op, 1.0 / 3.0, eps);
    CHECK(operator_norm(third * third * third - op.q) <= 6.0 * eps);
}

TEST_CASE("fractional fourier reuses and refreshes its cache") {
    FourierOp op = build_fourier_op(4);
    fractional_fourier(op, 0.5, 1e-4);
    REQUIRE(op.f.has_value());
    CHECK(op.f_eps == 1e-4 / 4.0);
    const CMat cached = *op.f;
    fractional_fourier(op, 0.25, 1e-3);  // looser target: cache stays
    CHECK(op.f_eps == 1e-4 / 4.0);
    CHECK(operator_norm(*op.f - cached) == 0.0);
    fractional_fourier(op, 0.25, 1e-8);  // tighter target: cache rebuilt
    CHECK(op.f_eps == 1e-8 / 4.0);
    CHECK_THROWS_AS(fractional_fourier(op, 0.5, 0.0), InvalidArgumentError);
}

TEST_CASE("random gapped unitary is reproducible and gapped") {
    const CMat a = random_gapped_unitary(12, 1.0, 2024);
    const CMat b = random_gapped_unitary(12, 1.0, 2024);
    CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);  // bitwise identical
    const CMat c = random_gapped_unitary(12, 1.0, 2025);
    CHECK((a - c).cwiseAbs().maxCoeff() > 1e-3);

    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        for (double delta : {0.5, 1.0, 2.0}) {
            const CMat u = random_gapped_unitary(10, delta, seed);
            CHECK(unitary_defect(u) <= 1e-13);
            CHECK(find_gap(u).width >= delta - 1e-9);
        }
    }
    CHECK_THROWS_AS(random_gapped_unitary(0, 1.0, 1), InvalidArgumentError);
    CHECK_THROWS_AS(random_gapped_unitary(4, 0.0, 1), InvalidArgumentError);
    CHECK_THROWS_AS(random_gapped_unitary(4, 7.0, 1), InvalidArgumentError);
}
