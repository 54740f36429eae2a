#pragma once

#include <vector>

#include "unilog/graph.hpp"
#include "unilog/types.hpp"

namespace unilog {

// Adjacency matrix of g as a dense Hermitian 0/1 matrix.
CMat adjacency_matrix(const Graph& g);

// One factor slot inside a symmetric step: class h_{class_index}, applied in
// the forward sweep or in the mirrored second sweep.
struct TrotterFactor {
    int class_index;
    bool second_sweep;
};

// Symmetric-product plan for e^{itA}: steps whole steps of size δ cover
// 2δ·steps of |t|; the remainder is one more symmetric step at
// residual_delta (0 when t divides evenly).
struct TrotterPlan {
    Graph graph;
    EdgeColoring coloring;
    double t = 0.0;
    double delta = 0.0;
    int steps = 0;
    double residual_delta = 0.0;
    double lambda = 0.0;  // max_j ‖h_j‖∞, ≤ 2 on simple graphs

    int color_count() const { return coloring.color_count(); }

    // The 2m factor slots of one step, forward sweep then mirrored sweep.
    std::vector<TrotterFactor> step_factors() const;

    // 2·m·steps, plus one more step's worth when the residual is included.
    int factor_count(bool include_residual) const;
};

TrotterPlan make_trotter_plan(const Graph& g, double t, double delta);

// h_j = Σ_{e ∈ class_j} (|e⁺⟩⟨e⁻| + h.c.); the h_j sum to the adjacency
// matrix exactly and each is a matching Hamiltonian.
std::vector<CMat> color_hamiltonians(const Graph& g, const EdgeColoring& coloring);

// e^{iδh} in closed form: the rotation [[cos δ, i sin δ], [i sin δ, cos δ]]
// on each matched pair, identity elsewhere. Rejects h that is not a 0/1
// matching Hamiltonian.
CMat factor_exponential(const CMat& h, double delta);

// Partition of basis indices induced by a color class: pairs for matched
// vertices, singletons for the rest. The partition a factor is C-local for.
std::vector<std::vector<int>> matching_partition(const Graph& g, const std::vector<Edge>& cls);

// The assembled product. include_residual = false gives the plain U_δ^steps
// covering 2δ·steps of time; true appends the residual symmetric step so the
// product targets e^{itA} itself.
CMat trotter_product(const TrotterPlan& plan, bool include_residual = false);

struct TrotterError {
    double err_truncated;  // ‖U_δ^steps − e^{itA}‖∞
    double err_full;       // same with the residual step appended
    double bound_first;    // m·Λ·δ, the bound's first term at unit constant
    double bound_second;   // m·Λ³·|t|·δ², the second term at unit constant
};

// Measured spectral-norm error of both product variants against the dense
// e^{itA}, alongside the two bound terms.
TrotterError trotter_error(const TrotterPlan& plan);

}  // namespace unilog
