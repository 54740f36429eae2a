#include "unilog/trotter.hpp"

#include <cmath>
#include <utility>

#include "unilog/errors.hpp"
#include "unilog/opalg.hpp"

namespace unilog {

CMat adjacency_matrix(const Graph& g) {
    const int n = g.vertex_count();
    CMat a = CMat::Zero(n, n);
    for (const Edge& e : g.edges()) {
        a(e.tail(), e.head()) = 1.0;
        a(e.head(), e.tail()) = 1.0;
    }
    return a;
}

std::vector<TrotterFactor> TrotterPlan::step_factors() const {
    const int m = color_count();
    std::vector<TrotterFactor> out;
    out.reserve(2 * m);
    for (int j = 0; j < m; ++j) out.push_back({j, false});
    for (int j = m - 1; j >= 0; --j) out.push_back({j, true});
    return out;
}

int TrotterPlan::factor_count(bool include_residual) const {
    const int per_step = 2 * color_count();
    int n = per_step * steps;
    if (include_residual && residual_delta > 0.0) n += per_step;
    return n;
}

TrotterPlan make_trotter_plan(const Graph& g, double t, double delta) {
    if (!(delta > 0.0)) throw InvalidArgumentError("step size must be positive");
    TrotterPlan plan{g, edge_color(g), t, delta};
    plan.steps = static_cast<int>(std::floor(std::abs(t) / (2.0 * delta)));
    plan.residual_delta = 0.5 * (std::abs(t) - 2.0 * delta * plan.steps);
    for (const CMat& h : color_hamiltonians(g, plan.coloring)) {
        plan.lambda = std::max(plan.lambda, operator_norm(h));
    }
    return plan;
}

std::vector<CMat> color_hamiltonians(const Graph& g, const EdgeColoring& coloring) {
    if (!coloring.valid_for(g)) throw InvalidArgumentError("coloring does not match graph");
    const int n = g.vertex_count();
    std::vector<CMat> hams;
    hams.reserve(coloring.classes.size());
    for (const auto& cls : coloring.classes) {
        CMat h = CMat::Zero(n, n);
        for (const Edge& e : cls) {
            h(e.tail(), e.head()) = 1.0;
            h(e.head(), e.tail()) = 1.0;
        }
        hams.push_back(std::move(h));
    }
    return hams;
}

CMat factor_exponential(const CMat& h, double delta) {
    const auto n = h.rows();
    if (h.cols() != n) throw DimensionError("factor Hamiltonian must be square");
    std::vector<std::pair<int, int>> pairs;
    for (Eigen::Index i = 0; i < n; ++i) {
        int partner = -1;
        for (Eigen::Index j = 0; j < n; ++j) {
            const Complex v = h(i, j);
            if (v == Complex(0.0, 0.0)) continue;
            if (v != Complex(1.0, 0.0) || i == j || partner != -1) {
                throw InvalidArgumentError("not a matching Hamiltonian");
            }
            partner = static_cast<int>(j);
        }
        if (partner != -1 && h(partner, i) != Complex(1.0, 0.0)) {
            throw InvalidArgumentError("not a matching Hamiltonian");
        }
        if (partner > static_cast<int>(i)) pairs.emplace_back(static_cast<int>(i), partner);
    }
    CMat u = CMat::Identity(n, n);
    const double c = std::cos(delta);
    const Complex is(0.0, std::sin(delta));
    for (const auto& [a, b] : pairs) {
        u(a, a) = c;
        u(b, b) = c;
        u(a, b) = is;
        u(b, a) = is;
    }
    return u;
}

std::vector<std::vector<int>> matching_partition(const Graph& g, const std::vector<Edge>& cls) {
    const int n = g.vertex_count();
    std::vector<bool> matched(n, false);
    std::vector<std::vector<int>> parts;
    for (const Edge& e : cls) {
        parts.push_back({e.tail(), e.head()});
        matched[e.tail()] = matched[e.head()] = true;
    }
    for (int v = 0; v < n; ++v) {
        if (!matched[v]) parts.push_back({v});
    }
    return parts;
}

namespace {

// One symmetric step at step size d (signed): forward sweep, then mirror.
CMat symmetric_step(const std::vector<CMat>& hams, double d, Eigen::Index n) {
    CMat u = CMat::Identity(n, n);
    for (const CMat& h : hams) u = u * factor_exponential(h, d);
    for (auto it = hams.rbegin(); it != hams.rend(); ++it) {
        u = u * factor_exponential(*it, d);
    }
    return u;
}

}  // namespace

CMat trotter_product(const TrotterPlan& plan, bool include_residual) {
    const Eigen::Index n = plan.graph.vertex_count();
    const std::vector<CMat> hams = color_hamiltonians(plan.graph, plan.coloring);
    const double sign = plan.t < 0.0 ? -1.0 : 1.0;
    CMat result = CMat::Identity(n, n);
    if (plan.steps >= 1) {
        const CMat step = symmetric_step(hams, sign * plan.delta, n);
        for (int s = 0; s < plan.steps; ++s) result = result * step;
    }
    if (include_residual && plan.residual_delta > 0.0) {
        result = result * symmetric_step(hams, sign * plan.residual_delta, n);
    }
    return result;
}

TrotterError trotter_error(const TrotterPlan& plan) {
    const CMat exact = hermitian_exp(adjacency_matrix(plan.graph), plan.t);
    const double m = plan.color_count();
    const double lam = plan.lambda;
    TrotterError err{};
    err.err_truncated = operator_norm(trotter_product(plan, false) - exact);
    err.err_full = operator_norm(trotter_product(plan, true) - exact);
    err.bound_first = m * lam * plan.delta;
    err.bound_second = m * lam * lam * lam * std::abs(plan.t) * plan.delta * plan.delta;
    return err;
}

}  // namespace unilog
