#include "unilog/locality.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "unilog/errors.hpp"

namespace unilog {

namespace {

void require_square(const CMat& m, int n) {
    if (m.rows() != m.cols() || m.rows() != n) {
        throw DimensionError("matrix is " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + ", graph has " + std::to_string(n) +
                             " vertices");
    }
}

// Fills kappa/kappa_residual from the profile already stored in the report.
void fit_kappa(LocalityReport& rep) {
    std::vector<double> xs, ys;
    for (const auto& p : rep.profile) {
        if (p.max_abs > 0.0) {
            xs.push_back(static_cast<double>(p.distance));
            ys.push_back(std::log(p.max_abs));
        }
    }
    const auto n = static_cast<double>(xs.size());
    if (xs.size() < static_cast<size_t>(kKappaMinPoints)) return;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double denom = n * sxx - sx * sx;
    if (denom <= 0.0) return;  // all points at one distance
    const double slope = (n * sxy - sx * sy) / denom;
    const double intercept = (sy - slope * sx) / n;
    double ss = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (intercept + slope * xs[i]);
        ss += r * r;
    }
    rep.kappa_residual = std::sqrt(ss / n);
    if (rep.kappa_residual <= kKappaResidualMax) rep.kappa = -slope;
}

}  // namespace

LocalityReport decay_profile(const CMat& m, const Graph& g) {
    const int n = g.vertex_count();
    require_square(m, n);
    LocalityReport rep;
    std::map<int, double> by_distance;
    for (int i = 0; i < n; ++i) {
        const std::vector<int> dist = distances_from(g, i);
        for (int j = 0; j < n; ++j) {
            const double a = std::abs(m(i, j));
            if (dist[j] == kUnreachable) {
                rep.unreachable_max = std::max(rep.unreachable_max, a);
            } else {
                auto [it, inserted] = by_distance.try_emplace(dist[j], a);
                if (!inserted) it->second = std::max(it->second, a);
            }
        }
    }
    rep.profile.reserve(by_distance.size());
    for (const auto& [d, v] : by_distance) rep.profile.push_back({d, v});
    fit_kappa(rep);
    return rep;
}

LocalityReport check_z_local(const CMat& m, const Graph& g, double tol) {
    const int n = g.vertex_count();
    require_square(m, n);
    LocalityReport rep = decay_profile(m, g);
    rep.predicate = "Z";
    rep.tol = tol;
    rep.passed = true;
    for (int i = 0; i < n && rep.passed; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j || g.has_edge(i, j)) continue;
            if (std::abs(m(i, j)) > tol) {
                rep.passed = false;
                break;
            }
        }
    }
    return rep;
}

bool check_c_local(const CMat& m, const Graph& g,
                   const std::vector<std::vector<int>>& partition, double tol,
                   std::span<const int> vertex_of) {
    const int dim = static_cast<int>(m.rows());
    if (m.cols() != dim) throw DimensionError("matrix must be square");
    const int n = g.vertex_count();
    if (vertex_of.empty()) {
        if (dim != n) {
            throw DimensionError("identity basis map needs dim == vertex count; pass vertex_of");
        }
    } else if (static_cast<int>(vertex_of.size()) != dim) {
        throw DimensionError("vertex_of must have one entry per basis index");
    }

    std::vector<int> part_of(dim, -1);
    for (size_t p = 0; p < partition.size(); ++p) {
        for (int idx : partition[p]) {
            if (idx < 0 || idx >= dim || part_of[idx] != -1) {
                throw InvalidPartitionError("partition must cover each basis index exactly once");
            }
            part_of[idx] = static_cast<int>(p);
        }
    }
    for (int idx = 0; idx < dim; ++idx) {
        if (part_of[idx] == -1) {
            throw InvalidPartitionError("partition must cover each basis index exactly once");
        }
    }

    auto vertex = [&](int idx) { return vertex_of.empty() ? idx : vertex_of[idx]; };
    for (const auto& part : partition) {
        std::vector<int> verts;
        for (int idx : part) {
            const int v = vertex(idx);
            if (v < 0 || v >= n) throw InvalidArgumentError("vertex_of entry out of range");
            if (std::find(verts.begin(), verts.end(), v) == verts.end()) verts.push_back(v);
        }
        if (verts.empty()) continue;
        if (verts.size() > 2) return false;
        if (verts.size() == 2 && !g.has_edge(verts[0], verts[1])) return false;
    }

    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            if (part_of[i] != part_of[j] && std::abs(m(i, j)) > tol) return false;
        }
    }
    return true;
}

}  // namespace unilog
