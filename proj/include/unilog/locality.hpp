#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unilog/graph.hpp"
#include "unilog/types.hpp"

namespace unilog {

struct DecayPoint {
    int distance;
    double max_abs;  // largest |entry| over index pairs at this graph distance
};

// Outcome of a locality predicate plus the measured entry-decay profile.
// kappa is the rate of a least-squares fit log(max_abs) ≈ a − κ·d over the
// realized distances with nonzero maxima; it is reported only when the fit
// has at least kKappaMinPoints points and RMS log-residual ≤ kKappaResidualMax.
struct LocalityReport {
    std::string predicate;  // "Z", "C", or "containment"
    bool passed = false;
    double tol = 0.0;
    std::vector<DecayPoint> profile;  // ascending distance, one entry per realized distance
    double unreachable_max = 0.0;     // max |entry| over unreachable pairs
    std::optional<double> kappa;
    double kappa_residual = 0.0;
};

inline constexpr double kKappaResidualMax = 1.0;
inline constexpr int kKappaMinPoints = 3;

// Entry-decay profile of m over the distances of g, with the κ fit filled in.
LocalityReport decay_profile(const CMat& m, const Graph& g);

// Z-locality: every off-diagonal entry outside the edge set has magnitude
// ≤ tol. Matrix dimension must equal the vertex count.
LocalityReport check_z_local(const CMat& m, const Graph& g, double tol);

// C-locality: m is block-diagonal w.r.t. the partition (off-block entries of
// magnitude ≤ tol, default exactly zero) and each block's basis indices come
// from one vertex or two adjacent vertices. vertex_of maps basis index to
// vertex for models with several basis states per vertex; empty means the
// identity map.
bool check_c_local(const CMat& m, const Graph& g,
                   const std::vector<std::vector<int>>& partition, double tol = 0.0,
                   std::span<const int> vertex_of = {});

}  // namespace unilog
