#include "unilog/specgap.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "unilog/errors.hpp"

namespace unilog {

SpectralGap find_gap(const RVec& phases) {
    if (phases.size() == 0) throw InvalidArgumentError("find_gap needs at least one phase");
    std::vector<double> p(phases.data(), phases.data() + phases.size());
    for (double x : p) {
        if (!(x >= 0.0 && x < kTwoPi)) throw InvalidArgumentError("phases must lie in [0, 2pi)");
    }
    std::sort(p.begin(), p.end());
    std::vector<double> uniq;
    uniq.reserve(p.size());
    for (double x : p) {
        if (uniq.empty() || x - uniq.back() > kPhaseDedupeTol) uniq.push_back(x);
    }
    // The first and last survivors can still collide across the wrap.
    if (uniq.size() > 1 && (uniq.front() + kTwoPi) - uniq.back() <= kPhaseDedupeTol) {
        uniq.pop_back();
    }

    SpectralGap gap;
    if (uniq.size() == 1) {
        gap.arc_start = uniq[0];
        gap.width = kTwoPi;
    } else {
        for (size_t i = 0; i < uniq.size(); ++i) {
            const double start = uniq[i];
            const double next = (i + 1 < uniq.size()) ? uniq[i + 1] : uniq[0] + kTwoPi;
            const double w = next - start;
            const bool wider = w > gap.width + kGapTieTol;
            const bool tied = std::abs(w - gap.width) <= kGapTieTol && start < gap.arc_start;
            if (wider || tied) {
                gap.arc_start = start;
                gap.width = w;
            }
        }
    }
    gap.arc_end = gap.arc_start + gap.width;
    const double midpoint = gap.arc_start + 0.5 * gap.width;
    gap.zeta = phase_mod_2pi(kTwoPi - midpoint);
    return gap;
}

SpectralGap find_gap(const CMat& u) { return find_gap(unitary_eigensystem(u).phases); }

CMat center_unitary(const CMat& u, const SpectralGap& gap) {
    return std::polar(1.0, gap.zeta) * u;
}

}  // namespace unilog
