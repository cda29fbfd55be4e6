#pragma once

#include <cstddef>
#include <vector>

namespace dimgrid {

enum class AnchorProvenance { Theoretical, Empirical };

/// Peak neighbor counts r_0..r_D for the triangular membership functions.
struct MembershipAnchors {
    std::vector<double> r;
    AnchorProvenance provenance = AnchorProvenance::Theoretical;

    [[nodiscard]] std::size_t max_dimension() const noexcept { return r.empty() ? 0 : r.size() - 1; }
};

/// r_t = 3^t - 1 for t = 0..d_max.
MembershipAnchors theoretical_anchors(std::size_t d_max);

/**
 * Triangular memberships f_0(x)..f_D(x) of a neighbor count x.
 *
 * Component t rises linearly from r_{t-1} to 1 at r_t and falls to 0 at
 * r_{t+1}, with r_{-1} = r_0 and r_{D+1} = r_D. A ramp only exists where the
 * anchors strictly increase, so non-monotone empirical anchors may give one
 * count support in more than two dimensions. x = r_t always yields f_t = 1;
 * counts at or below r_0 saturate f_0 and counts at or above r_D saturate f_D.
 */
std::vector<double> membership(double x, const MembershipAnchors& anchors);

/// Adds membership(x) to `weights` (sized D + 1).
void accumulate_membership(double x, const MembershipAnchors& anchors, std::vector<double>& weights);

}  // namespace dimgrid
