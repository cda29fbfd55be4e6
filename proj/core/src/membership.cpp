#include "dimgrid/membership.hpp"

#include <algorithm>
#include <cmath>

#include "dimgrid/error.hpp"

namespace dimgrid {

MembershipAnchors theoretical_anchors(std::size_t d_max) {
    MembershipAnchors a;
    a.r.resize(d_max + 1);
    double p = 1.0;
    for (std::size_t t = 0; t <= d_max; ++t) {
        a.r[t] = p - 1.0;
        p *= 3.0;
    }
    a.provenance = AnchorProvenance::Theoretical;
    return a;
}

void accumulate_membership(double x, const MembershipAnchors& anchors, std::vector<double>& weights) {
    const auto& r = anchors.r;
    if (r.empty()) {
        throw Error(ErrorKind::InvalidArgument, "membership: no anchors");
    }
    const std::size_t D = r.size() - 1;
    for (std::size_t t = 0; t <= D; ++t) {
        const double left = r[t == 0 ? 0 : t - 1];
        const double peak = r[t];
        const double right = r[t == D ? D : t + 1];
        double f = 0.0;
        if (x == peak) {
            f = 1.0;
        } else if (t == 0 && x <= peak && peak <= right) {
            f = 1.0;
        } else if (t == D && x >= peak && peak >= left) {
            f = 1.0;
        } else {
            if (peak > left && left <= x && x <= peak) {
                f = std::max(f, std::min(1.0, (x - left) / (peak - left)));
            }
            if (right > peak && peak <= x && x <= right) {
                f = std::max(f, std::min(1.0, (right - x) / (right - peak)));
            }
        }
        weights[t] += f;
    }
}

std::vector<double> membership(double x, const MembershipAnchors& anchors) {
    std::vector<double> f(anchors.r.size(), 0.0);
    accumulate_membership(x, anchors, f);
    return f;
}

}  // namespace dimgrid
