#include "dimgrid/estimators.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>

#include "dimgrid/error.hpp"
#include "dimgrid/gridding.hpp"
#include "dimgrid/kdtree.hpp"

namespace dimgrid {

namespace {

struct PreparedGrid {
    GridSummary summary;
    PointCloud unit;   // normalized cloud, empty when the input had zero range
    bool zero_range = false;
};

PreparedGrid prepare(const PointCloud& cloud, IpRange range, CountingEngine engine) {
    if (cloud.size() == 0) throw Error(ErrorKind::TooFewPoints, "empty point cloud");
    PreparedGrid out;
    try {
        out.unit = normalize_global(cloud).cloud;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::ZeroRange) throw;
        // Every point coincides: one cell without neighbors.
        out.zero_range = true;
        out.summary.counts.counts = {0};
        out.summary.counts.dim = cloud.dim();
        out.summary.counts.spacing = 1.0;
        out.summary.counts.engine = engine;
        out.summary.spacing = 1.0;
        out.summary.achieved_ip = 100.0 / static_cast<double>(cloud.size());
        out.summary.in_range = range.min <= out.summary.achieved_ip && out.summary.achieved_ip <= range.max;
        out.summary.representatives = 1;
        return out;
    }
    const SpacingSearch found = find_spacing(out.unit, range.min, range.max);
    const GriddedCloud grid = snap_to_grid(out.unit, found.spacing);
    out.summary.counts = count_neighbors(grid, engine);
    out.summary.spacing = found.spacing;
    out.summary.achieved_ip = found.achieved_ip;
    out.summary.in_range = found.in_range;
    out.summary.representatives = grid.size();
    return out;
}

void fill_grid_fields(EstimateReport& report, const GridSummary& g) {
    report.cf = connectivity_factor(g.counts).cf;
    report.spacing = g.spacing;
    report.achieved_ip = g.achieved_ip;
    report.ip_in_range = g.in_range;
    report.representatives = g.representatives;
    if (!g.in_range) report.warnings.emplace_back("requested IP window not reachable; closest spacing used");
}

}  // namespace

std::string to_string(Method method) {
    switch (method) {
        case Method::DCF: return "dcf";
        case Method::EDCF: return "edcf";
        case Method::TwoNN: return "twonn";
        case Method::MLE: return "mle";
    }
    return "unknown";
}

Method parse_method(const std::string& name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "dcf") return Method::DCF;
    if (lower == "edcf") return Method::EDCF;
    if (lower == "twonn") return Method::TwoNN;
    if (lower == "mle") return Method::MLE;
    throw Error(ErrorKind::InvalidArgument, "unknown method: " + name);
}

GridSummary grid_and_count(const PointCloud& cloud, IpRange range, CountingEngine engine) {
    return prepare(cloud, range, engine).summary;
}

std::vector<double> membership_weights(const std::vector<std::uint32_t>& counts, const MembershipAnchors& anchors) {
    std::vector<double> weights(anchors.r.size(), 0.0);
    for (auto c : counts) accumulate_membership(static_cast<double>(c), anchors, weights);
    return weights;
}

int argmax_dimension(const std::vector<double>& weights) {
    int best = 0;
    for (std::size_t t = 1; t < weights.size(); ++t) {
        if (weights[t] > weights[static_cast<std::size_t>(best)]) best = static_cast<int>(t);
    }
    return best;
}

double adaptive_target(double base_target, int n) {
    if (!(base_target > 0.0 && base_target <= 100.0)) {
        throw Error(ErrorKind::InvalidArgument, "base target must lie in (0, 100]");
    }
    return std::min(95.0, base_target + 3.0 * std::sqrt(static_cast<double>(std::max(n, 0))));
}

double estimate_noise(const PointCloud& cloud, int k) {
    if (k < 1) throw Error(ErrorKind::InvalidArgument, "noise estimate needs k >= 1");
    if (cloud.size() <= static_cast<std::size_t>(k)) {
        throw Error(ErrorKind::TooFewPoints, "noise estimate needs more than k points");
    }
    const auto knn = all_knn(cloud, static_cast<std::size_t>(k));
    std::vector<double> kth(knn.size());
    for (std::size_t i = 0; i < knn.size(); ++i) kth[i] = knn[i][static_cast<std::size_t>(k) - 1].distance;
    const auto mid = kth.begin() + static_cast<std::ptrdiff_t>(kth.size() / 2);
    std::nth_element(kth.begin(), mid, kth.end());
    double median = *mid;
    if (kth.size() % 2 == 0) {
        median = 0.5 * (median + *std::max_element(kth.begin(), mid));
    }
    return median / 2.0;
}

double estimate_noise(const PointCloud& cloud, std::optional<double> override_sigma, int k) {
    if (override_sigma) {
        if (!(*override_sigma >= 0.0)) throw Error(ErrorKind::InvalidArgument, "noise override must be >= 0");
        return *override_sigma;
    }
    return estimate_noise(cloud, k);
}

EstimateReport dcf_estimate(const PointCloud& cloud, const DcfOptions& options) {
    const int ambient = static_cast<int>(cloud.dim());
    const int d_max = options.d_max < 0 ? ambient : options.d_max;
    if (d_max > ambient) throw Error(ErrorKind::InvalidArgument, "d_max exceeds the ambient dimension");

    EstimateReport report;
    report.method = Method::DCF;
    report.d_max = d_max;
    const PreparedGrid prepared = prepare(cloud, options.ip, options.engine);
    fill_grid_fields(report, prepared.summary);

    const MembershipAnchors anchors = theoretical_anchors(static_cast<std::size_t>(d_max));
    report.anchors = anchors.r;
    report.raw_weights = membership_weights(prepared.summary.counts.counts, anchors);
    const double total = std::accumulate(report.raw_weights.begin(), report.raw_weights.end(), 0.0);
    report.weights.assign(report.raw_weights.size(), 0.0);
    if (total > 0.0) {
        for (std::size_t t = 0; t < report.weights.size(); ++t) report.weights[t] = report.raw_weights[t] / total;
    } else {
        report.low_confidence = true;
    }
    report.m_hat = argmax_dimension(report.raw_weights);
    report.estimate = report.m_hat;
    return report;
}

EstimateReport edcf_estimate(const PointCloud& cloud, const EdcfOptions& options, ReferenceCache* cache) {
    const int ambient = static_cast<int>(cloud.dim());
    if (options.d_max < 0) throw Error(ErrorKind::InvalidArgument, "d_max must be >= 0");
    const int d_max = std::min(options.d_max, ambient);

    EstimateReport report;
    report.method = Method::EDCF;
    report.d_max = d_max;

    IpRange window;
    double target = 0.0;
    if (options.ip) {
        window = *options.ip;
        target = 0.5 * (window.min + window.max);
    } else {
        target = adaptive_target(options.base_target, ambient);
        window = {std::max(target - options.ip_half_width, 1e-9), std::min(target + options.ip_half_width, 100.0)};
    }
    const PreparedGrid prepared = prepare(cloud, window, options.engine);
    fill_grid_fields(report, prepared.summary);

    if (prepared.summary.representatives <= 1) {
        // One occupied cell has no neighbors at any anchor set: a point.
        report.weights.assign(static_cast<std::size_t>(d_max) + 1, 0.0);
        report.weights[0] = 1.0;
        report.raw_weights = report.weights;
        report.m_hat = 0;
        report.estimate = 0.0;
        return report;
    }

    double sigma = 0.0;
    if (options.noise) {
        sigma = estimate_noise(prepared.unit, options.noise, options.noise_k);
    } else if (prepared.zero_range) {
        sigma = 0.0;
    } else {
        try {
            sigma = estimate_noise(prepared.unit, options.noise_k);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::TooFewPoints && e.kind() != ErrorKind::NoiseEstimateUnavailable) throw;
            report.warnings.emplace_back(std::string("noise estimate unavailable, using 0: ") + e.what());
        }
    }
    report.noise = sigma;

    ReferenceRequest request;
    request.n_points = cloud.size();
    request.d = ambient;
    request.d_max = d_max;
    request.ip_target = target;
    request.sigma = sigma;
    request.seed = options.seed;
    const ReferenceResult reference = generate_reference_model(request, cache);
    report.cache_hit = reference.cache_hit;
    if (reference.cache_error) report.warnings.push_back("reference cache not written: " + *reference.cache_error);

    MembershipAnchors anchors{reference.model.anchors, AnchorProvenance::Empirical};
    report.anchors = anchors.r;
    report.raw_weights = membership_weights(prepared.summary.counts.counts, anchors);
    const double total = std::accumulate(report.raw_weights.begin(), report.raw_weights.end(), 0.0);
    report.weights.assign(report.raw_weights.size(), 0.0);
    if (!(total > 0.0)) {
        report.low_confidence = true;
        report.m_hat = 0;
        report.estimate = 0.0;
        report.warnings.emplace_back("all dimension weights are zero");
        return report;
    }
    double mean = 0.0;
    for (std::size_t t = 0; t < report.weights.size(); ++t) {
        report.weights[t] = report.raw_weights[t] / total;
        mean += static_cast<double>(t) * report.weights[t];
    }
    report.estimate = mean;
    report.m_hat = std::clamp(static_cast<int>(std::lround(mean)), 0, d_max);
    return report;
}

}  // namespace dimgrid
