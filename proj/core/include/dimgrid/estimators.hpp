#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dimgrid/membership.hpp"
#include "dimgrid/neighborhood.hpp"
#include "dimgrid/point_cloud.hpp"
#include "dimgrid/reference_model.hpp"

namespace dimgrid {

enum class Method { DCF, EDCF, TwoNN, MLE };

std::string to_string(Method method);
/// Parses "dcf", "edcf", "twonn", "mle" (case-insensitive). Throws InvalidArgument.
Method parse_method(const std::string& name);

struct IpRange {
    double min = 45.0;
    double max = 55.0;
};

struct EstimateReport {
    Method method = Method::DCF;
    int m_hat = 0;
    double estimate = 0.0;            ///< unrounded value (weighted mean, or baseline estimate)
    std::vector<double> weights;      ///< normalized pi_t, t = 0..d_max
    std::vector<double> raw_weights;  ///< W_t before normalization
    std::vector<double> anchors;      ///< anchors used for membership
    double cf = 0.0;
    double spacing = 0.0;
    double achieved_ip = 0.0;
    bool ip_in_range = false;
    std::size_t representatives = 0;
    double noise = 0.0;
    int d_max = 0;
    bool low_confidence = false;
    bool cache_hit = false;
    std::vector<std::string> warnings;
};

struct GridSummary {
    NeighborCounts counts;
    double spacing = 1.0;
    double achieved_ip = 100.0;
    bool in_range = true;
    std::size_t representatives = 0;
};

/// Normalize, search a spacing for `range`, snap and count neighbors.
/// A cloud whose points all coincide becomes a single representative.
GridSummary grid_and_count(const PointCloud& cloud, IpRange range, CountingEngine engine = CountingEngine::Auto);

struct DcfOptions {
    IpRange ip{45.0, 55.0};
    int d_max = -1;  ///< -1 selects the ambient dimension
    CountingEngine engine = CountingEngine::Auto;
};

/// Distributed connectivity estimate with theoretical anchors 3^t - 1; m_hat = argmax_t W_t
/// with ties going to the smaller t.
EstimateReport dcf_estimate(const PointCloud& cloud, const DcfOptions& options = {});

/// Sum of memberships over neighbor counts; returns W_t.
std::vector<double> membership_weights(const std::vector<std::uint32_t>& counts, const MembershipAnchors& anchors);

/// Index of the largest weight, ties to the smaller index.
int argmax_dimension(const std::vector<double>& weights);

/// min(95, base + 3 sqrt(n)).
double adaptive_target(double base_target, int n);

/// Default noise estimate: median distance to the k-th nearest neighbor / 2.
/// Throws TooFewPoints when N <= k.
double estimate_noise(const PointCloud& cloud, int k = 2);

/// User override wins; otherwise the default estimator.
double estimate_noise(const PointCloud& cloud, std::optional<double> override_sigma, int k = 2);

struct EdcfOptions {
    std::optional<IpRange> ip;          ///< explicit IP window; otherwise adaptive target
    double base_target = 50.0;
    double ip_half_width = kReferenceIpHalfWidth;
    int d_max = 50;                     ///< capped at the ambient dimension
    std::optional<double> noise;        ///< unit-box sigma override
    int noise_k = 2;
    std::uint64_t seed = 0;
    CountingEngine engine = CountingEngine::Auto;
};

/// Empirically anchored estimate; m_hat = round(sum_t t * pi_t).
EstimateReport edcf_estimate(const PointCloud& cloud, const EdcfOptions& options = {},
                             ReferenceCache* cache = nullptr);

}  // namespace dimgrid
