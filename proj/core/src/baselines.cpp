#include "dimgrid/baselines.hpp"

#include <algorithm>
#include <cmath>

#include "dimgrid/error.hpp"
#include "dimgrid/kdtree.hpp"

namespace dimgrid {

double twonn_estimate(const PointCloud& cloud, double discard_fraction) {
    if (!(discard_fraction >= 0.0 && discard_fraction < 0.5)) {
        throw Error(ErrorKind::InvalidArgument, "discard fraction must lie in [0, 0.5)");
    }
    const PointCloud unique = unique_rows(cloud);
    const std::size_t n = unique.size();
    if (n < 3) throw Error(ErrorKind::TooFewPoints, "TWO-NN needs at least 3 distinct points");

    const auto knn = all_knn(unique, 2);
    std::vector<double> mu(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double r1 = knn[i][0].distance;
        const double r2 = knn[i][1].distance;
        if (!(r1 > 0.0)) throw Error(ErrorKind::DegenerateDistances, "zero nearest-neighbor distance");
        // Ties such as equispaced samples differ only by rounding; treat them as exact.
        mu[i] = (r2 - r1) <= 1e-12 * r2 ? 1.0 : r2 / r1;
    }
    std::sort(mu.begin(), mu.end());

    const double nd = static_cast<double>(n);
    std::size_t keep = static_cast<std::size_t>(std::floor(nd * (1.0 - discard_fraction)));
    keep = std::min(keep, n - 1);  // F = 1 at the last point would give log(0)
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < keep; ++i) {
        const double x = std::log(mu[i]);
        const double y = -std::log(1.0 - static_cast<double>(i + 1) / nd);
        sxy += x * y;
        sxx += x * x;
    }
    if (!(sxx > 0.0)) throw Error(ErrorKind::DegenerateDistances, "all distance ratios equal one");
    return sxy / sxx;
}

double mle_estimate(const PointCloud& cloud, int k) {
    if (k < 2) throw Error(ErrorKind::InvalidArgument, "MLE needs k >= 2");
    const PointCloud unique = unique_rows(cloud);
    const std::size_t n = unique.size();
    if (static_cast<std::size_t>(k) >= n) throw Error(ErrorKind::TooFewPoints, "MLE needs more than k distinct points");

    const auto knn = all_knn(unique, static_cast<std::size_t>(k));
    double sum = 0.0;
    std::size_t used = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double tk = knn[i][static_cast<std::size_t>(k) - 1].distance;
        double acc = 0.0;
        for (int j = 0; j + 1 < k; ++j) {
            const double tj = knn[i][static_cast<std::size_t>(j)].distance;
            if (!(tj > 0.0)) throw Error(ErrorKind::DegenerateDistances, "zero neighbor distance");
            acc += std::log(tk / tj);
        }
        if (acc > 0.0) {
            sum += static_cast<double>(k - 1) / acc;
            ++used;
        }
    }
    if (used == 0) throw Error(ErrorKind::DegenerateDistances, "all neighbor distances equal");
    return sum / static_cast<double>(used);
}

}  // namespace dimgrid
