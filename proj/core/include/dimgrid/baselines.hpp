#pragma once

#include "dimgrid/point_cloud.hpp"

namespace dimgrid {

/**
 * TWO-NN estimate from the ratios of second to first nearest-neighbor
 * distances: least-squares slope through the origin of -log(1 - F(mu))
 * against log(mu), after dropping the largest `discard_fraction` of ratios.
 * Duplicate points are removed first. Requires N >= 3 unique points.
 */
double twonn_estimate(const PointCloud& cloud, double discard_fraction = 0.1);

/**
 * Levina-Bickel maximum-likelihood estimate with k neighbors, averaged over
 * points. Duplicate points are removed first. Requires N > k >= 2.
 */
double mle_estimate(const PointCloud& cloud, int k = 20);

}  // namespace dimgrid
