#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "dimgrid/bounds.hpp"
#include "dimgrid/point_cloud.hpp"

namespace dimgrid {

struct BoxCountResult {
    std::vector<double> scales;        ///< descending
    std::vector<std::size_t> counts;   ///< occupied boxes per scale
    std::size_t fit_begin = 0;         ///< first scale used by the fit
    std::size_t fit_end = 0;           ///< one past the last fitted scale
    double slope = 0.0;                ///< box dimension
    double intercept = 0.0;
    double residual = 0.0;             ///< RMS residual of the fit
};

/// 2^-2 .. 2^-9.
std::vector<double> default_box_scales();

struct BoxCountOptions {
    std::vector<double> scales = default_box_scales();
    std::size_t skip_coarse = 2;
    /// Finer scales are fitted only while boxes hold this many points on
    /// average (count <= N / min_points_per_box); 0 disables the cutoff.
    /// At least two scales are always fitted.
    double min_points_per_box = 10.0;
};

/**
 * Box-counting dimension: least-squares slope of log(count) against
 * log(1/scale) on the normalized cloud, skipping the coarsest scales and
 * stopping before undersampled fine scales. Duplicate points count once.
 * Throws DegenerateFit when all fitted counts are equal.
 */
BoxCountResult box_dimension(const PointCloud& cloud, const BoxCountOptions& options = {});

/// Row-major integer raster over an axis-aligned rectangle.
struct LabelRaster {
    std::size_t rows = 0;
    std::size_t cols = 0;
    double x0 = 0.0;          ///< left edge
    double y0 = 0.0;          ///< bottom edge (row 0)
    double cell_x = 1.0;
    double cell_y = 1.0;
    std::vector<int> labels;

    [[nodiscard]] int at(std::size_t r, std::size_t c) const noexcept { return labels[r * cols + c]; }
};

/// Centers of cells whose 8-neighborhood holds a different label.
/// Throws SingleClass when the raster holds fewer than two labels.
PointCloud extract_boundary(const LabelRaster& raster);

/// k-NN majority vote evaluated at the cell centers of a resolution x resolution
/// grid spanning the bounding box of `train`. Ties go to the smallest label;
/// k is clamped to the training size.
LabelRaster knn_label_grid(const LabeledCloud& train, int k, int resolution = 512);

/// Reads integers, one raster row per line; cells are unit squares at the origin.
LabelRaster read_raster_csv(std::istream& in);
LabelRaster read_raster_csv_file(const std::string& path);
void write_raster_csv(std::ostream& out, const LabelRaster& raster);

struct BoundaryReport {
    PointCloud boundary;
    BoxCountResult box;
    double cf = 0.0;
    double spacing = 0.0;
    double achieved_ip = 0.0;
    LmuClassification lmu;
    int dcf_dimension = 0;
    std::vector<double> weights;               ///< normalized over topologies 0..n
    std::vector<double> object_dimensions;
};

/// Box dimension, CF at a 45-55% IP window, LMU class and DCF weights of a
/// boundary, plus the box dimension of every object cloud.
BoundaryReport boundary_report(const PointCloud& boundary, const std::vector<PointCloud>& objects = {});

}  // namespace dimgrid
