#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dimgrid/point_cloud.hpp"

namespace dimgrid {

/// Per-feature minima and the single global scale used by normalize_global.
struct NormalizationRecord {
    std::vector<double> minima;
    double scale = 1.0;  ///< widest feature range, R_max
};

struct NormalizedCloud {
    PointCloud cloud;
    NormalizationRecord record;
};

/**
 * Maps every feature into [0, 1] using one common divisor, the widest feature
 * range. Ratios between feature ranges are preserved.
 *
 * Throws ZeroRange when every feature is constant.
 */
NormalizedCloud normalize_global(const PointCloud& cloud);

/**
 * Unique grid cells occupied by a cloud at spacing s.
 *
 * Cell identity is the integer vector floor(x / s); representatives are the
 * cell centers floor(x / s) * s + s / 2. Cells are ordered by first
 * occurrence in the source cloud.
 */
class GriddedCloud {
public:
    GriddedCloud(std::size_t dim, double spacing, std::size_t source_count,
                 std::vector<std::int64_t> cells, std::vector<std::size_t> multiplicity);

    [[nodiscard]] std::size_t size() const noexcept { return multiplicity_.size(); }
    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] double spacing() const noexcept { return spacing_; }
    [[nodiscard]] std::size_t source_count() const noexcept { return source_count_; }

    /// 100 * unique cells / source points.
    [[nodiscard]] double achieved_ip() const noexcept;

    [[nodiscard]] std::span<const std::int64_t> cell(std::size_t i) const noexcept {
        return {cells_.data() + i * dim_, dim_};
    }
    [[nodiscard]] const std::vector<std::int64_t>& cells() const noexcept { return cells_; }
    [[nodiscard]] const std::vector<std::size_t>& multiplicity() const noexcept { return multiplicity_; }

    [[nodiscard]] std::vector<double> representative(std::size_t i) const;
    [[nodiscard]] PointCloud representatives() const;

private:
    std::size_t dim_;
    double spacing_;
    std::size_t source_count_;
    std::vector<std::int64_t> cells_;
    std::vector<std::size_t> multiplicity_;
};

/// Integer cell coordinate of a single value (mathematical floor).
[[nodiscard]] std::int64_t cell_coordinate(double x, double spacing) noexcept;

/// Snaps every point to its cell center. Requires s > 0.
GriddedCloud snap_to_grid(const PointCloud& cloud, double spacing);

/// Number of distinct occupied cells at spacing s.
std::size_t count_occupied_cells(const PointCloud& cloud, double spacing);

/// 100 * |unique cells| / N. Requires s > 0 and N >= 1.
double information_percentage(const PointCloud& cloud, double spacing);

struct SpacingSearch {
    double spacing = 1.0;
    double achieved_ip = 0.0;
    bool in_range = false;   ///< achieved_ip lies inside the requested interval
    int evaluations = 0;     ///< number of IP evaluations performed
};

struct SpacingSearchOptions {
    double coarse_divisor = 5.0;
    int max_coarse_steps = 40;
    int max_fine_steps = 60;
};

/**
 * Two-phase search for a spacing whose IP lies in [ip_min, ip_max].
 *
 * The coarse phase starts at s = 1 and divides by the divisor until IP reaches
 * ip_min; the fine phase bisects the last bracket. IP is a step function of s,
 * so the interval may be unreachable; the spacing whose IP is closest to the
 * interval is returned then, with in_range = false.
 *
 * Expects a cloud normalized to the unit box. Throws InvalidRange when
 * ip_min > ip_max or the bounds fall outside (0, 100].
 */
SpacingSearch find_spacing(const PointCloud& cloud, double ip_min, double ip_max,
                           const SpacingSearchOptions& options = {});

}  // namespace dimgrid
