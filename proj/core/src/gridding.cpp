#include "dimgrid/gridding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dimgrid/cell_index.hpp"
#include "dimgrid/error.hpp"

namespace dimgrid {

NormalizedCloud normalize_global(const PointCloud& cloud) {
    if (cloud.empty()) {
        throw Error(ErrorKind::InvalidArgument, "normalize_global: empty cloud");
    }
    const std::size_t d = cloud.dim();
    std::vector<double> lo(d, std::numeric_limits<double>::infinity());
    std::vector<double> hi(d, -std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        const auto p = cloud.row(i);
        for (std::size_t j = 0; j < d; ++j) {
            lo[j] = std::min(lo[j], p[j]);
            hi[j] = std::max(hi[j], p[j]);
        }
    }
    double scale = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
        scale = std::max(scale, hi[j] - lo[j]);
    }
    if (!(scale > 0.0)) {
        throw Error(ErrorKind::ZeroRange, "all features are constant");
    }
    std::vector<double> out(cloud.size() * d);
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        const auto p = cloud.row(i);
        for (std::size_t j = 0; j < d; ++j) {
            // Clamp guards the last ulp of the widest axis.
            out[i * d + j] = std::clamp((p[j] - lo[j]) / scale, 0.0, 1.0);
        }
    }
    return {PointCloud(std::move(out), d), NormalizationRecord{std::move(lo), scale}};
}

std::int64_t cell_coordinate(double x, double spacing) noexcept {
    return static_cast<std::int64_t>(std::floor(x / spacing));
}

GriddedCloud::GriddedCloud(std::size_t dim, double spacing, std::size_t source_count,
                           std::vector<std::int64_t> cells, std::vector<std::size_t> multiplicity)
    : dim_(dim),
      spacing_(spacing),
      source_count_(source_count),
      cells_(std::move(cells)),
      multiplicity_(std::move(multiplicity)) {}

double GriddedCloud::achieved_ip() const noexcept {
    if (source_count_ == 0) return 0.0;
    return 100.0 * static_cast<double>(size()) / static_cast<double>(source_count_);
}

std::vector<double> GriddedCloud::representative(std::size_t i) const {
    std::vector<double> p(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        p[j] = static_cast<double>(cells_[i * dim_ + j]) * spacing_ + spacing_ / 2.0;
    }
    return p;
}

PointCloud GriddedCloud::representatives() const {
    std::vector<double> flat(cells_.size());
    for (std::size_t k = 0; k < cells_.size(); ++k) {
        flat[k] = static_cast<double>(cells_[k]) * spacing_ + spacing_ / 2.0;
    }
    if (dim_ == 0) {
        return PointCloud::from_rows(std::vector<std::vector<double>>(size()));
    }
    return PointCloud(std::move(flat), dim_);
}

namespace {

void require_spacing(double spacing) {
    if (!(spacing > 0.0) || !std::isfinite(spacing)) {
        throw Error(ErrorKind::InvalidArgument, "spacing must be positive and finite");
    }
}

std::vector<std::int64_t> cell_coordinates(const PointCloud& cloud, double spacing) {
    const std::size_t n = cloud.size();
    const std::size_t d = cloud.dim();
    std::vector<std::int64_t> coords(n * d);
    const auto data = cloud.data();
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(n * d); ++k) {
        coords[static_cast<std::size_t>(k)] = cell_coordinate(data[static_cast<std::size_t>(k)], spacing);
    }
    return coords;
}

}  // namespace

GriddedCloud snap_to_grid(const PointCloud& cloud, double spacing) {
    require_spacing(spacing);
    const std::size_t d = cloud.dim();
    const auto coords = cell_coordinates(cloud, spacing);
    CellIndex index(d, cloud.size());
    std::vector<std::size_t> multiplicity;
    multiplicity.reserve(cloud.size());
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        const auto [id, inserted] = index.insert({coords.data() + i * d, d});
        if (inserted) {
            multiplicity.push_back(1);
        } else {
            ++multiplicity[id];
        }
    }
    return GriddedCloud(d, spacing, cloud.size(), index.keys(), std::move(multiplicity));
}

std::size_t count_occupied_cells(const PointCloud& cloud, double spacing) {
    require_spacing(spacing);
    const std::size_t d = cloud.dim();
    const auto coords = cell_coordinates(cloud, spacing);
    CellIndex index(d, cloud.size());
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        index.insert({coords.data() + i * d, d});
    }
    return index.size();
}

double information_percentage(const PointCloud& cloud, double spacing) {
    if (cloud.empty()) {
        throw Error(ErrorKind::InvalidArgument, "information_percentage: empty cloud");
    }
    return 100.0 * static_cast<double>(count_occupied_cells(cloud, spacing)) /
           static_cast<double>(cloud.size());
}

SpacingSearch find_spacing(const PointCloud& cloud, double ip_min, double ip_max,
                           const SpacingSearchOptions& options) {
    if (ip_min > ip_max) {
        throw Error(ErrorKind::InvalidRange, "ip_min exceeds ip_max");
    }
    if (!(ip_min > 0.0) || ip_max > 100.0) {
        throw Error(ErrorKind::InvalidRange, "IP bounds must lie in (0, 100]");
    }

    SpacingSearch best;
    double best_distance = std::numeric_limits<double>::infinity();
    auto evaluate = [&](double s) {
        const double ip = information_percentage(cloud, s);
        ++best.evaluations;
        const double distance = std::max({ip_min - ip, 0.0, ip - ip_max});
        if (distance < best_distance) {
            best_distance = distance;
            best.spacing = s;
            best.achieved_ip = ip;
            best.in_range = distance == 0.0;
        }
        return ip;
    };

    // Coarse phase.
    double s = 1.0;
    double ip = evaluate(s);
    double s_coarse_prev = 0.0;
    for (int step = 0; step < options.max_coarse_steps && ip < ip_min; ++step) {
        s_coarse_prev = s;
        s /= options.coarse_divisor;
        ip = evaluate(s);
    }
    if (best.in_range || ip < ip_min || s_coarse_prev == 0.0) {
        return best;
    }

    // Fine phase: IP(s_fine) > ip_max, IP(s_coarse) < ip_min.
    double s_fine = s;
    double s_coarse = s_coarse_prev;
    for (int step = 0; step < options.max_fine_steps; ++step) {
        const double mid = std::sqrt(s_fine * s_coarse);
        if (!(mid > s_fine && mid < s_coarse)) break;
        const double mid_ip = evaluate(mid);
        if (best.in_range) break;
        if (mid_ip > ip_max) {
            s_fine = mid;
        } else {
            s_coarse = mid;
        }
    }
    return best;
}

}  // namespace dimgrid
