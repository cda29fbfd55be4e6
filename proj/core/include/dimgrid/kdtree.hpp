#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dimgrid/point_cloud.hpp"

namespace dimgrid {

struct Neighbor {
    double distance;  ///< Euclidean
    std::uint32_t index;
};

/// Static k-d tree over a copy of a point cloud for exact k-nearest-neighbor queries.
class KdTree {
public:
    explicit KdTree(PointCloud points, std::size_t leaf_size = 16);

    /// The k nearest points to `query`, closest first. `exclude` skips one
    /// index (pass the query's own index for leave-one-out queries).
    [[nodiscard]] std::vector<Neighbor> nearest(std::span<const double> query, std::size_t k,
                                                std::uint32_t exclude = kNoExclude) const;

    [[nodiscard]] const PointCloud& points() const noexcept { return points_; }

    static constexpr std::uint32_t kNoExclude = 0xFFFFFFFFu;

private:
    struct Node {
        std::uint32_t begin, end;      // range in order_
        std::int32_t left = -1, right = -1;
        std::uint32_t axis = 0;
        double split = 0.0;
    };

    std::int32_t build(std::uint32_t begin, std::uint32_t end);
    void search(std::int32_t node, std::span<const double> query, std::size_t k, std::uint32_t exclude,
                std::vector<std::pair<double, std::uint32_t>>& heap) const;

    PointCloud points_;
    std::size_t leaf_size_;
    std::vector<std::uint32_t> order_;
    std::vector<Node> nodes_;
};

/// Leave-one-out k nearest neighbors of every point (closest first).
std::vector<std::vector<Neighbor>> all_knn(const PointCloud& cloud, std::size_t k);

/// Cloud with exact duplicate rows removed, first occurrence kept.
PointCloud unique_rows(const PointCloud& cloud);

}  // namespace dimgrid
