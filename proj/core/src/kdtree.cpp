#include "dimgrid/kdtree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "dimgrid/error.hpp"

namespace dimgrid {

KdTree::KdTree(PointCloud points, std::size_t leaf_size)
    : points_(std::move(points)), leaf_size_(std::max<std::size_t>(1, leaf_size)) {
    order_.resize(points_.size());
    std::iota(order_.begin(), order_.end(), 0u);
    if (!order_.empty()) {
        nodes_.reserve(2 * points_.size() / leaf_size_ + 1);
        build(0, static_cast<std::uint32_t>(order_.size()));
    }
}

std::int32_t KdTree::build(std::uint32_t begin, std::uint32_t end) {
    const auto id = static_cast<std::int32_t>(nodes_.size());
    nodes_.push_back({begin, end});
    if (end - begin <= leaf_size_ || points_.dim() == 0) return id;

    std::uint32_t axis = 0;
    double widest = -1.0;
    for (std::size_t j = 0; j < points_.dim(); ++j) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (std::uint32_t k = begin; k < end; ++k) {
            const double v = points_(order_[k], j);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        if (hi - lo > widest) {
            widest = hi - lo;
            axis = static_cast<std::uint32_t>(j);
        }
    }
    if (widest <= 0.0) return id;  // all points identical

    const std::uint32_t mid = begin + (end - begin) / 2;
    std::nth_element(order_.begin() + begin, order_.begin() + mid, order_.begin() + end,
                     [&](std::uint32_t a, std::uint32_t b) { return points_(a, axis) < points_(b, axis); });
    nodes_[static_cast<std::size_t>(id)].axis = axis;
    nodes_[static_cast<std::size_t>(id)].split = points_(order_[mid], axis);
    const std::int32_t left = build(begin, mid);
    const std::int32_t right = build(mid, end);
    nodes_[static_cast<std::size_t>(id)].left = left;
    nodes_[static_cast<std::size_t>(id)].right = right;
    return id;
}

void KdTree::search(std::int32_t node_id, std::span<const double> query, std::size_t k, std::uint32_t exclude,
                    std::vector<std::pair<double, std::uint32_t>>& heap) const {
    const Node& node = nodes_[static_cast<std::size_t>(node_id)];
    if (node.left < 0) {
        for (std::uint32_t p = node.begin; p < node.end; ++p) {
            const std::uint32_t idx = order_[p];
            if (idx == exclude) continue;
            const auto row = points_.row(idx);
            double d2 = 0.0;
            for (std::size_t j = 0; j < row.size(); ++j) {
                const double diff = row[j] - query[j];
                d2 += diff * diff;
            }
            if (heap.size() < k) {
                heap.emplace_back(d2, idx);
                std::push_heap(heap.begin(), heap.end());
            } else if (std::make_pair(d2, idx) < heap.front()) {
                std::pop_heap(heap.begin(), heap.end());
                heap.back() = {d2, idx};
                std::push_heap(heap.begin(), heap.end());
            }
        }
        return;
    }
    const double diff = query[node.axis] - node.split;
    const std::int32_t near = diff < 0.0 ? node.left : node.right;
    const std::int32_t far = diff < 0.0 ? node.right : node.left;
    search(near, query, k, exclude, heap);
    if (heap.size() < k || diff * diff <= heap.front().first) {
        search(far, query, k, exclude, heap);
    }
}

std::vector<Neighbor> KdTree::nearest(std::span<const double> query, std::size_t k, std::uint32_t exclude) const {
    if (query.size() != points_.dim()) {
        throw Error(ErrorKind::InvalidArgument, "query dimension mismatch");
    }
    std::vector<std::pair<double, std::uint32_t>> heap;
    heap.reserve(k + 1);
    if (k > 0 && !nodes_.empty()) search(0, query, k, exclude, heap);
    std::sort_heap(heap.begin(), heap.end());
    std::vector<Neighbor> out;
    out.reserve(heap.size());
    for (const auto& [d2, idx] : heap) out.push_back({std::sqrt(d2), idx});
    return out;
}

std::vector<std::vector<Neighbor>> all_knn(const PointCloud& cloud, std::size_t k) {
    const KdTree tree(cloud);
    std::vector<std::vector<Neighbor>> out(cloud.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(cloud.size()); ++ii) {
        const auto i = static_cast<std::uint32_t>(ii);
        out[i] = tree.nearest(cloud.row(i), k, i);
    }
    return out;
}

PointCloud unique_rows(const PointCloud& cloud) {
    std::map<std::vector<double>, bool> seen;
    PointCloud out;
    std::vector<double> flat;
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        const auto r = cloud.row(i);
        std::vector<double> key(r.begin(), r.end());
        if (seen.emplace(std::move(key), true).second) flat.insert(flat.end(), r.begin(), r.end());
    }
    if (cloud.dim() == 0) return cloud;
    return PointCloud(std::move(flat), cloud.dim());
}

}  // namespace dimgrid
