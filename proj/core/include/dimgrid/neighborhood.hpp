#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dimgrid/gridding.hpp"

namespace dimgrid {

/// Neighbor-counting strategy. Both engines return identical counts.
enum class CountingEngine {
    Auto,      ///< hash when N * 3^n < N^2 * n, pairwise otherwise
    Hash,      ///< probe the 3^n - 1 Moore offsets of each cell in a hash set
    Pairwise,  ///< compare cells directly, pruned by a sweep on the first axis
};

/// Moore-neighbor count c(u) for every unique cell.
struct NeighborCounts {
    std::vector<std::uint32_t> counts;
    std::size_t dim = 0;
    double spacing = 0.0;
    CountingEngine engine = CountingEngine::Auto;  ///< engine actually used
};

struct ConnectivityResult {
    double cf = 0.0;
    std::uint64_t total_interactions = 0;
    std::size_t dim = 0;
    std::size_t point_count = 0;
};

/// The engine Auto resolves to for `cells` cells in `dim` dimensions.
CountingEngine resolve_engine(std::size_t cells, std::size_t dim, CountingEngine requested) noexcept;

/// 3^n - 1 as a double (exact for n <= 33).
double moore_neighborhood_size(std::size_t n) noexcept;

/**
 * Counts, for every cell, the other cells whose integer coordinates differ by
 * at most one on every axis. `cells` is row-major with `dim` columns and must
 * hold distinct rows.
 */
NeighborCounts count_cell_neighbors(std::span<const std::int64_t> cells, std::size_t dim,
                                    CountingEngine engine = CountingEngine::Auto);

NeighborCounts count_neighbors(const GriddedCloud& grid, CountingEngine engine = CountingEngine::Auto);

/// Average fraction of the 3^n - 1 possible neighbors that are present.
/// For n = 0 the single-point convention CF = 1 applies.
ConnectivityResult connectivity_factor(const NeighborCounts& counts);

/// CF of an m-dimensional structure re-expressed in ambient dimension n:
/// cf * (3^m - 1) / (3^n - 1), with the n = m = 0 base case equal to 1.
/// Throws DomainError when m > n or either is negative.
double space_convert_cf(double cf, int m, int n);

}  // namespace dimgrid
