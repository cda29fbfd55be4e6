#include "dimgrid/neighborhood.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dimgrid/cell_index.hpp"
#include "dimgrid/error.hpp"

namespace dimgrid {

double moore_neighborhood_size(std::size_t n) noexcept {
    return std::pow(3.0, static_cast<double>(n)) - 1.0;
}

CountingEngine resolve_engine(std::size_t cells, std::size_t dim, CountingEngine requested) noexcept {
    if (requested != CountingEngine::Auto) return requested;
    const double n = static_cast<double>(cells);
    const double hash_cost = n * std::pow(3.0, static_cast<double>(dim));
    const double pair_cost = n * n * static_cast<double>(dim);
    return hash_cost < pair_cost ? CountingEngine::Hash : CountingEngine::Pairwise;
}

namespace {

// Largest ambient dimension the hash engine will enumerate (3^20 ~ 3.5e9 probes per cell).
constexpr std::size_t kMaxHashDim = 20;

std::vector<std::uint32_t> count_hash(std::span<const std::int64_t> cells, std::size_t dim,
                                      std::size_t n_cells) {
    if (dim > kMaxHashDim) {
        throw Error(ErrorKind::InvalidArgument, "hash engine limited to 20 dimensions");
    }
    CellIndex index(dim, n_cells);
    for (std::size_t i = 0; i < n_cells; ++i) {
        index.insert(cells.subspan(i * dim, dim));
    }
    std::vector<std::uint32_t> counts(n_cells, 0);

#pragma omp parallel
    {
        std::vector<std::int64_t> probe(dim);
        std::vector<int> offset(dim);
#pragma omp for schedule(dynamic, 64)
        for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(n_cells); ++ii) {
            const auto i = static_cast<std::size_t>(ii);
            const auto base = cells.subspan(i * dim, dim);
            // Odometer over {-1, 0, 1}^dim starting at all -1.
            for (std::size_t j = 0; j < dim; ++j) {
                offset[j] = -1;
                probe[j] = base[j] - 1;
            }
            std::uint32_t c = 0;
            while (true) {
                const bool is_self = std::all_of(offset.begin(), offset.end(), [](int o) { return o == 0; });
                if (!is_self && index.contains(probe)) ++c;
                std::size_t j = 0;
                while (j < dim && offset[j] == 1) {
                    offset[j] = -1;
                    probe[j] = base[j] - 1;
                    ++j;
                }
                if (j == dim) break;
                ++offset[j];
                ++probe[j];
            }
            counts[i] = c;
        }
    }
    return counts;
}

std::vector<std::uint32_t> count_pairwise(std::span<const std::int64_t> cells, std::size_t dim,
                                          std::size_t n_cells) {
    std::vector<std::uint32_t> counts(n_cells, 0);
    if (dim == 0 || n_cells < 2) return counts;

    std::vector<std::uint32_t> order(n_cells);
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return cells[a * dim] < cells[b * dim];
    });
    std::vector<std::int64_t> sorted(n_cells * dim);
    for (std::size_t r = 0; r < n_cells; ++r) {
        std::copy_n(cells.begin() + static_cast<std::ptrdiff_t>(order[r] * dim), dim,
                    sorted.begin() + static_cast<std::ptrdiff_t>(r * dim));
    }

    auto adjacent = [&](std::size_t a, std::size_t b) {
        const std::int64_t* pa = sorted.data() + a * dim;
        const std::int64_t* pb = sorted.data() + b * dim;
        for (std::size_t j = 1; j < dim; ++j) {
            const std::int64_t diff = pa[j] - pb[j];
            if (diff > 1 || diff < -1) return false;
        }
        return true;
    };

#pragma omp parallel for schedule(dynamic, 64)
    for (std::ptrdiff_t rr = 0; rr < static_cast<std::ptrdiff_t>(n_cells); ++rr) {
        const auto r = static_cast<std::size_t>(rr);
        const std::int64_t x0 = sorted[r * dim];
        std::uint32_t c = 0;
        for (std::size_t q = r + 1; q < n_cells && sorted[q * dim] <= x0 + 1; ++q) {
            if (adjacent(r, q)) ++c;
        }
        for (std::size_t q = r; q-- > 0 && sorted[q * dim] >= x0 - 1;) {
            if (adjacent(r, q)) ++c;
        }
        counts[order[r]] = c;
    }
    return counts;
}

}  // namespace

NeighborCounts count_cell_neighbors(std::span<const std::int64_t> cells, std::size_t dim,
                                    CountingEngine engine) {
    const std::size_t n_cells = dim == 0 ? (cells.empty() ? 1 : 0) : cells.size() / dim;
    NeighborCounts out;
    out.dim = dim;
    out.engine = resolve_engine(n_cells, dim, engine);
    if (dim == 0) {
        out.counts.assign(n_cells, 0);
        return out;
    }
    out.counts = out.engine == CountingEngine::Hash ? count_hash(cells, dim, n_cells)
                                                    : count_pairwise(cells, dim, n_cells);
    return out;
}

NeighborCounts count_neighbors(const GriddedCloud& grid, CountingEngine engine) {
    if (grid.size() == 0) {
        throw Error(ErrorKind::InvalidArgument, "count_neighbors: empty grid");
    }
    NeighborCounts out;
    if (grid.dim() == 0) {
        out.counts.assign(grid.size(), 0);
        out.engine = resolve_engine(grid.size(), 0, engine);
    } else {
        out = count_cell_neighbors(grid.cells(), grid.dim(), engine);
    }
    out.spacing = grid.spacing();
    return out;
}

ConnectivityResult connectivity_factor(const NeighborCounts& counts) {
    ConnectivityResult r;
    r.dim = counts.dim;
    r.point_count = counts.counts.size();
    for (std::uint32_t c : counts.counts) r.total_interactions += c;
    if (counts.dim == 0) {
        r.cf = 1.0;
        return r;
    }
    if (r.point_count == 0) return r;
    r.cf = static_cast<double>(r.total_interactions) /
           (static_cast<double>(r.point_count) * moore_neighborhood_size(counts.dim));
    return r;
}

double space_convert_cf(double cf, int m, int n) {
    if (m < 0 || n < 0 || m > n) {
        throw Error(ErrorKind::DomainError, "space_convert_cf requires 0 <= m <= n");
    }
    if (n == 0) return 1.0;
    return cf * moore_neighborhood_size(static_cast<std::size_t>(m)) /
           moore_neighborhood_size(static_cast<std::size_t>(n));
}

}  // namespace dimgrid
