#pragma once

// Brute-force reference computations shared by the unit and acceptance tests.
// Everything here enumerates explicitly and avoids the library's counting code.

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Rational = boost::multiprecision::cpp_rational;
using Cell = std::vector<std::int64_t>;

inline std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

/// Every vector in {0..side-1}^dim, odometer order.
inline std::vector<Cell> box(int dim, int side) {
    std::vector<Cell> out;
    Cell c(static_cast<std::size_t>(dim), 0);
    for (std::int64_t i = 0; i < ipow(side, dim); ++i) {
        out.push_back(c);
        for (int j = 0; j < dim; ++j) {
            if (++c[static_cast<std::size_t>(j)] < side) break;
            c[static_cast<std::size_t>(j)] = 0;
        }
    }
    return out;
}

/// Chebyshev distance 1 between distinct cells, optionally on a torus of side `period`.
inline bool adjacent(const Cell& a, const Cell& b, int period = 0) {
    bool same = true;
    for (std::size_t j = 0; j < a.size(); ++j) {
        std::int64_t d = std::llabs(a[j] - b[j]);
        if (period > 0) d = std::min<std::int64_t>(d, period - d);
        if (d > 1) return false;
        if (d != 0) same = false;
    }
    return !same;
}

/// Sum of neighbor counts over all pairs, O(N^2).
inline std::uint64_t total_neighbors(const std::vector<Cell>& cells, int period = 0) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        for (std::size_t k = 0; k < cells.size(); ++k) {
            if (i != k && adjacent(cells[i], cells[k], period)) ++total;
        }
    }
    return total;
}

inline std::vector<std::uint32_t> neighbor_counts(const std::vector<Cell>& cells) {
    std::vector<std::uint32_t> out(cells.size(), 0);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        for (std::size_t k = 0; k < cells.size(); ++k) {
            if (i != k && adjacent(cells[i], cells[k])) ++out[i];
        }
    }
    return out;
}

inline Rational cf(std::uint64_t total, std::size_t points, int n) {
    if (n == 0) return Rational(1);
    return Rational(total) / (Rational(points) * (ipow(3, n) - 1));
}

/// Pads each m-dimensional cell with zeros up to n coordinates.
inline std::vector<Cell> embed(const std::vector<Cell>& cells, int n) {
    std::vector<Cell> out;
    for (auto c : cells) {
        c.resize(static_cast<std::size_t>(n), 0);
        out.push_back(c);
    }
    return out;
}

/// CF of the 3^m block {0,1,2}^m embedded axis-aligned in R^n.
inline Rational minimal_set_cf(int m, int n) {
    const auto cells = embed(box(m, 3), n);
    return cf(total_neighbors(cells), cells.size(), n);
}

/// Labeled torus: label = number of odd coordinates; keep labels >= n - m.
inline Rational maximal_set_cf(int m, int n, int side = 4) {
    std::vector<Cell> kept;
    for (const auto& c : box(n, side)) {
        int odd = 0;
        for (auto v : c) odd += static_cast<int>(v & 1);
        if (odd >= n - m) kept.push_back(c);
    }
    return cf(total_neighbors(kept, side), kept.size(), n);
}

/// Type-y neighbors of the type-x point (1,..,1,0,..,0) (x ones) in the labeled lattice.
inline std::int64_t cross_alpha(int x, int y, int n) {
    std::int64_t count = 0;
    for (const auto& off : box(n, 3)) {
        bool zero = true;
        int odd = 0;
        for (int j = 0; j < n; ++j) {
            const std::int64_t d = off[static_cast<std::size_t>(j)] - 1;
            if (d != 0) zero = false;
            const std::int64_t v = (j < x ? 1 : 0) + d;
            odd += static_cast<int>(v & 1);
        }
        if (!zero && odd == y) ++count;
    }
    return count;
}

}  // namespace oracle
