#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dimgrid {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// C(n, k); zero whenever k < 0, k > n or n < 0.
Integer binomial(int n, int k);

/// Number of type-t points (t non-zero offsets) in the m-dimensional minimal set: 2^t C(m, t).
Integer alpha(int m, int t);

/// Neighbor count of a type-t point inside the m-dimensional minimal set: 2^t 3^(m-t) - 1.
Integer a_count(int m, int t);

/// Type-y neighbors of a type-x point in the n-dimensional labeled grid.
Integer cross_alpha(int x, int y, int n);

/// Lower CF bound: CF of the m-dimensional minimal set embedded in n dimensions.
Rational lower_cf(int m, int n);
/// Middle CF value: CF of the full m-dimensional grid embedded in n dimensions.
Rational middle_cf(int m, int n);
/// Upper CF bound: CF of the maximal set keeping labels n-m..n.
Rational upper_cf(int m, int n);

/// CF contribution of one type-t point in the maximal set of dimension m. Requires n-m <= t <= n.
Rational chi(int m, int t, int n);
/// Relative frequency of type-t points in the maximal set of dimension m. Requires n-m <= t <= n.
Rational type_frequency(int m, int t, int n);

struct BoundsRow {
    int m = 0;
    Rational lower;
    Rational middle;
    Rational upper;
};

struct BoundsTable {
    int n = 0;
    std::vector<BoundsRow> rows;  ///< m = 0..n
};

BoundsTable lmu_table(int n);

struct LmuClassification {
    int m_hat = 0;
    std::vector<int> candidates;  ///< every m whose [lower, upper] contains cf
};

/**
 * Interval classification of a CF value against the bounds for ambient n.
 *
 * Candidates are all m with lower <= cf <= upper. Among candidates, the one
 * whose middle value is nearest to cf wins (ties go to the smaller m). With no
 * candidate, the m whose interval is closest to cf wins.
 */
LmuClassification classify_lmu(double cf, int n);

double to_double(const Rational& value);

/// Fixed-point decimal rendering rounded half-up to `significant` digits,
/// trailing zeros stripped ("0.166666666667", "0.25", "1").
std::string to_decimal_string(const Rational& value, int significant = 12);

/**
 * Period-2 labeled grid on a torus of side 4 per axis.
 *
 * A cell's label is the number of odd coordinates of its index; label-0 cells
 * form the sublattice of spacing 2. The maximal set of dimension m keeps the
 * labels n-m..n. Side 4 is the smallest even side on which all 3^n - 1
 * wraparound neighbors are distinct cells.
 */
struct LabeledTorus {
    static constexpr int kSide = 4;

    int n = 0;
    std::vector<std::int64_t> cells;  ///< row-major, n columns, entries in [0, kSide)
    std::vector<int> labels;

    [[nodiscard]] std::size_t size() const noexcept { return labels.size(); }
};

/// Maximal set of dimension m in ambient n as a labeled torus. Requires 0 <= m <= n <= 4.
LabeledTorus maximal_set_torus(int n, int m);

/// Exact CF of a torus cell set with wraparound neighbor counting.
Rational wraparound_cf(const LabeledTorus& torus);

}  // namespace dimgrid
