#include "dimgrid/bounds.hpp"

#include <algorithm>
#include <limits>

#include "dimgrid/error.hpp"

namespace dimgrid {

namespace {

Integer ipow(int base, int exp) {
    Integer r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

void require(bool ok, const char* what) {
    if (!ok) throw Error(ErrorKind::DomainError, what);
}

Rational abs_rational(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace

Integer binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Integer r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

Integer alpha(int m, int t) {
    require(m >= 0 && t >= 0 && t <= m, "alpha requires 0 <= t <= m");
    return ipow(2, t) * binomial(m, t);
}

Integer a_count(int m, int t) {
    require(m >= 0 && t >= 0 && t <= m, "a_count requires 0 <= t <= m");
    return ipow(2, t) * ipow(3, m - t) - 1;
}

Integer cross_alpha(int x, int y, int n) {
    require(n >= 0 && x >= 0 && y >= 0 && x <= n && y <= n, "cross_alpha requires 0 <= x, y <= n");
    Integer sum = 0;
    for (int t = 0; t <= x; ++t) {
        const int inner = y - (x - t);
        if (inner < 0 || inner > n - x) continue;
        sum += ipow(2, t) * binomial(x, t) * ipow(2, inner) * binomial(n - x, inner);
    }
    if (x == y) sum -= 1;
    return sum;
}

Rational lower_cf(int m, int n) {
    require(m >= 0 && n >= 0 && m <= n, "lower_cf requires 0 <= m <= n");
    if (n == 0) return Rational(1);
    return Rational(ipow(7, m) - ipow(3, m), (ipow(3, n) - 1) * ipow(3, m));
}

Rational middle_cf(int m, int n) {
    require(m >= 0 && n >= 0 && m <= n, "middle_cf requires 0 <= m <= n");
    if (n == 0) return Rational(1);
    return Rational(ipow(3, m) - 1, ipow(3, n) - 1);
}

Rational chi(int m, int t, int n) {
    require(m >= 0 && n >= 0 && m <= n && t >= n - m && t <= n, "chi requires n-m <= t <= n");
    if (n == 0) return Rational(1);
    Integer sum = 0;
    for (int i = n - m; i <= n; ++i) sum += cross_alpha(t, i, n);
    return Rational(sum, ipow(3, n) - 1);
}

Rational type_frequency(int m, int t, int n) {
    require(m >= 0 && n >= 0 && m <= n && t >= n - m && t <= n,
            "type_frequency requires n-m <= t <= n");
    Integer total = 0;
    for (int i = n - m; i <= n; ++i) total += binomial(n, i);
    return Rational(binomial(n, t), total);
}

Rational upper_cf(int m, int n) {
    require(m >= 0 && n >= 0 && m <= n, "upper_cf requires 0 <= m <= n");
    if (n == 0) return Rational(1);
    Rational sum = 0;
    for (int t = n - m; t <= n; ++t) sum += type_frequency(m, t, n) * chi(m, t, n);
    return sum;
}

BoundsTable lmu_table(int n) {
    require(n >= 0, "lmu_table requires n >= 0");
    BoundsTable table;
    table.n = n;
    table.rows.reserve(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
        table.rows.push_back({m, lower_cf(m, n), middle_cf(m, n), upper_cf(m, n)});
    }
    return table;
}

LmuClassification classify_lmu(double cf, int n) {
    const BoundsTable table = lmu_table(n);
    const Rational value(cf);
    LmuClassification out;
    Rational best_middle_gap;
    for (const auto& row : table.rows) {
        if (row.lower <= value && value <= row.upper) {
            out.candidates.push_back(row.m);
            const Rational gap = abs_rational(value - row.middle);
            if (out.candidates.size() == 1 || gap < best_middle_gap) {
                best_middle_gap = gap;
                out.m_hat = row.m;
            }
        }
    }
    if (!out.candidates.empty()) return out;

    Rational best_gap;
    bool first = true;
    for (const auto& row : table.rows) {
        const Rational gap = value < row.lower ? Rational(row.lower - value) : Rational(value - row.upper);
        if (first || gap < best_gap) {
            best_gap = gap;
            out.m_hat = row.m;
            first = false;
        }
    }
    return out;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

std::string to_decimal_string(const Rational& value, int significant) {
    require(significant >= 1, "significant digits must be positive");
    if (value == 0) return "0";
    const bool negative = value < 0;
    const Integer p = boost::multiprecision::abs(boost::multiprecision::numerator(value));
    const Integer q = boost::multiprecision::denominator(value);

    auto digits = [](const Integer& v) { return static_cast<int>(v.str().size()); };
    // k = number of decimal places kept; choose so the rounded mantissa has `significant` digits.
    int k = significant - (digits(p) - digits(q)) - 1;
    Integer mantissa;
    const Integer upper = ipow(10, significant);
    for (int attempt = 0; attempt < 4; ++attempt) {
        const Integer num = k >= 0 ? Integer(p * ipow(10, k)) : p;
        const Integer den = k >= 0 ? q : Integer(q * ipow(10, -k));
        mantissa = (2 * num + den) / (2 * den);
        if (mantissa >= upper) {
            --k;
        } else if (mantissa < upper / 10) {
            ++k;
        } else {
            break;
        }
    }

    std::string s = mantissa.str();
    if (k > 0) {
        if (static_cast<int>(s.size()) <= k) {
            s.insert(0, static_cast<std::size_t>(k - static_cast<int>(s.size()) + 1), '0');
        }
        s.insert(s.size() - static_cast<std::size_t>(k), ".");
        while (s.back() == '0') s.pop_back();
        if (s.back() == '.') s.pop_back();
    } else if (k < 0) {
        s.append(static_cast<std::size_t>(-k), '0');
    }
    return negative ? "-" + s : s;
}

LabeledTorus maximal_set_torus(int n, int m) {
    require(n >= 0 && n <= 4 && m >= 0 && m <= n, "maximal_set_torus requires 0 <= m <= n <= 4");
    LabeledTorus torus;
    torus.n = n;
    const int side = LabeledTorus::kSide;
    int total = 1;
    for (int j = 0; j < n; ++j) total *= side;
    std::vector<std::int64_t> cell(static_cast<std::size_t>(n));
    for (int code = 0; code < total; ++code) {
        int rest = code;
        int label = 0;
        for (int j = 0; j < n; ++j) {
            cell[static_cast<std::size_t>(j)] = rest % side;
            label += (rest % side) % 2;
            rest /= side;
        }
        if (label >= n - m) {
            torus.cells.insert(torus.cells.end(), cell.begin(), cell.end());
            torus.labels.push_back(label);
        }
    }
    return torus;
}

Rational wraparound_cf(const LabeledTorus& torus) {
    const int n = torus.n;
    if (n == 0) return Rational(1);
    const int side = LabeledTorus::kSide;
    auto code_of = [&](const std::int64_t* c) {
        int code = 0;
        for (int j = n - 1; j >= 0; --j) code = code * side + static_cast<int>(c[j]);
        return code;
    };
    int total_cells = 1;
    for (int j = 0; j < n; ++j) total_cells *= side;
    std::vector<char> present(static_cast<std::size_t>(total_cells), 0);
    for (std::size_t i = 0; i < torus.size(); ++i) {
        present[static_cast<std::size_t>(code_of(torus.cells.data() + i * static_cast<std::size_t>(n)))] = 1;
    }

    int offsets = 1;
    for (int j = 0; j < n; ++j) offsets *= 3;
    Integer interactions = 0;
    std::vector<std::int64_t> probe(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < torus.size(); ++i) {
        const std::int64_t* base = torus.cells.data() + i * static_cast<std::size_t>(n);
        for (int o = 0; o < offsets; ++o) {
            int rest = o;
            bool self = true;
            for (int j = 0; j < n; ++j) {
                const int delta = rest % 3 - 1;
                rest /= 3;
                self = self && delta == 0;
                probe[static_cast<std::size_t>(j)] = (base[j] + delta + side) % side;
            }
            if (!self && present[static_cast<std::size_t>(code_of(probe.data()))]) interactions += 1;
        }
    }
    if (torus.size() == 0) return Rational(0);
    return Rational(interactions, Integer(torus.size()) * (ipow(3, n) - 1));
}

}  // namespace dimgrid
