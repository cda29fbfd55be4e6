#include "dimgrid/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "dimgrid/error.hpp"

namespace dimgrid::datagen {

namespace {

constexpr double kPi = 3.14159265358979323846;

using Rng = std::mt19937_64;

void add_noise(std::vector<double>& coords, double sigma, Rng& rng) {
    if (sigma <= 0.0) return;
    std::normal_distribution<double> gauss(0.0, sigma);
    for (double& v : coords) v += gauss(rng);
}

}  // namespace

PointCloud hypersphere(int m, std::size_t n, double sigma, std::uint64_t seed) {
    if (m < 0 || n == 0) {
        throw Error(ErrorKind::InvalidArgument, "hypersphere requires m >= 0 and n >= 1");
    }
    if (m == 0) {
        return PointCloud(std::vector<double>(n, 1.0), 1);
    }
    const auto d = static_cast<std::size_t>(m) + 1;
    Rng rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> coords(n * d);
    for (std::size_t i = 0; i < n; ++i) {
        double norm2 = 0.0;
        do {
            norm2 = 0.0;
            for (std::size_t j = 0; j < d; ++j) {
                const double g = gauss(rng);
                coords[i * d + j] = g;
                norm2 += g * g;
            }
        } while (norm2 < 1e-24);
        const double inv = 1.0 / std::sqrt(norm2);
        for (std::size_t j = 0; j < d; ++j) coords[i * d + j] *= inv;
    }
    add_noise(coords, sigma, rng);
    return PointCloud(std::move(coords), d);
}

const std::vector<ManifoldInfo>& manifold_catalog() {
    static const std::vector<ManifoldInfo> catalog = {
        {"M1_Sphere", "sphere", 10, 11, "unit sphere S^m in the first m+1 coordinates"},
        {"M2_Affine_3to5", "affine", 3, 5, "uniform [0,1]^m cube under a seeded Gaussian linear map"},
        {"M5a_Helix1d", "helix1d", 1, 3, "((2+cos 8t) cos t, (2+cos 8t) sin t, sin 8t)"},
        {"M5b_Helix2d", "helix2d", 2, 3, "helicoid (r cos p, r sin p, p / 2pi), r in [0,1], p in [0,4pi)"},
        {"M7_Roll", "swissroll", 2, 3, "(t cos t, h, t sin t) / 10, t in [1.5pi, 4.5pi], h in [0,21]"},
        {"M9_Affine", "affine_box", 20, 20, "uniform [0,1]^m box"},
        {"M11_Moebius", "mobius", 2, 3, "Moebius strip, u in [0,2pi), v in [-1,1]"},
        {"M13a_Scurve", "scurve", 2, 3, "(sin t, 2h, sign(t)(cos t - 1)), t in [-1.5pi, 1.5pi]"},
        {"M13b_Spiral", "spiral", 1, 13, "t and (t cos 2pi k t, t sin 2pi k t) for k = 1..6"},
    };
    return catalog;
}

namespace {

const ManifoldInfo& lookup(std::string_view id) {
    for (const auto& info : manifold_catalog()) {
        if (info.id == id || info.alias == id) return info;
    }
    throw Error(ErrorKind::UnknownGenerator, "unknown manifold '" + std::string(id) + "'");
}

}  // namespace

std::pair<int, int> manifold_dimensions(const ManifoldSpec& spec) {
    const ManifoldInfo& info = lookup(spec.id);
    int m = spec.intrinsic >= 0 ? spec.intrinsic : info.intrinsic;
    int d = spec.ambient >= 0 ? spec.ambient : info.ambient;
    const bool generalizes_m = info.alias == "sphere" || info.alias == "affine" || info.alias == "affine_box";
    if (!generalizes_m && m != info.intrinsic) {
        throw Error(ErrorKind::InvalidArgument, std::string(info.id) + " has fixed intrinsic dimension");
    }
    if (info.alias == "sphere" && spec.ambient < 0) d = m + 1;
    if (info.alias == "affine_box" && spec.ambient < 0) d = m;
    const int min_ambient = info.alias == "sphere" ? m + 1 : (generalizes_m ? m : info.ambient);
    if (d < min_ambient) {
        throw Error(ErrorKind::InvalidArgument, std::string(info.id) + " needs ambient dimension >= " +
                                                    std::to_string(min_ambient));
    }
    return {m, d};
}

PointCloud manifold(const ManifoldSpec& spec) {
    if (spec.n == 0) throw Error(ErrorKind::InvalidArgument, "manifold requires n >= 1");
    const ManifoldInfo& info = lookup(spec.id);
    const auto [m, d] = manifold_dimensions(spec);
    const auto n = spec.n;
    const auto ud = static_cast<std::size_t>(d);
    Rng rng(spec.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> x(n * ud, 0.0);
    auto at = [&](std::size_t i, std::size_t j) -> double& { return x[i * ud + j]; };
    const std::string_view alias = info.alias;

    if (alias == "sphere") {
        const PointCloud s = hypersphere(m, n, 0.0, spec.seed);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < s.dim(); ++j) at(i, j) = s(i, j);
        rng.discard(n);  // decouple noise stream from direction stream
    } else if (alias == "affine") {
        const auto um = static_cast<std::size_t>(m);
        std::normal_distribution<double> gauss(0.0, 1.0);
        std::vector<double> a(ud * um);
        for (double& v : a) v = gauss(rng);
        std::vector<double> u(um);
        for (std::size_t i = 0; i < n; ++i) {
            for (double& v : u) v = unit(rng);
            for (std::size_t r = 0; r < ud; ++r) {
                double acc = 0.0;
                for (std::size_t c = 0; c < um; ++c) acc += a[r * um + c] * u[c];
                at(i, r) = acc;
            }
        }
    } else if (alias == "affine_box") {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < static_cast<std::size_t>(m); ++j) at(i, j) = unit(rng);
    } else if (alias == "helix1d") {
        for (std::size_t i = 0; i < n; ++i) {
            const double t = 2.0 * kPi * unit(rng);
            const double r = 2.0 + std::cos(8.0 * t);
            at(i, 0) = r * std::cos(t);
            at(i, 1) = r * std::sin(t);
            at(i, 2) = std::sin(8.0 * t);
        }
    } else if (alias == "helix2d") {
        for (std::size_t i = 0; i < n; ++i) {
            const double r = unit(rng);
            const double p = 4.0 * kPi * unit(rng);
            at(i, 0) = r * std::cos(p);
            at(i, 1) = r * std::sin(p);
            at(i, 2) = p / (2.0 * kPi);
        }
    } else if (alias == "swissroll") {
        for (std::size_t i = 0; i < n; ++i) {
            const double t = 1.5 * kPi * (1.0 + 2.0 * unit(rng));
            const double h = 21.0 * unit(rng);
            at(i, 0) = t * std::cos(t) / 10.0;
            at(i, 1) = h / 10.0;
            at(i, 2) = t * std::sin(t) / 10.0;
        }
    } else if (alias == "mobius") {
        for (std::size_t i = 0; i < n; ++i) {
            const double u = 2.0 * kPi * unit(rng);
            const double v = 2.0 * unit(rng) - 1.0;
            const double r = 1.0 + 0.5 * v * std::cos(u / 2.0);
            at(i, 0) = r * std::cos(u);
            at(i, 1) = r * std::sin(u);
            at(i, 2) = 0.5 * v * std::sin(u / 2.0);
        }
    } else if (alias == "scurve") {
        for (std::size_t i = 0; i < n; ++i) {
            const double t = 3.0 * kPi * (unit(rng) - 0.5);
            const double h = unit(rng);
            at(i, 0) = std::sin(t);
            at(i, 1) = 2.0 * h;
            at(i, 2) = (t >= 0.0 ? 1.0 : -1.0) * (std::cos(t) - 1.0);
        }
    } else if (alias == "spiral") {
        for (std::size_t i = 0; i < n; ++i) {
            const double t = unit(rng);
            at(i, 0) = t;
            for (std::size_t k = 1; k <= 6; ++k) {
                at(i, 2 * k - 1) = t * std::cos(2.0 * kPi * static_cast<double>(k) * t);
                at(i, 2 * k) = t * std::sin(2.0 * kPi * static_cast<double>(k) * t);
            }
        }
    }
    add_noise(x, spec.noise, rng);
    return PointCloud(std::move(x), ud);
}

CircleParams circle_preset(CircleKind kind) {
    CircleParams p;
    if (kind == CircleKind::Overlapping) {
        p.radii = {3.0, 3.5};
        p.noise_rate = 0.7;
    }
    return p;
}

LabeledCloud circles(const CircleParams& params, std::uint64_t seed) {
    if (params.angle_samples == 0 || params.points_per_class == 0 || params.noise_rate < 0.0 ||
        params.radii[0] <= 0.0 || params.radii[1] <= 0.0) {
        throw Error(ErrorKind::InvalidArgument, "circle parameters must be positive");
    }
    Rng rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    LabeledCloud out;
    std::vector<double> coords;
    coords.reserve(4 * params.points_per_class);
    for (int c = 0; c < 2; ++c) {
        const double r = params.radii[static_cast<std::size_t>(c)];
        for (std::size_t j = 0; j < params.points_per_class; ++j) {
            const double theta = 2.0 * kPi * static_cast<double>(j % params.angle_samples) /
                                 static_cast<double>(params.angle_samples);
            double nx = 0.0, ny = 0.0;
            if (params.noise_rate > 0.0) {
                nx = unit(rng) * params.noise_rate - unit(rng) * params.noise_rate;
                ny = unit(rng) * params.noise_rate - unit(rng) * params.noise_rate;
            }
            coords.push_back(r * std::cos(theta) + params.x_center + nx);
            coords.push_back(r * std::sin(theta) + params.y_center + ny);
            out.labels.push_back(c + 1);
        }
    }
    out.points = PointCloud(std::move(coords), 2);
    return out;
}

LabeledCloud sinusoids(const SinusoidParams& params, std::uint64_t seed) {
    if (params.points_per_class == 0 || params.noise_rate < 0.0 || params.x_max < params.x_min) {
        throw Error(ErrorKind::InvalidArgument, "invalid sinusoid parameters");
    }
    Rng rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    LabeledCloud out;
    std::vector<double> coords;
    const std::size_t n = params.points_per_class;
    for (int c = 0; c < 2; ++c) {
        const auto k = static_cast<std::size_t>(c);
        for (std::size_t j = 0; j < n; ++j) {
            const double x = n == 1 ? params.x_min
                                    : params.x_min + (params.x_max - params.x_min) * static_cast<double>(j) /
                                                         static_cast<double>(n - 1);
            const double noise = params.noise_rate > 0.0 ? unit(rng) * params.noise_rate - params.noise_rate / 2.0 : 0.0;
            coords.push_back(x);
            coords.push_back(params.amplitude * std::sin(x + params.phase[k]) + params.y_center[k] + noise);
            out.labels.push_back(c + 1);
        }
    }
    out.points = PointCloud(std::move(coords), 2);
    return out;
}

AffineIFS barnsley_fern() {
    return {"fern",
            {{0.00, 0.00, 0.00, 0.16, 0.00, 0.00},
             {0.85, 0.04, -0.04, 0.85, 0.00, 1.60},
             {0.20, -0.26, 0.23, 0.22, 0.00, 1.60},
             {-0.15, 0.28, 0.26, 0.24, 0.00, 0.44}},
            {0.01, 0.85, 0.07, 0.07},
            {0.0, 0.0}};
}

AffineIFS sierpinski_carpet() {
    AffineIFS ifs{"carpet", {}, {}, {0.5, 0.5}};
    const double offsets[3] = {0.0, 0.333, 0.666};
    for (double f : offsets) {
        for (double e : offsets) {
            if (e == 0.333 && f == 0.333) continue;
            ifs.maps.push_back({0.333, 0.0, 0.0, 0.333, e, f});
        }
    }
    // Table order: row f = 0, then the two side cells of the middle row, then row f = 0.666.
    ifs.probabilities.assign(ifs.maps.size(), 0.125);
    return ifs;
}

AffineIFS sierpinski_triangle() {
    return {"triangle",
            {{0.5, 0.0, 0.0, 0.5, 0.0, 0.0}, {0.5, 0.0, 0.0, 0.5, 0.5, 0.0}, {0.5, 0.0, 0.0, 0.5, 0.25, 0.433}},
            {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0},
            {0.0, 0.0}};
}

PointCloud chaos_game(const AffineIFS& ifs, std::size_t n, std::uint64_t seed, std::size_t burn_in) {
    if (n == 0 || ifs.maps.empty() || ifs.maps.size() != ifs.probabilities.size()) {
        throw Error(ErrorKind::InvalidArgument, "chaos_game requires n >= 1 and one probability per map");
    }
    double total = 0.0;
    for (double p : ifs.probabilities) {
        if (!(p > 0.0)) throw Error(ErrorKind::InvalidArgument, "IFS probabilities must be positive");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw Error(ErrorKind::InvalidArgument, "IFS probabilities must sum to 1");
    }
    std::vector<double> cumulative(ifs.probabilities.size());
    std::partial_sum(ifs.probabilities.begin(), ifs.probabilities.end(), cumulative.begin());
    cumulative.back() = 1.0;

    Rng rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double x = ifs.start[0];
    double y = ifs.start[1];
    std::vector<double> coords;
    coords.reserve(2 * n);
    for (std::size_t it = 0; it < burn_in + n; ++it) {
        const double u = unit(rng);
        const auto k = static_cast<std::size_t>(
            std::upper_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin());
        const AffineMap& t = ifs.maps[std::min(k, ifs.maps.size() - 1)];
        const double nx = t.a * x + t.b * y + t.e;
        const double ny = t.c * x + t.d * y + t.f;
        x = nx;
        y = ny;
        if (it >= burn_in) {
            coords.push_back(x);
            coords.push_back(y);
        }
    }
    return PointCloud(std::move(coords), 2);
}

LabeledCloud ifs_classification(const AffineIFS& ifs, std::size_t n_per_class, std::uint64_t seed) {
    const PointCloud attractor = chaos_game(ifs, n_per_class, seed);
    double lo[2] = {attractor(0, 0), attractor(0, 1)};
    double hi[2] = {lo[0], lo[1]};
    for (std::size_t i = 0; i < attractor.size(); ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            lo[j] = std::min(lo[j], attractor(i, j));
            hi[j] = std::max(hi[j], attractor(i, j));
        }
    }
    Rng rng(seed ^ 0xA5A5A5A5A5A5A5A5ull);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    LabeledCloud out;
    std::vector<double> coords(attractor.data().begin(), attractor.data().end());
    out.labels.assign(n_per_class, 1);
    for (std::size_t i = 0; i < n_per_class; ++i) {
        coords.push_back(lo[0] + (hi[0] - lo[0]) * unit(rng));
        coords.push_back(lo[1] + (hi[1] - lo[1]) * unit(rng));
        out.labels.push_back(0);
    }
    out.points = PointCloud(std::move(coords), 2);
    return out;
}

}  // namespace dimgrid::datagen
