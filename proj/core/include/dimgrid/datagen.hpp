#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dimgrid/point_cloud.hpp"

namespace dimgrid::datagen {

/**
 * Unit sphere S^m in R^(m+1): Gaussian directions normalized to length 1,
 * then per-coordinate Gaussian noise of standard deviation `sigma`.
 * m = 0 degenerates to N copies of the single point (1).
 */
PointCloud hypersphere(int m, std::size_t n, double sigma, std::uint64_t seed);

/// Benchmark manifold request. Noise is a per-coordinate Gaussian sigma
/// relative to the manifold's unit characteristic scale (0.01 = "1% noise").
struct ManifoldSpec {
    std::string id;
    int intrinsic = -1;  ///< -1 selects the generator default
    int ambient = -1;    ///< -1 selects the generator default
    std::size_t n = 1000;
    double noise = 0.0;
    std::uint64_t seed = 0;
};

struct ManifoldInfo {
    std::string_view id;
    std::string_view alias;
    int intrinsic;
    int ambient;
    std::string_view description;
};

/// Implemented benchmark manifolds with their default dimensions.
const std::vector<ManifoldInfo>& manifold_catalog();

/// Throws UnknownGenerator for ids outside the catalog.
PointCloud manifold(const ManifoldSpec& spec);

/// Resolved intrinsic/ambient dimensions for a request (defaults filled in).
std::pair<int, int> manifold_dimensions(const ManifoldSpec& spec);

struct CircleParams {
    std::array<double, 2> radii{3.0, 4.0};
    std::size_t angle_samples = 360;
    std::size_t points_per_class = 8000;
    double noise_rate = 0.5;
    double x_center = 0.0;
    double y_center = 0.0;
};

enum class CircleKind { Concentric, Overlapping };

/// Presets: concentric radii 3.0/4.0 with noise 0.5, overlapping radii 3.0/3.5 with noise 0.7.
CircleParams circle_preset(CircleKind kind);

/// Two labeled rings (labels 1 and 2). Angles cycle through `angle_samples`
/// evenly spaced values in [0, 2pi); noise per coordinate is
/// rand() * rate - rand() * rate with rand() uniform in [0, 1).
LabeledCloud circles(const CircleParams& params, std::uint64_t seed);

struct SinusoidParams {
    double amplitude = 1.0;
    std::array<double, 2> phase{0.0, 3.14159265358979323846};
    std::array<double, 2> y_center{0.0, 0.5};
    double noise_rate = 0.5;
    double x_min = 0.0;
    double x_max = 2.0 * 3.14159265358979323846;
    std::size_t points_per_class = 1000;
};

/// Two labeled sinusoids (labels 1 and 2) over evenly spaced x; y noise is
/// rand() * rate - rate / 2.
LabeledCloud sinusoids(const SinusoidParams& params, std::uint64_t seed);

/// One affine map (x, y) -> (a x + b y + e, c x + d y + f).
struct AffineMap {
    double a, b, c, d, e, f;
};

struct AffineIFS {
    std::string name;
    std::vector<AffineMap> maps;
    std::vector<double> probabilities;
    std::array<double, 2> start{0.0, 0.0};
};

AffineIFS barnsley_fern();
AffineIFS sierpinski_carpet();
AffineIFS sierpinski_triangle();

/// Chaos game: discard `burn_in` iterates, then emit n points.
/// Throws InvalidArgument when probabilities are not positive or do not sum to 1.
PointCloud chaos_game(const AffineIFS& ifs, std::size_t n, std::uint64_t seed, std::size_t burn_in = 100);

/// Two-class dataset: chaos-game points (label 1) and uniform points in the
/// attractor's bounding box (label 0), n_per_class each.
LabeledCloud ifs_classification(const AffineIFS& ifs, std::size_t n_per_class, std::uint64_t seed);

}  // namespace dimgrid::datagen
