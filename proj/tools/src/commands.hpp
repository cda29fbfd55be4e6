#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dimgrid/neighborhood.hpp"
#include "dimgrid/point_cloud.hpp"

namespace dimgrid::cli {

using Json = nlohmann::ordered_json;

enum class HeaderMode { Auto, Yes, No };

struct CacheConfig {
    std::string path;        ///< empty: flag absent
    bool read_only = false;
};

struct EstimateConfig {
    std::string in;
    std::string out;
    std::string method = "edcf";
    std::optional<double> ip_min;
    std::optional<double> ip_max;
    double base_target = 50.0;
    int d_max = 50;
    std::uint64_t seed = 0;
    CountingEngine engine = CountingEngine::Auto;
    std::optional<double> noise;
    int noise_k = 2;
    int mle_k = 20;
    double discard = 0.1;
    HeaderMode header = HeaderMode::Auto;
    CacheConfig cache;
};

struct BoundsConfig {
    int ambient = 2;
    bool json = false;
    int digits = -1;  ///< -1: 6 for text, 12 for JSON
};

struct CalibrateConfig {
    int d = 1;
    int d_max = 1;
    std::size_t n = 1000;
    double noise = 0.0;
    std::optional<double> ip_target;
    double base_target = 50.0;
    std::uint64_t seed = 0;
    CacheConfig cache;
};

struct GenerateConfig {
    std::string dataset;
    std::string out;
    std::optional<std::size_t> n;
    double noise = 0.0;
    int intrinsic = -1;
    int ambient = -1;
    std::uint64_t seed = 0;
    bool classify = false;
};

struct BoundaryConfig {
    std::string train;
    std::string raster;
    std::string report;
    std::string boundary_out;
    int k = 5;
    int resolution = 512;
    std::uint64_t seed = 0;
    HeaderMode header = HeaderMode::Auto;
};

struct BenchmarkConfig {
    std::string suite = "desk";
    std::vector<double> noise{0.01};
    std::vector<std::size_t> n{1000};
    std::vector<std::string> methods{"edcf", "dcf", "twonn", "mle"};
    int repeats = 5;
    std::uint64_t seed = 0;
    std::string out;
    CacheConfig cache;
};

/// Cache path from the flag, then DIMGRID_CACHE; empty when neither is set.
std::string resolve_cache_path(const CacheConfig& config);

/// Reads a CSV of points; a header row is detected when any first-row field is not a number.
LabeledCloud load_points(const std::string& path, HeaderMode header, bool labels);

Json cmd_estimate(const EstimateConfig& config);
void cmd_bounds(const BoundsConfig& config, std::ostream& out);
Json cmd_calibrate(const CalibrateConfig& config);
Json cmd_generate(const GenerateConfig& config, std::ostream& out);
Json cmd_boundary(const BoundaryConfig& config);
void cmd_benchmark(const BenchmarkConfig& config, std::ostream& out);

}  // namespace dimgrid::cli
