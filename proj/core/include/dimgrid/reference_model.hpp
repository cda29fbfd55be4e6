#pragma once

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace dimgrid {

/// Bucketed lookup key for cached reference anchors.
struct ReferenceKey {
    int d = 0;                 ///< ambient dimension of the data being estimated
    int d_max = 0;
    int n_bucket = 0;          ///< round(log2 N)
    double noise_bucket = 0;   ///< value on the noise ladder
    double ip_target = 50.0;   ///< centre of the IP window used for gridding
    std::uint64_t seed = 0;

    friend bool operator==(const ReferenceKey&, const ReferenceKey&) = default;
};

/// Mean neighbor counts mu_0..mu_Dmax of calibration hyperspheres.
struct ReferenceModel {
    ReferenceKey key;
    std::vector<double> anchors;
};

/// Noise ladder used for bucketing: {0, 0.001, 0.003, 0.01, 0.03, 0.1, 0.3}.
const std::vector<double>& noise_ladder();

/// Nearest ladder value in log space; values below 0.0005 map to 0.
double noise_bucket(double sigma);

/// round(log2 n), minimum 0.
int point_bucket(std::size_t n);

/// Point count used to generate a bucket's reference spheres: 2^bucket.
std::size_t bucket_point_count(int n_bucket);

/// Half-width of the IP window used around ReferenceKey::ip_target.
inline constexpr double kReferenceIpHalfWidth = 2.0;

ReferenceKey make_reference_key(int d, int d_max, std::size_t n_points, double sigma, double ip_target,
                                std::uint64_t seed);

/**
 * Reference-model store, optionally backed by a JSON file.
 *
 * The file is one document {version, entries:[{key:{...}, anchors:[...]}]},
 * loaded on construction and rewritten atomically (temp file + rename) after
 * each insert. Concurrent inserts of the same key keep the last write.
 */
class ReferenceCache {
public:
    /// In-memory cache.
    ReferenceCache() = default;
    /// File-backed cache; a missing file starts empty. Malformed files throw Parse.
    explicit ReferenceCache(std::string path, bool read_only = false);

    [[nodiscard]] std::optional<ReferenceModel> find(const ReferenceKey& key) const;

    /// Stores a model; persists it unless read-only. Throws CacheWrite when the
    /// file cannot be written (the in-memory entry is kept).
    void insert(const ReferenceModel& model);

    [[nodiscard]] std::size_t size() const;
    [[nodiscard]] const std::string& path() const noexcept { return path_; }
    [[nodiscard]] bool read_only() const noexcept { return read_only_; }

private:
    void save_locked() const;

    std::string path_;
    bool read_only_ = false;
    mutable std::mutex mutex_;
    std::vector<ReferenceModel> entries_;
};

struct ReferenceRequest {
    std::size_t n_points = 1000;
    int d = 1;
    int d_max = 1;
    double ip_target = 50.0;
    double sigma = 0.0;          ///< noise in unit-box coordinates
    std::uint64_t seed = 0;
};

struct ReferenceResult {
    ReferenceModel model;
    bool cache_hit = false;
    std::optional<std::string> cache_error;
};

/**
 * Empirical anchors: for each m in 0..d_max, grid a noisy S^m sample at the
 * bucketed point count and IP window and record the mean neighbor count
 * (0 when fewer than two cells survive). Served from `cache` when present.
 */
ReferenceResult generate_reference_model(const ReferenceRequest& request, ReferenceCache* cache = nullptr);

/// Anchors for a single dimension m under `key`; exposed for tests and tooling.
double reference_anchor(const ReferenceKey& key, int m);

}  // namespace dimgrid
