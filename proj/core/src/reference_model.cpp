#include "dimgrid/reference_model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "dimgrid/datagen.hpp"
#include "dimgrid/error.hpp"
#include "dimgrid/gridding.hpp"
#include "dimgrid/neighborhood.hpp"

namespace dimgrid {

namespace {

constexpr int kCacheVersion = 1;

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t x = seed ^ (salt * 0x9E3779B97F4A7C15ull);
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

nlohmann::json key_to_json(const ReferenceKey& k) {
    return {{"d", k.d},
            {"d_max", k.d_max},
            {"n_bucket", k.n_bucket},
            {"noise_bucket", k.noise_bucket},
            {"ip_target", k.ip_target},
            {"seed", k.seed}};
}

ReferenceKey key_from_json(const nlohmann::json& j) {
    ReferenceKey k;
    k.d = j.at("d").get<int>();
    k.d_max = j.at("d_max").get<int>();
    k.n_bucket = j.at("n_bucket").get<int>();
    k.noise_bucket = j.at("noise_bucket").get<double>();
    k.ip_target = j.at("ip_target").get<double>();
    k.seed = j.value("seed", std::uint64_t{0});
    return k;
}

}  // namespace

const std::vector<double>& noise_ladder() {
    static const std::vector<double> ladder = {0.0, 0.001, 0.003, 0.01, 0.03, 0.1, 0.3};
    return ladder;
}

double noise_bucket(double sigma) {
    if (!(sigma >= 0.0005)) return 0.0;
    const auto& ladder = noise_ladder();
    double best = ladder[1];
    double best_gap = std::abs(std::log(sigma) - std::log(best));
    for (std::size_t i = 2; i < ladder.size(); ++i) {
        const double gap = std::abs(std::log(sigma) - std::log(ladder[i]));
        if (gap < best_gap) {
            best_gap = gap;
            best = ladder[i];
        }
    }
    return best;
}

int point_bucket(std::size_t n) {
    if (n <= 1) return 0;
    return static_cast<int>(std::lround(std::log2(static_cast<double>(n))));
}

std::size_t bucket_point_count(int n_bucket) { return std::size_t{1} << std::clamp(n_bucket, 0, 40); }

ReferenceKey make_reference_key(int d, int d_max, std::size_t n_points, double sigma, double ip_target,
                                std::uint64_t seed) {
    return {d, d_max, point_bucket(n_points), noise_bucket(sigma), ip_target, seed};
}

ReferenceCache::ReferenceCache(std::string path, bool read_only)
    : path_(std::move(path)), read_only_(read_only) {
    std::ifstream in(path_);
    if (!in) return;
    nlohmann::json doc;
    try {
        in >> doc;
        for (const auto& e : doc.at("entries")) {
            entries_.push_back({key_from_json(e.at("key")), e.at("anchors").get<std::vector<double>>()});
        }
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorKind::Parse, "reference cache '" + path_ + "': " + ex.what());
    }
}

std::optional<ReferenceModel> ReferenceCache::find(const ReferenceKey& key) const {
    std::lock_guard lock(mutex_);
    for (const auto& e : entries_) {
        if (e.key == key) return e;
    }
    return std::nullopt;
}

std::size_t ReferenceCache::size() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
}

void ReferenceCache::insert(const ReferenceModel& model) {
    std::lock_guard lock(mutex_);
    auto it = std::find_if(entries_.begin(), entries_.end(), [&](const auto& e) { return e.key == model.key; });
    if (it != entries_.end()) {
        *it = model;
    } else {
        entries_.push_back(model);
    }
    if (!path_.empty() && !read_only_) save_locked();
}

void ReferenceCache::save_locked() const {
    nlohmann::json doc;
    doc["version"] = kCacheVersion;
    doc["entries"] = nlohmann::json::array();
    for (const auto& e : entries_) {
        doc["entries"].push_back({{"key", key_to_json(e.key)}, {"anchors", e.anchors}});
    }
    const std::string tmp = path_ + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw Error(ErrorKind::CacheWrite, "cannot write '" + tmp + "'");
        out << doc.dump(2) << '\n';
        if (!out) throw Error(ErrorKind::CacheWrite, "write failed for '" + tmp + "'");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path_, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw Error(ErrorKind::CacheWrite, "cannot replace '" + path_ + "'");
    }
}

double reference_anchor(const ReferenceKey& key, int m) {
    if (m == 0) return 0.0;  // S^0 here is a single point: one cell, no neighbors.
    const std::size_t n = bucket_point_count(key.n_bucket);
    // Unit-box noise maps to twice the value on the radius-1 sphere (range 2).
    const PointCloud sphere =
        datagen::hypersphere(m, n, 2.0 * key.noise_bucket, mix_seed(key.seed, static_cast<std::uint64_t>(m)));
    PointCloud unit;
    try {
        unit = normalize_global(sphere).cloud;
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::ZeroRange) return 0.0;
        throw;
    }
    const double lo = std::clamp(key.ip_target - kReferenceIpHalfWidth, 1e-9, 100.0);
    const double hi = std::clamp(key.ip_target + kReferenceIpHalfWidth, lo, 100.0);
    const SpacingSearch found = find_spacing(unit, lo, hi);
    const GriddedCloud grid = snap_to_grid(unit, found.spacing);
    if (grid.size() < 2) return 0.0;
    const NeighborCounts counts = count_neighbors(grid);
    double total = 0.0;
    for (auto c : counts.counts) total += c;
    return total / static_cast<double>(grid.size());
}

ReferenceResult generate_reference_model(const ReferenceRequest& request, ReferenceCache* cache) {
    if (request.d_max < 0 || !(request.sigma >= 0.0) || request.n_points == 0) {
        throw Error(ErrorKind::InvalidArgument, "reference model requires d_max >= 0, sigma >= 0, n >= 1");
    }
    ReferenceResult result;
    const ReferenceKey key =
        make_reference_key(request.d, request.d_max, request.n_points, request.sigma, request.ip_target, request.seed);
    if (cache) {
        if (auto hit = cache->find(key)) {
            result.model = std::move(*hit);
            result.cache_hit = true;
            return result;
        }
    }
    result.model.key = key;
    result.model.anchors.assign(static_cast<std::size_t>(request.d_max) + 1, 0.0);
    auto& anchors = result.model.anchors;
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
    for (int m = 0; m <= request.d_max; ++m) {
        try {
            anchors[static_cast<std::size_t>(m)] = reference_anchor(key, m);
        } catch (...) {
#pragma omp critical(dimgrid_reference_failure)
            failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    if (cache) {
        try {
            cache->insert(result.model);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::CacheWrite) throw;
            result.cache_error = e.what();
        }
    }
    return result;
}

}  // namespace dimgrid
