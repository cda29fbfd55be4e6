#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "dimgrid/error.hpp"
#include "dimgrid/gridding.hpp"

using namespace dimgrid;

namespace {

PointCloud random_cloud(std::mt19937_64& rng, std::size_t n, std::size_t d, double scale = 1.0) {
    std::normal_distribution<double> g(0.0, scale);
    std::vector<double> c(n * d);
    for (auto& v : c) v = g(rng);
    return PointCloud(std::move(c), d);
}

PointCloud lattice_2d(int side) {
    std::vector<double> c;
    for (int i = 0; i < side; ++i) {
        for (int j = 0; j < side; ++j) {
            c.push_back(i);
            c.push_back(j);
        }
    }
    return PointCloud(std::move(c), 2);
}

}  // namespace

TEST_SUITE("gridding") {

TEST_CASE("normalization examples") {
    const NormalizedCloud a = normalize_global(PointCloud::from_rows({{0, 0}, {2, 1}}));
    CHECK(a.record.scale == 2.0);
    CHECK(a.cloud == PointCloud::from_rows({{0, 0}, {1, 0.5}}));
    const NormalizedCloud b = normalize_global(PointCloud::from_rows({{5, 5}, {5, 5}, {5, 6}}));
    CHECK(b.record.scale == 1.0);
    CHECK(b.cloud == PointCloud::from_rows({{0, 0}, {0, 0}, {0, 1}}));
}

TEST_CASE("uniform cloud lands in the unit box") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0.0, 10.0);
    std::vector<double> c(3000);
    for (auto& v : c) v = u(rng);
    const PointCloud n = normalize_global(PointCloud(c, 3)).cloud;
    double widest = 0.0;
    for (std::size_t j = 0; j < 3; ++j) {
        double lo = 1.0, hi = 0.0;
        for (std::size_t i = 0; i < n.size(); ++i) {
            CHECK(n(i, j) >= 0.0);
            CHECK(n(i, j) <= 1.0);
            lo = std::min(lo, n(i, j));
            hi = std::max(hi, n(i, j));
        }
        widest = std::max(widest, hi - lo);
    }
    CHECK(widest == 1.0);
}

TEST_CASE("snap examples") {
    CHECK(snap_to_grid(PointCloud::from_rows({{0.7}}), 0.5).representative(0)[0] == 0.75);
    CHECK(snap_to_grid(PointCloud::from_rows({{-0.3}}), 0.5).representative(0)[0] == -0.25);
    const GriddedCloud g = snap_to_grid(PointCloud::from_rows({{0.1}, {0.9}}), 1.0);
    REQUIRE(g.size() == 1);
    CHECK(g.representative(0)[0] == 0.5);
    CHECK(g.multiplicity()[0] == 2);
    CHECK(g.achieved_ip() == 50.0);
}

TEST_CASE("identical points give 100 / N") {
    const PointCloud pts = PointCloud::from_rows({{0.3, 0.3}, {0.3, 0.3}, {0.3, 0.3}, {0.3, 0.3}});
    CHECK(information_percentage(pts, 0.1) == 25.0);
}

TEST_CASE("far-apart pair returns the starting spacing") {
    const PointCloud u = PointCloud::from_rows({{0.0}, {1.0}});
    const SpacingSearch found = find_spacing(u, 50.0, 60.0);
    CHECK(found.spacing == 1.0);
    CHECK(found.achieved_ip == 100.0);
    CHECK_FALSE(found.in_range);
}

TEST_CASE("equispaced points reach full information") {
    std::vector<double> c;
    for (int i = 0; i < 10; ++i) c.push_back(i / 9.0);
    const PointCloud u(c, 1);
    const SpacingSearch found = find_spacing(u, 95.0, 100.0);
    CHECK(found.in_range);
    CHECK(count_occupied_cells(u, found.spacing) == 10);
}

TEST_CASE("global normalization uses the widest range") {
    const PointCloud pc = PointCloud::from_rows({{0, 10}, {2, 20}, {4, 15}});
    const NormalizedCloud nc = normalize_global(pc);
    CHECK(nc.record.scale == 10.0);
    CHECK(nc.record.minima == std::vector<double>{0, 10});
    CHECK(nc.cloud(2, 0) == doctest::Approx(0.4));
    CHECK(nc.cloud(1, 1) == doctest::Approx(1.0));
    CHECK(nc.cloud(0, 1) == 0.0);
}

TEST_CASE("constant cloud has zero range") {
    const PointCloud pc = PointCloud::from_rows({{1, 1}, {1, 1}});
    try {
        normalize_global(pc);
        FAIL("expected ZeroRange");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ZeroRange);
    }
}

TEST_CASE("a constant feature maps to zero") {
    const NormalizedCloud nc = normalize_global(PointCloud::from_rows({{0, 5}, {3, 5}}));
    CHECK(nc.cloud(0, 1) == 0.0);
    CHECK(nc.cloud(1, 1) == 0.0);
}

TEST_CASE("normalization preserves range ratios") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> stretch(0.1, 50.0);
    for (int trial = 0; trial < 50; ++trial) {
        PointCloud pc = random_cloud(rng, 40, 4);
        std::vector<double> f(4);
        for (auto& v : f) v = stretch(rng);
        for (std::size_t i = 0; i < pc.size(); ++i) {
            for (std::size_t j = 0; j < 4; ++j) pc(i, j) *= f[j];
        }
        auto range = [](const PointCloud& c, std::size_t j) {
            double lo = c(0, j), hi = c(0, j);
            for (std::size_t i = 1; i < c.size(); ++i) {
                lo = std::min(lo, c(i, j));
                hi = std::max(hi, c(i, j));
            }
            return hi - lo;
        };
        const PointCloud u = normalize_global(pc).cloud;
        double widest = 0.0;
        for (std::size_t j = 0; j < 4; ++j) widest = std::max(widest, range(u, j));
        CHECK(widest == doctest::Approx(1.0));
        for (std::size_t j = 1; j < 4; ++j) {
            CHECK(range(u, j) / range(u, 0) == doctest::Approx(range(pc, j) / range(pc, 0)).epsilon(1e-9));
        }
    }
}

TEST_CASE("cell coordinates floor toward negative infinity") {
    CHECK(cell_coordinate(0.25, 0.1) == 2);
    CHECK(cell_coordinate(-0.05, 0.1) == -1);
    CHECK(cell_coordinate(0.0, 0.5) == 0);
}

TEST_CASE("snap produces cell centers") {
    const GriddedCloud g = snap_to_grid(PointCloud::from_rows({{0.26, 0.74}, {0.24, 0.71}, {0.9, 0.1}}), 0.5);
    REQUIRE(g.size() == 2);
    CHECK(g.representative(0) == std::vector<double>{0.25, 0.75});
    CHECK(g.multiplicity() == std::vector<std::size_t>{2, 1});
    CHECK(g.achieved_ip() == doctest::Approx(100.0 * 2.0 / 3.0));
}

TEST_CASE("snapping is idempotent") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const PointCloud u = normalize_global(random_cloud(rng, 300, 3)).cloud;
        const double s = std::ldexp(1.0, -(2 + trial % 5));
        const GriddedCloud once = snap_to_grid(u, s);
        const GriddedCloud twice = snap_to_grid(once.representatives(), s);
        CHECK(twice.cells() == once.cells());
        CHECK(twice.representatives() == once.representatives());
    }
}

TEST_CASE("information percentage endpoints") {
    const PointCloud u = normalize_global(lattice_2d(10)).cloud;
    CHECK(information_percentage(u, 1e-3) == 100.0);
    CHECK(information_percentage(u, 2.0) == doctest::Approx(1.0));
    CHECK(count_occupied_cells(u, 2.0) == 1);
}

TEST_CASE("information percentage is non-increasing along nested spacings") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> base(1e-4, 0.2);
    std::uniform_int_distribution<int> factor(2, 9);
    for (int trial = 0; trial < 200; ++trial) {
        const PointCloud u = normalize_global(random_cloud(rng, 300, 1 + trial % 4)).cloud;
        // s2 = k * s1: every s2 cell is a union of s1 cells.
        const double s1 = base(rng);
        const double s2 = s1 * factor(rng);
        CHECK(information_percentage(u, s1) >= information_percentage(u, s2));
    }
}

TEST_CASE("information percentage need not be monotone across unrelated spacings") {
    const PointCloud pts = PointCloud::from_rows({{0.25}, {0.35}});
    CHECK(information_percentage(pts, 0.2) == 50.0);
    CHECK(information_percentage(pts, 0.3) == 100.0);
}

TEST_CASE("spacing search lands in the requested window") {
    const PointCloud u = normalize_global(lattice_2d(15)).cloud;
    const SpacingSearch found = find_spacing(u, 45.0, 55.0);
    CHECK(found.in_range);
    CHECK(found.achieved_ip >= 45.0);
    CHECK(found.achieved_ip <= 55.0);
    CHECK(information_percentage(u, found.spacing) == doctest::Approx(found.achieved_ip));
}

TEST_CASE("spacing search on random clouds") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const PointCloud u = normalize_global(random_cloud(rng, 1000, 2 + trial % 3)).cloud;
        const SpacingSearch found = find_spacing(u, 48.0, 52.0);
        CHECK(found.in_range);
        CHECK(found.evaluations > 0);
    }
}

TEST_CASE("unreachable window returns the closest spacing") {
    // Two points: IP is either 50 or 100.
    const PointCloud u = PointCloud::from_rows({{0.0}, {1.0}});
    const SpacingSearch found = find_spacing(u, 70.0, 80.0);
    CHECK_FALSE(found.in_range);
    CHECK((found.achieved_ip == 50.0 || found.achieved_ip == 100.0));
}

TEST_CASE("invalid windows") {
    const PointCloud u = PointCloud::from_rows({{0.0}, {1.0}});
    CHECK_THROWS_AS(find_spacing(u, 60.0, 40.0), Error);
    CHECK_THROWS_AS(find_spacing(u, 0.0, 40.0), Error);
    CHECK_THROWS_AS(find_spacing(u, 10.0, 140.0), Error);
}

}
