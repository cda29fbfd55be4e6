#include <doctest.h>

#include <cmath>
#include <random>

#include "dimgrid/baselines.hpp"
#include "dimgrid/error.hpp"

using namespace dimgrid;

namespace {

PointCloud uniform_cube(std::size_t n, std::size_t d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> c(n * d);
    for (auto& v : c) v = u(rng);
    return PointCloud(std::move(c), d);
}

PointCloud random_circle(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 2.0 * 3.14159265358979323846);
    std::vector<double> c;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = u(rng);
        c.insert(c.end(), {std::cos(t), std::sin(t)});
    }
    return PointCloud(std::move(c), 2);
}

}  // namespace

TEST_SUITE("baselines") {

TEST_CASE("uniform cube") {
    const PointCloud cube = uniform_cube(5000, 3, 1);
    const double twonn = twonn_estimate(cube);
    const double mle = mle_estimate(cube, 20);
    CHECK(twonn >= 2.5);
    CHECK(twonn <= 3.5);
    CHECK(mle >= 2.5);
    CHECK(mle <= 3.5);
}

TEST_CASE("noiseless circle") {
    const PointCloud circle = random_circle(1000, 2);
    CHECK(twonn_estimate(circle) == doctest::Approx(1.05).epsilon(0.25));
    const double mle = mle_estimate(circle, 20);
    CHECK(mle >= 0.8);
    CHECK(mle <= 1.3);
}

TEST_CASE("noiseless line with ten neighbors") {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> c;
    for (int i = 0; i < 1000; ++i) {
        const double t = u(rng);
        c.insert(c.end(), {t, 2.0 * t, -t});
    }
    const double mle = mle_estimate(PointCloud(c, 3), 10);
    CHECK(mle >= 0.8);
    CHECK(mle <= 1.3);
}

TEST_CASE("equispaced samples are degenerate for TWO-NN") {
    std::vector<double> c;
    for (int i = 0; i < 100; ++i) {
        const double t = 2.0 * 3.14159265358979323846 * i / 100.0;
        c.insert(c.end(), {std::cos(t), std::sin(t)});
    }
    try {
        twonn_estimate(PointCloud(c, 2), 0.0);
        FAIL("expected DegenerateDistances");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegenerateDistances);
    }
}

TEST_CASE("scale invariance") {
    const PointCloud cube = uniform_cube(800, 4, 3);
    const PointCloud scaled = cube.scaled(37.5);
    CHECK(twonn_estimate(scaled) == doctest::Approx(twonn_estimate(cube)).epsilon(1e-9));
    CHECK(mle_estimate(scaled, 15) == doctest::Approx(mle_estimate(cube, 15)).epsilon(1e-9));
}

TEST_CASE("duplicates are removed first") {
    PointCloud cube = uniform_cube(500, 2, 4);
    PointCloud doubled = cube;
    for (std::size_t i = 0; i < cube.size(); ++i) doubled.push_back(cube.row(i));
    CHECK(twonn_estimate(doubled) == doctest::Approx(twonn_estimate(cube)));
    CHECK(mle_estimate(doubled, 10) == doctest::Approx(mle_estimate(cube, 10)));
}

TEST_CASE("too few points") {
    CHECK_THROWS_AS(twonn_estimate(PointCloud::from_rows({{0.0}, {1.0}})), Error);
    CHECK_THROWS_AS(mle_estimate(uniform_cube(10, 2, 1), 10), Error);
    CHECK_THROWS_AS(mle_estimate(uniform_cube(10, 2, 1), 1), Error);
    CHECK_THROWS_AS(twonn_estimate(uniform_cube(10, 2, 1), 0.6), Error);
}

}
