#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "dimgrid/error.hpp"
#include "dimgrid/fractal.hpp"

using namespace dimgrid;

namespace {

LabelRaster raster_from(std::vector<std::vector<int>> rows) {
    LabelRaster r;
    r.rows = rows.size();
    r.cols = rows.front().size();
    for (const auto& row : rows) r.labels.insert(r.labels.end(), row.begin(), row.end());
    return r;
}

std::set<std::pair<double, double>> as_set(const PointCloud& pc) {
    std::set<std::pair<double, double>> s;
    for (std::size_t i = 0; i < pc.size(); ++i) s.emplace(pc(i, 0), pc(i, 1));
    return s;
}

}  // namespace

TEST_SUITE("fractal") {

TEST_CASE("default ladder") {
    const auto s = default_box_scales();
    REQUIRE(s.size() == 8);
    CHECK(s.front() == 0.25);
    CHECK(s.back() == 1.0 / 512.0);
}

TEST_CASE("filled square") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> c(200000);
    for (auto& v : c) v = u(rng);
    const BoxCountResult r = box_dimension(PointCloud(c, 2));
    CHECK(r.slope >= 1.9);
    CHECK(r.slope <= 2.05);
    for (std::size_t i = 1; i < r.counts.size(); ++i) CHECK(r.counts[i] >= r.counts[i - 1]);
}

TEST_CASE("straight segment") {
    std::vector<double> c;
    for (int i = 0; i < 20000; ++i) {
        const double t = i / 19999.0;
        c.insert(c.end(), {t, 0.3 * t});
    }
    const BoxCountResult r = box_dimension(PointCloud(c, 2));
    CHECK(r.slope >= 0.95);
    CHECK(r.slope <= 1.05);
}

TEST_CASE("box counts ignore order and duplicates") {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> c(4000);
    for (auto& v : c) v = u(rng);
    const PointCloud pc(c, 2);
    PointCloud shuffled;
    std::vector<std::size_t> order(pc.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    for (auto i : order) {
        shuffled.push_back(pc.row(i));
        shuffled.push_back(pc.row(i));
    }
    CHECK(box_dimension(shuffled).counts == box_dimension(pc).counts);
}

TEST_CASE("undersampled fine scales are left out of the fit") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> c(20000);
    for (auto& v : c) v = u(rng);
    const BoxCountResult r = box_dimension(PointCloud(c, 2));
    CHECK(r.fit_begin == 2);
    CHECK(r.fit_end == 4);  // 10^4 points: 2^-5 has 1024 boxes, over the cap of 1000
    BoxCountOptions all;
    all.min_points_per_box = 0.0;
    CHECK(box_dimension(PointCloud(c, 2), all).slope < r.slope);
}

TEST_CASE("constant counts cannot be fitted") {
    try {
        box_dimension(PointCloud::from_rows({{0.0, 0.0}, {1.0, 1.0}}));
        FAIL("expected DegenerateFit");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegenerateFit);
    }
}

TEST_CASE("vertical split gives two columns") {
    const LabelRaster r = raster_from({{1, 1, 2, 2}, {1, 1, 2, 2}, {1, 1, 2, 2}});
    const PointCloud b = extract_boundary(r);
    CHECK(b.size() == 6);
    for (std::size_t i = 0; i < b.size(); ++i) CHECK((b(i, 0) == 1.5 || b(i, 0) == 2.5));
}

TEST_CASE("uniform raster") {
    try {
        extract_boundary(raster_from({{3, 3}, {3, 3}}));
        FAIL("expected SingleClass");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SingleClass);
    }
}

TEST_CASE("checkerboard is all boundary") {
    const LabelRaster r = raster_from({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
    CHECK(extract_boundary(r).size() == 9);
}

TEST_CASE("boundary is symmetric in labels") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> l(0, 2);
    LabelRaster r;
    r.rows = r.cols = 20;
    for (int i = 0; i < 400; ++i) r.labels.push_back(l(rng));
    LabelRaster swapped = r;
    for (auto& v : swapped.labels) v = v == 0 ? 2 : (v == 2 ? 0 : v);
    CHECK(as_set(extract_boundary(r)) == as_set(extract_boundary(swapped)));
}

TEST_CASE("nearest neighbor raster follows the bisector") {
    LabeledCloud train{PointCloud::from_rows({{0.0, 0.0}, {1.0, 1.0}}), {1, 2}};
    const LabelRaster r = knn_label_grid(train, 1, 16);
    for (std::size_t row = 0; row < r.rows; ++row) {
        for (std::size_t col = 0; col < r.cols; ++col) {
            const double x = r.x0 + (col + 0.5) * r.cell_x;
            const double y = r.y0 + (row + 0.5) * r.cell_y;
            CHECK(r.at(row, col) == (x + y <= 1.0 ? 1 : 2));  // equidistant cells go to the smaller label
        }
    }
}

TEST_CASE("k beyond the training size votes the global majority") {
    LabeledCloud train{PointCloud::from_rows({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}}), {4, 7, 7}};
    const LabelRaster r = knn_label_grid(train, 10, 8);
    CHECK(std::all_of(r.labels.begin(), r.labels.end(), [](int v) { return v == 7; }));
}

TEST_CASE("raster csv round trip") {
    const LabelRaster r = raster_from({{1, 2, 3}, {4, 5, 6}});
    std::stringstream buffer;
    write_raster_csv(buffer, r);
    const LabelRaster back = read_raster_csv(buffer);
    CHECK(back.rows == 2);
    CHECK(back.cols == 3);
    CHECK(back.labels == r.labels);
    std::istringstream ragged("1,2\n3\n");
    CHECK_THROWS_AS(read_raster_csv(ragged), Error);
}

TEST_CASE("straight-line boundary report") {
    LabelRaster r;
    r.rows = r.cols = 200;
    for (std::size_t row = 0; row < 200; ++row) {
        for (std::size_t col = 0; col < 200; ++col) r.labels.push_back(col < 100 ? 0 : 1);
    }
    const BoundaryReport rep = boundary_report(extract_boundary(r));
    CHECK(rep.dcf_dimension == 1);
    CHECK(rep.weights[1] > 0.9);
    double sum = 0.0;
    for (double w : rep.weights) sum += w;
    CHECK(sum == doctest::Approx(1.0));
}

TEST_CASE("perimeter of a filled square") {
    LabelRaster r;
    r.rows = r.cols = 300;
    for (std::size_t row = 0; row < 300; ++row) {
        for (std::size_t col = 0; col < 300; ++col) {
            r.labels.push_back(row >= 75 && row < 225 && col >= 75 && col < 225 ? 1 : 0);
        }
    }
    const BoundaryReport rep = boundary_report(extract_boundary(r));
    CHECK(rep.dcf_dimension == 1);
    CHECK(rep.lmu.m_hat == 1);
}

}
