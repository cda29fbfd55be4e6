#include <doctest.h>

#include <sstream>

#include "dimgrid/error.hpp"
#include "dimgrid/point_cloud.hpp"

using namespace dimgrid;

TEST_SUITE("point_cloud") {

TEST_CASE("rows and element access") {
    const PointCloud pc = PointCloud::from_rows({{1, 2}, {3, 4}, {5, 6}});
    CHECK(pc.size() == 3);
    CHECK(pc.dim() == 2);
    CHECK(pc(2, 1) == 6);
    CHECK(pc.row(1)[0] == 3);
    CHECK(pc.scaled(2.0)(0, 1) == 4);
}

TEST_CASE("ragged rows are rejected") {
    CHECK_THROWS_AS(PointCloud::from_rows({{1, 2}, {3}}), Error);
    CHECK_THROWS_AS(PointCloud({1, 2, 3}, 2), Error);
}

TEST_CASE("csv round trip keeps values and labels") {
    const PointCloud pc = PointCloud::from_rows({{0.1, -2.5}, {1.0 / 3.0, 1e-17}});
    const std::vector<int> labels{1, 2};
    std::stringstream buffer;
    write_csv(buffer, pc, &labels);
    const LabeledCloud back = read_csv(buffer, {.header = true, .label_column = true});
    CHECK(back.points == pc);
    CHECK(back.labels == labels);
}

TEST_CASE("csv parse errors") {
    std::istringstream ragged("1,2\n3\n");
    CHECK_THROWS_WITH_AS(read_csv(ragged), doctest::Contains("line 2"), Error);
    std::istringstream junk("1,abc\n");
    try {
        read_csv(junk);
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Parse);
    }
}

TEST_CASE("missing file is an io error") {
    try {
        read_csv_file("/nonexistent/dir/points.csv");
        FAIL("expected an io error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Io);
    }
}

TEST_CASE("select and classes") {
    LabeledCloud lc{PointCloud::from_rows({{0}, {1}, {2}, {3}}), {2, 1, 2, 1}};
    CHECK(lc.classes() == std::vector<int>{1, 2});
    const PointCloud two = lc.select(2);
    REQUIRE(two.size() == 2);
    CHECK(two(1, 0) == 2);
}

}
