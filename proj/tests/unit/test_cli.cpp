#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "dimgrid/point_cloud.hpp"

using dimgrid::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "dimgrid-cli-tests";
    std::filesystem::create_directories(dir);
    const auto path = dir / name;
    std::filesystem::remove(path);
    return path.string();
}

std::string write_line_csv() {
    const std::string path = temp_path("line.csv");
    std::ofstream f(path);
    for (int i = 0; i < 200; ++i) f << i / 199.0 << ',' << 0.6 * i / 199.0 << '\n';
    return path;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("bounds text table") {
    const Result r = call({"bounds", "--ambient", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("1,0.166667,0.25,0.666667") != std::string::npos);
}

TEST_CASE("bounds json") {
    const Result r = call({"bounds", "--ambient", "2", "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["n"] == 2);
    CHECK(j["rows"][1]["lower"] == "0.166666666667");
    CHECK(j["rows"][1]["middle"] == "0.25");
    CHECK(j["rows"][1]["upper"] == "0.666666666667");
}

TEST_CASE("estimate with DCF on a line") {
    const Result r = call({"estimate", "--method", "dcf", "--in", write_line_csv()});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["m_hat"] == 1);
    CHECK(j["method"] == "dcf");
    for (const char* key : {"weights", "s_star", "ip", "noise", "timing_ms", "seed", "version"}) {
        CHECK(j.contains(key));
    }
}

TEST_CASE("estimate with generated data and a header") {
    const std::string csv = temp_path("helix.csv");
    REQUIRE(call({"generate", "--dataset", "helix1d", "--noise", "0.01", "--seed", "2", "--out", csv}).code == 0);
    const std::string cache = temp_path("cache.json");
    const Result r = call({"estimate", "--in", csv, "--cache", cache, "--seed", "1"});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["m_hat"] == 1);
    CHECK(std::filesystem::exists(cache));
}

TEST_CASE("read-only cache is not mutated") {
    const std::string cache = temp_path("ro-cache.json");
    const Result r = call({"estimate", "--in", write_line_csv(), "--cache", cache, "--cache-readonly"});
    CHECK(r.code == 0);
    CHECK_FALSE(std::filesystem::exists(cache));
}

TEST_CASE("calibrate stores one anchor per dimension") {
    const std::string cache = temp_path("calibrate.json");
    const Result ok = call({"calibrate", "--d", "3", "--dmax", "5", "--n", "1000", "--noise", "0.01", "--cache", cache});
    REQUIRE(ok.code == 0);
    std::ifstream f(cache);
    const auto j = nlohmann::json::parse(f);
    REQUIRE(j["entries"].size() == 1);
    CHECK(j["entries"][0]["anchors"].size() == 6);
}

TEST_CASE("exit codes") {
    CHECK(call({"estimate", "--in", "/nonexistent/points.csv"}).code == 2);
    CHECK(call({"estimate", "--in", write_line_csv(), "--method", "pca"}).code == 3);
    CHECK(call({"estimate", "--in", write_line_csv(), "--ip-min", "40"}).code == 3);
    CHECK(call({"bounds"}).code == 3);
    CHECK(call({}).code == 3);
    const Result missing = call({"estimate", "--in", "/nonexistent/points.csv"});
    CHECK(missing.err.find("cannot open") != std::string::npos);
}

TEST_CASE("generate is deterministic") {
    const Result a = call({"generate", "--dataset", "ccd", "--n", "50", "--seed", "4"});
    const Result b = call({"generate", "--dataset", "ccd", "--n", "50", "--seed", "4"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("x0,x1,label", 0) == 0);
}

TEST_CASE("boundary from a raster") {
    const std::string raster = temp_path("raster.csv");
    {
        std::ofstream f(raster);
        for (int r = 0; r < 64; ++r) {
            for (int c = 0; c < 64; ++c) f << (c ? "," : "") << (c < 32 ? 0 : 1);
            f << '\n';
        }
    }
    const std::string report = temp_path("report.json");
    const Result r = call({"boundary", "--raster", raster, "--report", report});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["boundary_points"] == 128);
    CHECK(j["dcf_dimension"] == 1);
    CHECK(std::filesystem::exists(report));
}

TEST_CASE("benchmark table") {
    const Result r = call({"benchmark", "--suite", "quick", "--methods", "dcf,mle", "--repeats", "2", "--n", "500"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("manifold,intrinsic,ambient,n,noise,method,repeats,mae,signed_error,exact_pct\n", 0) == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 5);
}

}
