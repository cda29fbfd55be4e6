#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "commands.hpp"
#include "dimgrid/error.hpp"
#include "dimgrid/version.hpp"

namespace dimgrid::cli {

namespace {

const std::map<std::string, CountingEngine> kEngines{
    {"auto", CountingEngine::Auto}, {"hash", CountingEngine::Hash}, {"pairwise", CountingEngine::Pairwise}};

const std::map<std::string, HeaderMode> kHeaders{
    {"auto", HeaderMode::Auto}, {"yes", HeaderMode::Yes}, {"no", HeaderMode::No}};

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Io:
        case ErrorKind::Parse:
        case ErrorKind::CacheWrite:
            return kExitIo;
        case ErrorKind::InvalidArgument:
        case ErrorKind::InvalidRange:
        case ErrorKind::DomainError:
        case ErrorKind::UnknownGenerator:
            return kExitConfig;
        default:
            return kExitFailure;
    }
}

void emit(const Json& j, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << j.dump(2) << '\n';
        return;
    }
    std::ofstream file(path);
    if (!file) throw Error(ErrorKind::Io, "cannot write " + path);
    file << j.dump(2) << '\n';
}

void add_cache_options(CLI::App* cmd, CacheConfig& cache) {
    cmd->add_option("--cache", cache.path, "Reference cache file (default: $DIMGRID_CACHE)");
    cmd->add_flag("--cache-readonly", cache.read_only, "Never write the cache file");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Intrinsic-dimension estimation with grid connectivity", "dimgrid"};
    app.set_version_flag("--version", DIMGRID_VERSION);
    app.require_subcommand(1);

    EstimateConfig est;
    auto* estimate = app.add_subcommand("estimate", "Estimate the intrinsic dimension of a CSV point cloud");
    estimate->add_option("--in", est.in, "Input CSV")->required();
    estimate->add_option("--out", est.out, "Write the JSON report here instead of stdout");
    estimate->add_option("--method", est.method, "edcf, dcf, twonn or mle")
        ->check(CLI::IsMember({"edcf", "dcf", "twonn", "mle"}, CLI::ignore_case));
    estimate->add_option("--ip-min", est.ip_min, "Lower IP bound (percent)");
    estimate->add_option("--ip-max", est.ip_max, "Upper IP bound (percent)");
    estimate->add_option("--base-target", est.base_target, "Base IP target for the adaptive window")
        ->check(CLI::Range(1e-9, 100.0));
    estimate->add_option("--dmax", est.d_max, "Largest dimension considered (capped at the ambient dimension)")
        ->check(CLI::NonNegativeNumber);
    estimate->add_option("--seed", est.seed, "Seed for reference spheres");
    estimate->add_option("--engine", est.engine, "auto, hash or pairwise")
        ->transform(CLI::CheckedTransformer(kEngines, CLI::ignore_case));
    estimate->add_option("--noise", est.noise, "Noise sigma override in unit-box coordinates")
        ->check(CLI::NonNegativeNumber);
    estimate->add_option("--noise-k", est.noise_k, "Neighbor rank for the noise estimate")->check(CLI::PositiveNumber);
    estimate->add_option("--k", est.mle_k, "Neighbors for the MLE baseline")->check(CLI::Range(2, 1 << 20));
    estimate->add_option("--discard", est.discard, "Discarded ratio fraction for TWO-NN")->check(CLI::Range(0.0, 0.499));
    estimate->add_option("--header", est.header, "auto, yes or no")
        ->transform(CLI::CheckedTransformer(kHeaders, CLI::ignore_case));
    add_cache_options(estimate, est.cache);

    BoundsConfig bnd;
    auto* bounds = app.add_subcommand("bounds", "Print the exact lower/middle/upper CF table");
    bounds->add_option("--ambient,-n", bnd.ambient, "Ambient dimension n")->required()->check(CLI::Range(0, 64));
    bounds->add_flag("--json", bnd.json, "Emit JSON");
    bounds->add_option("--digits", bnd.digits, "Significant digits")->check(CLI::Range(1, 60));

    CalibrateConfig cal;
    auto* calibrate = app.add_subcommand("calibrate", "Generate and cache reference anchors");
    calibrate->add_option("--d", cal.d, "Ambient dimension of the target data")->required()->check(CLI::NonNegativeNumber);
    calibrate->add_option("--dmax", cal.d_max, "Largest sphere dimension")->required()->check(CLI::NonNegativeNumber);
    calibrate->add_option("--n", cal.n, "Point count")->check(CLI::PositiveNumber);
    calibrate->add_option("--noise", cal.noise, "Noise sigma in unit-box coordinates")->check(CLI::NonNegativeNumber);
    calibrate->add_option("--ip-target", cal.ip_target, "IP target; adaptive when omitted")->check(CLI::Range(1e-9, 100.0));
    calibrate->add_option("--base-target", cal.base_target, "Base IP target")->check(CLI::Range(1e-9, 100.0));
    calibrate->add_option("--seed", cal.seed, "Seed for reference spheres");
    add_cache_options(calibrate, cal.cache);

    GenerateConfig gen;
    auto* generate = app.add_subcommand("generate", "Write a synthetic dataset as CSV");
    generate->add_option("--dataset", gen.dataset,
                         "Manifold id or alias, or ccd, occd, sinusoids, fern, carpet, triangle")
        ->required();
    generate->add_option("--out", gen.out, "Output CSV (default stdout)");
    generate->add_option("--n", gen.n, "Point count (per class for labeled sets)")->check(CLI::PositiveNumber);
    generate->add_option("--noise", gen.noise, "Gaussian noise sigma for manifolds")->check(CLI::NonNegativeNumber);
    generate->add_option("--intrinsic", gen.intrinsic, "Intrinsic dimension where adjustable");
    generate->add_option("--ambient", gen.ambient, "Ambient dimension where adjustable");
    generate->add_option("--seed", gen.seed, "Random seed");
    generate->add_flag("--classify", gen.classify, "Fractals: attractor vs uniform background labels");

    BoundaryConfig bdy;
    auto* boundary = app.add_subcommand("boundary", "Decision-boundary dimension report");
    boundary->add_option("--train", bdy.train, "Labeled training CSV (last column is the label)");
    boundary->add_option("--raster", bdy.raster, "Integer label raster CSV");
    boundary->add_option("--k", bdy.k, "Neighbors for the k-NN vote")->check(CLI::PositiveNumber);
    boundary->add_option("--resolution", bdy.resolution, "Raster cells per axis")->check(CLI::Range(2, 8192));
    boundary->add_option("--report", bdy.report, "Write the JSON report here as well");
    boundary->add_option("--boundary-out", bdy.boundary_out, "Write boundary points as CSV");
    boundary->add_option("--seed", bdy.seed, "Recorded in the report");
    boundary->add_option("--header", bdy.header, "auto, yes or no")
        ->transform(CLI::CheckedTransformer(kHeaders, CLI::ignore_case));

    BenchmarkConfig bench;
    auto* benchmark = app.add_subcommand("benchmark", "Score estimators on synthetic manifolds");
    benchmark->add_option("--suite", bench.suite, "desk or quick")->check(CLI::IsMember({"desk", "quick"}));
    benchmark->add_option("--noise", bench.noise, "Noise levels")->delimiter(',');
    benchmark->add_option("--n", bench.n, "Point counts")->delimiter(',');
    benchmark->add_option("--methods", bench.methods, "Methods")->delimiter(',');
    benchmark->add_option("--repeats", bench.repeats, "Repeats per cell")->check(CLI::PositiveNumber);
    benchmark->add_option("--seed", bench.seed, "Base seed");
    benchmark->add_option("--out", bench.out, "Output CSV (default stdout)");
    add_cache_options(benchmark, bench.cache);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << DIMGRID_VERSION << '\n';
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "dimgrid: " << e.what() << '\n';
        return kExitConfig;
    }

    try {
        if (estimate->parsed()) {
            emit(cmd_estimate(est), est.out, out);
        } else if (bounds->parsed()) {
            cmd_bounds(bnd, out);
        } else if (calibrate->parsed()) {
            out << cmd_calibrate(cal).dump(2) << '\n';
        } else if (generate->parsed()) {
            const Json summary = cmd_generate(gen, out);
            if (!gen.out.empty()) out << summary.dump(2) << '\n';
        } else if (boundary->parsed()) {
            out << cmd_boundary(bdy).dump(2) << '\n';
        } else if (benchmark->parsed()) {
            if (bench.out.empty()) {
                cmd_benchmark(bench, out);
            } else {
                std::ofstream file(bench.out);
                if (!file) throw Error(ErrorKind::Io, "cannot write " + bench.out);
                cmd_benchmark(bench, file);
            }
        }
    } catch (const Error& e) {
        err << "dimgrid: " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        err << "dimgrid: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"dimgrid"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace dimgrid::cli
