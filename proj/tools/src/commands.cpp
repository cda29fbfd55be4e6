#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <sstream>

#include "dimgrid/baselines.hpp"
#include "dimgrid/bounds.hpp"
#include "dimgrid/datagen.hpp"
#include "dimgrid/error.hpp"
#include "dimgrid/estimators.hpp"
#include "dimgrid/fractal.hpp"
#include "dimgrid/reference_model.hpp"
#include "dimgrid/version.hpp"

namespace dimgrid::cli {

namespace {

bool is_number(const std::string& field) {
    const auto begin = field.find_first_not_of(" \t");
    if (begin == std::string::npos) return false;
    const std::string trimmed = field.substr(begin);
    char* end = nullptr;
    std::strtod(trimmed.c_str(), &end);
    return end != trimmed.c_str() && std::string(end).find_first_not_of(" \t\r") == std::string::npos;
}

std::unique_ptr<ReferenceCache> open_cache(const CacheConfig& config) {
    const std::string path = resolve_cache_path(config);
    if (path.empty()) return std::make_unique<ReferenceCache>();
    return std::make_unique<ReferenceCache>(path, config.read_only);
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream file(path);
    if (!file) throw Error(ErrorKind::Io, "cannot write " + path);
    file << text;
    if (!file) throw Error(ErrorKind::Io, "write failed: " + path);
}

Json report_json(const EstimateReport& r) {
    Json j;
    j["method"] = to_string(r.method);
    j["m_hat"] = r.m_hat;
    j["estimate"] = r.estimate;
    j["weights"] = r.weights;
    j["raw_weights"] = r.raw_weights;
    j["anchors"] = r.anchors;
    j["cf"] = r.cf;
    j["s_star"] = r.spacing;
    j["ip"] = r.achieved_ip;
    j["ip_in_range"] = r.ip_in_range;
    j["representatives"] = r.representatives;
    j["noise"] = r.noise;
    j["d_max"] = r.d_max;
    j["low_confidence"] = r.low_confidence;
    j["cache_hit"] = r.cache_hit;
    j["warnings"] = r.warnings;
    return j;
}

struct SuiteEntry {
    const char* id;
    int intrinsic;
};

const std::vector<SuiteEntry>& suite(const std::string& name) {
    static const std::vector<SuiteEntry> desk{
        {"helix1d", -1}, {"sphere", 10}, {"affine", -1}, {"swissroll", -1}, {"mobius", -1}};
    static const std::vector<SuiteEntry> quick{{"helix1d", -1}, {"affine", -1}};
    if (name == "desk") return desk;
    if (name == "quick") return quick;
    throw Error(ErrorKind::InvalidArgument, "unknown suite: " + name);
}

EstimateReport run_method(Method method, const PointCloud& cloud, std::uint64_t seed, ReferenceCache* cache) {
    switch (method) {
        case Method::DCF: {
            DcfOptions o;
            o.d_max = std::min(50, static_cast<int>(cloud.dim()));
            return dcf_estimate(cloud, o);
        }
        case Method::EDCF: {
            EdcfOptions o;
            o.seed = seed;
            return edcf_estimate(cloud, o, cache);
        }
        case Method::TwoNN:
        case Method::MLE: {
            EstimateReport r;
            r.method = method;
            r.estimate = method == Method::TwoNN ? twonn_estimate(cloud) : mle_estimate(cloud);
            r.m_hat = static_cast<int>(std::lround(r.estimate));
            return r;
        }
    }
    throw Error(ErrorKind::InvalidArgument, "unsupported method");
}

}  // namespace

std::string resolve_cache_path(const CacheConfig& config) {
    if (!config.path.empty()) return config.path;
    if (const char* env = std::getenv("DIMGRID_CACHE"); env && *env) return env;
    return {};
}

LabeledCloud load_points(const std::string& path, HeaderMode header, bool labels) {
    std::ifstream file(path);
    if (!file) throw Error(ErrorKind::Io, "cannot open " + path);
    std::stringstream buffer;
    buffer << file.rdbuf();
    const std::string text = buffer.str();

    CsvOptions options;
    options.label_column = labels;
    std::string first;
    {
        std::istringstream lines(text);
        while (std::getline(lines, first) && first.find_first_not_of(" \t\r") == std::string::npos) {
        }
    }
    std::vector<std::string> fields;
    {
        std::istringstream row(first);
        std::string f;
        while (std::getline(row, f, ',')) fields.push_back(f);
    }
    switch (header) {
        case HeaderMode::Yes: options.header = true; break;
        case HeaderMode::No: options.header = false; break;
        case HeaderMode::Auto:
            options.header = std::any_of(fields.begin(), fields.end(), [](const std::string& f) { return !is_number(f); });
            break;
    }
    if (!labels && options.header && !fields.empty()) {
        std::string last = fields.back();
        while (!last.empty() && (last.back() == '\r' || last.back() == ' ')) last.pop_back();
        options.label_column = last == "label";
    }
    std::istringstream in(text);
    LabeledCloud cloud = read_csv(in, options);
    if (!labels) cloud.labels.clear();
    return cloud;
}

Json cmd_estimate(const EstimateConfig& config) {
    const Method method = parse_method(config.method);
    if (config.ip_min.has_value() != config.ip_max.has_value()) {
        throw Error(ErrorKind::InvalidArgument, "--ip-min and --ip-max must be given together");
    }
    const PointCloud cloud = load_points(config.in, config.header, false).points;
    const auto start = std::chrono::steady_clock::now();

    EstimateReport report;
    std::unique_ptr<ReferenceCache> cache;
    switch (method) {
        case Method::DCF: {
            DcfOptions o;
            if (config.ip_min) o.ip = {*config.ip_min, *config.ip_max};
            o.d_max = std::min(config.d_max, static_cast<int>(cloud.dim()));
            o.engine = config.engine;
            report = dcf_estimate(cloud, o);
            break;
        }
        case Method::EDCF: {
            EdcfOptions o;
            if (config.ip_min) o.ip = IpRange{*config.ip_min, *config.ip_max};
            o.base_target = config.base_target;
            o.d_max = config.d_max;
            o.noise = config.noise;
            o.noise_k = config.noise_k;
            o.seed = config.seed;
            o.engine = config.engine;
            cache = open_cache(config.cache);
            report = edcf_estimate(cloud, o, cache.get());
            break;
        }
        case Method::TwoNN:
        case Method::MLE:
            report.method = method;
            report.estimate = method == Method::TwoNN ? twonn_estimate(cloud, config.discard)
                                                      : mle_estimate(cloud, config.mle_k);
            report.m_hat = static_cast<int>(std::lround(report.estimate));
            break;
    }
    const double elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    Json j = report_json(report);
    j["n_points"] = cloud.size();
    j["ambient_dim"] = cloud.dim();
    j["seed"] = config.seed;
    j["version"] = DIMGRID_VERSION;
    j["timing_ms"] = elapsed;
    return j;
}

void cmd_bounds(const BoundsConfig& config, std::ostream& out) {
    if (config.ambient < 0 || config.ambient > 64) throw Error(ErrorKind::InvalidArgument, "--ambient must lie in [0, 64]");
    const int digits = config.digits > 0 ? config.digits : (config.json ? 12 : 6);
    const BoundsTable table = lmu_table(config.ambient);
    if (config.json) {
        Json j;
        j["n"] = table.n;
        j["rows"] = Json::array();
        for (const auto& row : table.rows) {
            j["rows"].push_back({{"m", row.m},
                                 {"lower", to_decimal_string(row.lower, digits)},
                                 {"middle", to_decimal_string(row.middle, digits)},
                                 {"upper", to_decimal_string(row.upper, digits)}});
        }
        j["version"] = DIMGRID_VERSION;
        out << j.dump(2) << '\n';
        return;
    }
    out << "m,lower,middle,upper\n";
    for (const auto& row : table.rows) {
        out << row.m << ',' << to_decimal_string(row.lower, digits) << ',' << to_decimal_string(row.middle, digits)
            << ',' << to_decimal_string(row.upper, digits) << '\n';
    }
}

Json cmd_calibrate(const CalibrateConfig& config) {
    if (config.d < 0 || config.d_max < 0) throw Error(ErrorKind::InvalidArgument, "calibrate requires d, dmax >= 0");
    auto cache = open_cache(config.cache);
    ReferenceRequest request;
    request.n_points = config.n;
    request.d = config.d;
    request.d_max = config.d_max;
    request.sigma = config.noise;
    request.ip_target = config.ip_target ? *config.ip_target : adaptive_target(config.base_target, config.d);
    request.seed = config.seed;
    const ReferenceResult result = generate_reference_model(request, cache.get());

    Json j;
    const auto& key = result.model.key;
    j["key"] = {{"d", key.d},
                {"d_max", key.d_max},
                {"n_bucket", key.n_bucket},
                {"noise_bucket", key.noise_bucket},
                {"ip_target", key.ip_target},
                {"seed", key.seed}};
    j["anchors"] = result.model.anchors;
    j["cache_hit"] = result.cache_hit;
    j["cache_path"] = cache->path();
    j["cache_entries"] = cache->size();
    if (result.cache_error) j["cache_error"] = *result.cache_error;
    j["seed"] = config.seed;
    j["version"] = DIMGRID_VERSION;
    return j;
}

Json cmd_generate(const GenerateConfig& config, std::ostream& out) {
    PointCloud points;
    std::vector<int> labels;
    const std::string& id = config.dataset;
    if (id == "ccd" || id == "occd") {
        auto params = datagen::circle_preset(id == "ccd" ? datagen::CircleKind::Concentric
                                                         : datagen::CircleKind::Overlapping);
        if (config.n) params.points_per_class = *config.n;
        auto data = datagen::circles(params, config.seed);
        points = std::move(data.points);
        labels = std::move(data.labels);
    } else if (id == "sinusoids") {
        datagen::SinusoidParams params;
        if (config.n) params.points_per_class = *config.n;
        auto data = datagen::sinusoids(params, config.seed);
        points = std::move(data.points);
        labels = std::move(data.labels);
    } else if (id == "fern" || id == "carpet" || id == "triangle") {
        const datagen::AffineIFS ifs = id == "fern"     ? datagen::barnsley_fern()
                                       : id == "carpet" ? datagen::sierpinski_carpet()
                                                        : datagen::sierpinski_triangle();
        if (config.classify) {
            auto data = datagen::ifs_classification(ifs, config.n.value_or(10000), config.seed);
            points = std::move(data.points);
            labels = std::move(data.labels);
        } else {
            points = datagen::chaos_game(ifs, config.n.value_or(100000), config.seed);
        }
    } else {
        datagen::ManifoldSpec spec;
        spec.id = id;
        spec.intrinsic = config.intrinsic;
        spec.ambient = config.ambient;
        spec.n = config.n.value_or(1000);
        spec.noise = config.noise;
        spec.seed = config.seed;
        points = datagen::manifold(spec);
    }

    if (config.out.empty()) {
        write_csv(out, points, labels.empty() ? nullptr : &labels);
    } else {
        write_csv_file(config.out, points, labels.empty() ? nullptr : &labels);
    }
    Json j;
    j["dataset"] = id;
    j["n_points"] = points.size();
    j["ambient_dim"] = points.dim();
    j["labeled"] = !labels.empty();
    j["seed"] = config.seed;
    j["version"] = DIMGRID_VERSION;
    return j;
}

Json cmd_boundary(const BoundaryConfig& config) {
    if (config.train.empty() == config.raster.empty()) {
        throw Error(ErrorKind::InvalidArgument, "exactly one of --train and --raster is required");
    }
    LabelRaster raster;
    std::vector<PointCloud> objects;
    std::vector<int> classes;
    if (!config.train.empty()) {
        const LabeledCloud train = load_points(config.train, config.header, true);
        raster = knn_label_grid(train, config.k, config.resolution);
        classes = train.classes();
        for (int c : classes) objects.push_back(train.select(c));
    } else {
        raster = read_raster_csv_file(config.raster);
    }
    const PointCloud boundary = extract_boundary(raster);
    const BoundaryReport report = boundary_report(boundary, objects);
    if (!config.boundary_out.empty()) write_csv_file(config.boundary_out, boundary);

    Json j;
    j["boundary_points"] = boundary.size();
    j["raster_rows"] = raster.rows;
    j["raster_cols"] = raster.cols;
    j["box_dimension"] = report.box.slope;
    j["box_residual"] = report.box.residual;
    j["cf"] = report.cf;
    j["s_star"] = report.spacing;
    j["ip"] = report.achieved_ip;
    j["lmu_dimension"] = report.lmu.m_hat;
    j["lmu_candidates"] = report.lmu.candidates;
    j["dcf_dimension"] = report.dcf_dimension;
    j["weights"] = report.weights;
    Json per_object = Json::array();
    for (std::size_t i = 0; i < report.object_dimensions.size(); ++i) {
        per_object.push_back({{"label", classes[i]}, {"box_dimension", report.object_dimensions[i]}});
    }
    j["objects"] = per_object;
    j["k"] = config.k;
    j["resolution"] = config.resolution;
    j["seed"] = config.seed;
    j["version"] = DIMGRID_VERSION;
    if (!config.report.empty()) write_text(config.report, j.dump(2) + "\n");
    return j;
}

void cmd_benchmark(const BenchmarkConfig& config, std::ostream& out) {
    if (config.repeats < 1) throw Error(ErrorKind::InvalidArgument, "--repeats must be >= 1");
    std::vector<Method> methods;
    for (const auto& m : config.methods) methods.push_back(parse_method(m));
    const auto& entries = suite(config.suite);
    auto cache = open_cache(config.cache);

    struct Cell {
        SuiteEntry entry{};
        std::size_t n = 0;
        double noise = 0.0;
        Method method = Method::EDCF;
        int intrinsic = 0;
        int ambient = 0;
        double abs_sum = 0.0;
        double signed_sum = 0.0;
        int exact = 0;
        std::exception_ptr error;
    };
    std::vector<Cell> cells;
    for (const auto& e : entries) {
        for (auto n : config.n) {
            for (double noise : config.noise) {
                for (auto method : methods) {
                    Cell cell;
                    cell.entry = e;
                    cell.n = n;
                    cell.noise = noise;
                    cell.method = method;
                    cells.push_back(cell);
                }
            }
        }
    }

#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(cells.size()); ++i) {
        Cell& cell = cells[static_cast<std::size_t>(i)];
        try {
            for (int r = 0; r < config.repeats; ++r) {
                datagen::ManifoldSpec spec;
                spec.id = cell.entry.id;
                spec.intrinsic = cell.entry.intrinsic;
                spec.n = cell.n;
                spec.noise = cell.noise;
                spec.seed = config.seed + static_cast<std::uint64_t>(r) + 1;
                const auto [intrinsic, ambient] = datagen::manifold_dimensions(spec);
                cell.intrinsic = intrinsic;
                cell.ambient = ambient;
                const PointCloud cloud = datagen::manifold(spec);
                const int m_hat = run_method(cell.method, cloud, config.seed, cache.get()).m_hat;
                cell.abs_sum += std::abs(m_hat - intrinsic);
                cell.signed_sum += m_hat - intrinsic;
                cell.exact += m_hat == intrinsic ? 1 : 0;
            }
        } catch (...) {
            cell.error = std::current_exception();
        }
    }

    for (const auto& cell : cells) {
        if (cell.error) std::rethrow_exception(cell.error);
    }
    out << "manifold,intrinsic,ambient,n,noise,method,repeats,mae,signed_error,exact_pct\n";
    out << std::setprecision(6);
    for (const auto& cell : cells) {
        const double reps = static_cast<double>(config.repeats);
        out << cell.entry.id << ',' << cell.intrinsic << ',' << cell.ambient << ',' << cell.n << ',' << cell.noise << ','
            << to_string(cell.method) << ',' << config.repeats << ',' << cell.abs_sum / reps << ','
            << cell.signed_sum / reps << ',' << 100.0 * cell.exact / reps << '\n';
    }
}

}  // namespace dimgrid::cli
