#include "dimgrid/fractal.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "dimgrid/error.hpp"
#include "dimgrid/estimators.hpp"
#include "dimgrid/gridding.hpp"
#include "dimgrid/kdtree.hpp"

namespace dimgrid {

std::vector<double> default_box_scales() {
    std::vector<double> scales;
    for (int e = 2; e <= 9; ++e) scales.push_back(std::ldexp(1.0, -e));
    return scales;
}

BoxCountResult box_dimension(const PointCloud& cloud, const BoxCountOptions& options) {
    std::vector<double> scales = options.scales;
    const std::size_t skip = options.skip_coarse;
    if (scales.size() < skip + 2) throw Error(ErrorKind::InvalidArgument, "box counting needs two fitted scales");
    for (double s : scales) {
        if (!(s > 0.0)) throw Error(ErrorKind::InvalidArgument, "box scales must be positive");
    }
    std::sort(scales.begin(), scales.end(), std::greater<>());
    const PointCloud unit = normalize_global(unique_rows(cloud)).cloud;

    BoxCountResult result;
    result.scales = scales;
    for (double s : scales) result.counts.push_back(count_occupied_cells(unit, s));

    result.fit_begin = skip;
    result.fit_end = skip + 2;
    if (options.min_points_per_box > 0.0) {
        const double cap = static_cast<double>(unit.size()) / options.min_points_per_box;
        while (result.fit_end < scales.size() && static_cast<double>(result.counts[result.fit_end]) <= cap) {
            ++result.fit_end;
        }
    } else {
        result.fit_end = scales.size();
    }

    const std::size_t m = result.fit_end - result.fit_begin;
    double sx = 0.0, sy = 0.0;
    std::vector<double> xs, ys;
    for (std::size_t i = result.fit_begin; i < result.fit_end; ++i) {
        xs.push_back(std::log(1.0 / scales[i]));
        ys.push_back(std::log(static_cast<double>(result.counts[i])));
        sx += xs.back();
        sy += ys.back();
    }
    const double mx = sx / static_cast<double>(m);
    const double my = sy / static_cast<double>(m);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    const auto first = result.counts.begin() + static_cast<std::ptrdiff_t>(result.fit_begin);
    const auto last = result.counts.begin() + static_cast<std::ptrdiff_t>(result.fit_end);
    if (std::all_of(first, last, [&](std::size_t c) { return c == *first; }) || !(sxx > 0.0)) {
        throw Error(ErrorKind::DegenerateFit, "box counts are constant over the fitted scales");
    }
    result.slope = sxy / sxx;
    result.intercept = my - result.slope * mx;
    double ss = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double e = ys[i] - (result.intercept + result.slope * xs[i]);
        ss += e * e;
    }
    result.residual = std::sqrt(ss / static_cast<double>(m));
    return result;
}

PointCloud extract_boundary(const LabelRaster& raster) {
    if (raster.labels.size() != raster.rows * raster.cols) {
        throw Error(ErrorKind::InvalidArgument, "raster size does not match its shape");
    }
    if (raster.labels.empty() ||
        std::all_of(raster.labels.begin(), raster.labels.end(), [&](int l) { return l == raster.labels.front(); })) {
        throw Error(ErrorKind::SingleClass, "raster holds a single label");
    }
    PointCloud out;
    std::vector<double> coords;
    for (std::size_t r = 0; r < raster.rows; ++r) {
        for (std::size_t c = 0; c < raster.cols; ++c) {
            const int own = raster.at(r, c);
            bool edge = false;
            for (int dr = -1; dr <= 1 && !edge; ++dr) {
                for (int dc = -1; dc <= 1 && !edge; ++dc) {
                    const auto rr = static_cast<std::ptrdiff_t>(r) + dr;
                    const auto cc = static_cast<std::ptrdiff_t>(c) + dc;
                    if (rr < 0 || cc < 0 || rr >= static_cast<std::ptrdiff_t>(raster.rows) ||
                        cc >= static_cast<std::ptrdiff_t>(raster.cols)) {
                        continue;
                    }
                    edge = raster.at(static_cast<std::size_t>(rr), static_cast<std::size_t>(cc)) != own;
                }
            }
            if (edge) {
                coords.push_back(raster.x0 + (static_cast<double>(c) + 0.5) * raster.cell_x);
                coords.push_back(raster.y0 + (static_cast<double>(r) + 0.5) * raster.cell_y);
            }
        }
    }
    return PointCloud(std::move(coords), 2);
}

LabelRaster knn_label_grid(const LabeledCloud& train, int k, int resolution) {
    if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be >= 1");
    if (resolution < 2) throw Error(ErrorKind::InvalidArgument, "resolution must be >= 2");
    if (train.points.dim() != 2) throw Error(ErrorKind::InvalidArgument, "k-NN rasters need 2-D training data");
    if (train.points.empty() || train.labels.size() != train.points.size()) {
        throw Error(ErrorKind::InvalidArgument, "training data needs one label per point");
    }
    double lo[2] = {train.points(0, 0), train.points(0, 1)};
    double hi[2] = {lo[0], lo[1]};
    for (std::size_t i = 0; i < train.points.size(); ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            lo[j] = std::min(lo[j], train.points(i, j));
            hi[j] = std::max(hi[j], train.points(i, j));
        }
    }
    LabelRaster raster;
    raster.rows = raster.cols = static_cast<std::size_t>(resolution);
    raster.x0 = lo[0];
    raster.y0 = lo[1];
    raster.cell_x = (hi[0] - lo[0]) / resolution;
    raster.cell_y = (hi[1] - lo[1]) / resolution;
    if (!(raster.cell_x > 0.0)) raster.cell_x = 1.0 / resolution;
    if (!(raster.cell_y > 0.0)) raster.cell_y = 1.0 / resolution;
    raster.labels.assign(raster.rows * raster.cols, 0);

    const std::size_t kk = std::min<std::size_t>(static_cast<std::size_t>(k), train.points.size());
    const KdTree tree(train.points);
    const auto total = static_cast<std::ptrdiff_t>(raster.rows * raster.cols);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t idx = 0; idx < total; ++idx) {
        const auto r = static_cast<std::size_t>(idx) / raster.cols;
        const auto c = static_cast<std::size_t>(idx) % raster.cols;
        const double q[2] = {raster.x0 + (static_cast<double>(c) + 0.5) * raster.cell_x,
                             raster.y0 + (static_cast<double>(r) + 0.5) * raster.cell_y};
        const auto nn = tree.nearest(std::span<const double>(q, 2), kk);
        std::map<int, int> votes;
        for (const auto& n : nn) ++votes[train.labels[n.index]];
        int best = votes.begin()->first;
        int best_votes = votes.begin()->second;
        for (const auto& [label, v] : votes) {
            if (v > best_votes) {
                best = label;
                best_votes = v;
            }
        }
        raster.labels[static_cast<std::size_t>(idx)] = best;
    }
    return raster;
}

LabelRaster read_raster_csv(std::istream& in) {
    LabelRaster raster;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        std::stringstream row(line);
        std::string field;
        std::size_t cols = 0;
        while (std::getline(row, field, ',')) {
            try {
                std::size_t used = 0;
                const int v = std::stoi(field, &used);
                if (field.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(field);
                raster.labels.push_back(v);
            } catch (const std::exception&) {
                throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": not an integer: " + field);
            }
            ++cols;
        }
        if (raster.rows == 0) {
            raster.cols = cols;
        } else if (cols != raster.cols) {
            throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": ragged raster row");
        }
        ++raster.rows;
    }
    return raster;
}

LabelRaster read_raster_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
    return read_raster_csv(in);
}

void write_raster_csv(std::ostream& out, const LabelRaster& raster) {
    for (std::size_t r = 0; r < raster.rows; ++r) {
        for (std::size_t c = 0; c < raster.cols; ++c) {
            if (c) out << ',';
            out << raster.at(r, c);
        }
        out << '\n';
    }
}

BoundaryReport boundary_report(const PointCloud& boundary, const std::vector<PointCloud>& objects) {
    if (boundary.empty()) throw Error(ErrorKind::TooFewPoints, "boundary is empty");
    BoundaryReport report;
    report.boundary = boundary;
    report.box = box_dimension(boundary);

    DcfOptions options;
    options.ip = {45.0, 55.0};
    const EstimateReport dcf = dcf_estimate(boundary, options);
    report.cf = dcf.cf;
    report.spacing = dcf.spacing;
    report.achieved_ip = dcf.achieved_ip;
    report.lmu = classify_lmu(dcf.cf, static_cast<int>(boundary.dim()));
    report.dcf_dimension = dcf.m_hat;
    report.weights = dcf.weights;
    for (const auto& object : objects) report.object_dimensions.push_back(box_dimension(object).slope);
    return report;
}

}  // namespace dimgrid
