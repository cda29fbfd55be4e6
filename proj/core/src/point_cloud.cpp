#include "dimgrid/point_cloud.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <set>

#include "dimgrid/error.hpp"

namespace dimgrid {

PointCloud::PointCloud(std::vector<double> coords, std::size_t dim)
    : data_(std::move(coords)), dim_(dim) {
    if (dim_ == 0) {
        if (!data_.empty()) {
            throw Error(ErrorKind::InvalidArgument, "zero-dimensional cloud with coordinates");
        }
        rows_ = 0;
        return;
    }
    if (data_.size() % dim_ != 0) {
        throw Error(ErrorKind::InvalidArgument, "coordinate buffer is not a multiple of dim");
    }
    for (double v : data_) {
        if (!std::isfinite(v)) {
            throw Error(ErrorKind::InvalidArgument, "non-finite coordinate");
        }
    }
    rows_ = data_.size() / dim_;
}

PointCloud PointCloud::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) {
        return {};
    }
    const std::size_t d = rows.front().size();
    std::vector<double> flat;
    flat.reserve(rows.size() * d);
    for (const auto& r : rows) {
        if (r.size() != d) {
            throw Error(ErrorKind::InvalidArgument, "ragged rows");
        }
        flat.insert(flat.end(), r.begin(), r.end());
    }
    if (d == 0) {
        PointCloud c;
        c.rows_ = rows.size();
        return c;
    }
    return PointCloud(std::move(flat), d);
}

void PointCloud::push_back(std::span<const double> point) {
    if (rows_ == 0 && data_.empty() && dim_ == 0) {
        dim_ = point.size();
    }
    if (point.size() != dim_) {
        throw Error(ErrorKind::InvalidArgument, "point dimension mismatch");
    }
    for (double v : point) {
        if (!std::isfinite(v)) {
            throw Error(ErrorKind::InvalidArgument, "non-finite coordinate");
        }
    }
    data_.insert(data_.end(), point.begin(), point.end());
    ++rows_;
}

PointCloud PointCloud::scaled(double factor) const {
    PointCloud out = *this;
    for (double& v : out.data_) {
        v *= factor;
    }
    return out;
}

PointCloud LabeledCloud::select(int label) const {
    PointCloud out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (labels[i] == label) {
            out.push_back(points.row(i));
        }
    }
    return out;
}

std::vector<int> LabeledCloud::classes() const {
    std::set<int> s(labels.begin(), labels.end());
    return {s.begin(), s.end()};
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

double parse_double(std::string_view field, std::size_t line_no) {
    field = trim(field);
    double v = 0.0;
    // from_chars for double is available in libstdc++ 11.
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty()) {
        throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": bad number '" +
                                          std::string(field) + "'");
    }
    return v;
}

}  // namespace

LabeledCloud read_csv(std::istream& in, const CsvOptions& options) {
    LabeledCloud out;
    std::vector<double> flat;
    std::size_t width = 0;
    std::size_t rows = 0;
    std::string line;
    std::size_t line_no = 0;
    bool skipped_header = !options.header;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = trim(line);
        if (view.empty()) continue;
        if (!skipped_header) {
            skipped_header = true;
            continue;
        }
        std::vector<std::string_view> fields;
        std::size_t start = 0;
        while (true) {
            const auto comma = view.find(',', start);
            fields.push_back(view.substr(start, comma == std::string_view::npos ? view.npos : comma - start));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (rows == 0) {
            width = fields.size();
            if (options.label_column && width < 2) {
                throw Error(ErrorKind::Parse, "label column requested but only one column present");
            }
        } else if (fields.size() != width) {
            throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": expected " +
                                              std::to_string(width) + " columns, got " +
                                              std::to_string(fields.size()));
        }
        const std::size_t coord_cols = options.label_column ? width - 1 : width;
        for (std::size_t j = 0; j < coord_cols; ++j) {
            flat.push_back(parse_double(fields[j], line_no));
        }
        if (options.label_column) {
            const double lab = parse_double(fields.back(), line_no);
            out.labels.push_back(static_cast<int>(std::lround(lab)));
        }
        ++rows;
    }
    if (rows == 0) {
        throw Error(ErrorKind::Parse, "no data rows");
    }
    const std::size_t d = options.label_column ? width - 1 : width;
    try {
        out.points = PointCloud(std::move(flat), d);
    } catch (const Error& e) {
        throw Error(ErrorKind::Parse, e.what());
    }
    return out;
}

LabeledCloud read_csv_file(const std::string& path, const CsvOptions& options) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::Io, "cannot open '" + path + "'");
    }
    return read_csv(in, options);
}

void write_csv(std::ostream& out, const PointCloud& cloud, const std::vector<int>* labels) {
    for (std::size_t j = 0; j < cloud.dim(); ++j) {
        out << (j ? "," : "") << 'x' << j;
    }
    if (labels) out << (cloud.dim() ? "," : "") << "label";
    out << '\n';
    out << std::setprecision(std::numeric_limits<double>::max_digits10);
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        for (std::size_t j = 0; j < cloud.dim(); ++j) {
            out << (j ? "," : "") << cloud(i, j);
        }
        if (labels) out << ',' << (*labels)[i];
        out << '\n';
    }
}

void write_csv_file(const std::string& path, const PointCloud& cloud, const std::vector<int>* labels) {
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorKind::Io, "cannot write '" + path + "'");
    }
    write_csv(out, cloud, labels);
    if (!out) {
        throw Error(ErrorKind::Io, "write failed for '" + path + "'");
    }
}

}  // namespace dimgrid
