#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dimgrid {

/**
 * Dense N x d matrix of sample coordinates, stored row-major.
 *
 * Every coordinate is finite and every row has the same length. A cloud may
 * have zero ambient dimension (N copies of the empty vector).
 */
class PointCloud {
public:
    PointCloud() = default;

    /// Takes ownership of row-major `coords`; size must be a multiple of `dim`.
    PointCloud(std::vector<double> coords, std::size_t dim);

    /// Builds from explicit rows. Throws InvalidArgument on ragged input.
    static PointCloud from_rows(const std::vector<std::vector<double>>& rows);

    [[nodiscard]] std::size_t size() const noexcept { return rows_; }
    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] bool empty() const noexcept { return rows_ == 0; }

    [[nodiscard]] std::span<const double> row(std::size_t i) const noexcept {
        return {data_.data() + i * dim_, dim_};
    }
    [[nodiscard]] std::span<double> row(std::size_t i) noexcept {
        return {data_.data() + i * dim_, dim_};
    }
    [[nodiscard]] double operator()(std::size_t i, std::size_t j) const noexcept {
        return data_[i * dim_ + j];
    }
    [[nodiscard]] double& operator()(std::size_t i, std::size_t j) noexcept {
        return data_[i * dim_ + j];
    }

    [[nodiscard]] std::span<const double> data() const noexcept { return data_; }

    void push_back(std::span<const double> point);

    /// Multiplies every coordinate by `factor`.
    [[nodiscard]] PointCloud scaled(double factor) const;

    friend bool operator==(const PointCloud&, const PointCloud&) = default;

private:
    std::vector<double> data_;
    std::size_t dim_ = 0;
    std::size_t rows_ = 0;
};

/// Point cloud with one integer class label per row.
struct LabeledCloud {
    PointCloud points;
    std::vector<int> labels;

    /// Rows carrying `label`.
    [[nodiscard]] PointCloud select(int label) const;
    /// Sorted distinct labels.
    [[nodiscard]] std::vector<int> classes() const;
};

struct CsvOptions {
    bool header = false;
    /// Treat the last column as an integer class label.
    bool label_column = false;
};

/// Reads comma-separated reals, one point per row. Ragged rows are rejected.
LabeledCloud read_csv(std::istream& in, const CsvOptions& options = {});
LabeledCloud read_csv_file(const std::string& path, const CsvOptions& options = {});

/// Writes coordinates (and labels when present) with a header row.
void write_csv(std::ostream& out, const PointCloud& cloud,
               const std::vector<int>* labels = nullptr);
void write_csv_file(const std::string& path, const PointCloud& cloud,
                    const std::vector<int>* labels = nullptr);

}  // namespace dimgrid
