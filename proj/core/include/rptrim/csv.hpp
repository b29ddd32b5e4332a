#pragma once

#include <Eigen/Dense>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rptrim/types.hpp"

namespace rptrim {

/// Data-format error with 1-based row/column position for diagnostics.
class CsvError : public std::runtime_error {
public:
    CsvError(const std::string& message, int row, int col)
        : std::runtime_error(message), row(row), col(col) {}
    int row;
    int col;
};

struct CsvMatrix {
    Eigen::MatrixXd values;
    std::optional<std::vector<double>> header;     // numeric header row
    std::optional<std::vector<std::string>> row_names;

    /// ObservationSet with the header (when strictly increasing) as grid.
    ObservationSet to_observations() const;
};

/// Comma-separated numeric matrix. A leading row-name column is detected
/// by a non-numeric first cell. When `first_row_is_header` the first row
/// is parsed as numeric abscissae instead of data.
CsvMatrix read_csv_matrix(std::istream& in, bool first_row_is_header = false);
CsvMatrix read_csv_matrix_file(const std::string& path,
                               bool first_row_is_header = false);

void write_csv_matrix(std::ostream& out, const Eigen::MatrixXd& values,
                      const Grid* grid = nullptr);

}  // namespace rptrim
