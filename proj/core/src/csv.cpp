#include "rptrim/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace rptrim {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

std::optional<double> parse_number(const std::string& raw) {
    std::size_t a = raw.find_first_not_of(" \t\r");
    if (a == std::string::npos) return std::nullopt;
    std::size_t b = raw.find_last_not_of(" \t\r");
    const char* begin = raw.data() + a;
    const char* end = raw.data() + b + 1;
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) return std::nullopt;
    return value;
}

}  // namespace

CsvMatrix read_csv_matrix(std::istream& in, bool first_row_is_header) {
    std::vector<std::vector<std::string>> raw;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        raw.push_back(split_line(line));
    }
    if (raw.empty()) throw CsvError("empty input", 1, 1);

    // a non-numeric first cell in the first data row marks a name column
    const std::size_t first_data = first_row_is_header ? 1 : 0;
    if (first_data >= raw.size())
        throw CsvError("no data rows after header", 1, 1);
    const bool has_names = !parse_number(raw[first_data][0]).has_value();

    const std::size_t offset = has_names ? 1 : 0;
    const std::size_t width = raw[first_data].size() - offset;
    if (width == 0) throw CsvError("no numeric columns", static_cast<int>(first_data) + 1, 1);

    CsvMatrix out;
    if (first_row_is_header) {
        // header may or may not carry the name-column slot
        const auto& hdr = raw[0];
        std::size_t hoff = hdr.size() == width ? 0 : hdr.size() - width;
        if (hdr.size() != width && hdr.size() != width + offset &&
            hdr.size() != width + 1)
            throw CsvError("header width mismatch", 1, 1);
        std::vector<double> header;
        header.reserve(width);
        for (std::size_t j = hoff; j < hdr.size(); ++j) {
            const auto v = parse_number(hdr[j]);
            if (!v) {
                header.clear();
                break;  // non-numeric header: names only, no grid
            }
            header.push_back(*v);
        }
        if (header.size() == width) out.header = std::move(header);
    }

    const std::size_t rows = raw.size() - first_data;
    out.values.resize(static_cast<Eigen::Index>(rows),
                      static_cast<Eigen::Index>(width));
    if (has_names) out.row_names = std::vector<std::string>(rows);

    for (std::size_t r = 0; r < rows; ++r) {
        const auto& cells = raw[r + first_data];
        const int line_no = static_cast<int>(r + first_data) + 1;
        if (cells.size() != width + offset)
            throw CsvError("ragged row: expected " +
                               std::to_string(width + offset) + " cells, got " +
                               std::to_string(cells.size()),
                           line_no, 1);
        if (has_names) (*out.row_names)[r] = cells[0];
        for (std::size_t j = 0; j < width; ++j) {
            const auto v = parse_number(cells[j + offset]);
            if (!v)
                throw CsvError("non-numeric cell '" + cells[j + offset] + "'",
                               line_no, static_cast<int>(j + offset) + 1);
            out.values(static_cast<Eigen::Index>(r),
                       static_cast<Eigen::Index>(j)) = *v;
        }
    }
    return out;
}

CsvMatrix read_csv_matrix_file(const std::string& path,
                               bool first_row_is_header) {
    std::ifstream in(path);
    if (!in) throw CsvError("cannot open file: " + path, 0, 0);
    return read_csv_matrix(in, first_row_is_header);
}

ObservationSet CsvMatrix::to_observations() const {
    ObservationSet data;
    data.values = values;
    if (header && header->size() >= 2) {
        bool increasing = true;
        for (std::size_t i = 1; i < header->size(); ++i)
            if (!((*header)[i] > (*header)[i - 1])) {
                increasing = false;
                break;
            }
        if (increasing) data.grid = Grid(*header);
    }
    data.validate();
    return data;
}

void write_csv_matrix(std::ostream& out, const Eigen::MatrixXd& values,
                      const Grid* grid) {
    const auto old_precision = out.precision(17);
    if (grid) {
        for (int j = 0; j < grid->size(); ++j) {
            if (j) out << ',';
            out << grid->points()[j];
        }
        out << '\n';
    }
    for (Eigen::Index i = 0; i < values.rows(); ++i) {
        for (Eigen::Index j = 0; j < values.cols(); ++j) {
            if (j) out << ',';
            out << values(i, j);
        }
        out << '\n';
    }
    out.precision(old_precision);
}

}  // namespace rptrim
