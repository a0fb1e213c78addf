#ifndef SQZWG_CSV_HPP
#define SQZWG_CSV_HPP

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace sqzwg {

// Shortest round-trip decimal formatting (std::to_chars): deterministic,
// locale-independent, byte-identical across runs.
std::string format_double(double value);

// Comma-separated writer with exactly one header row.
class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    void header(const std::vector<std::string>& names);
    void row(const std::vector<double>& values);
    // For ragged tables: absent trailing cells are emitted empty.
    void row(const std::vector<std::optional<double>>& values);

private:
    std::ostream& out_;
    size_t columns_ = 0;
    bool header_written_ = false;
};

// Minimal reader: one header row, then numeric rows. Ragged rows are allowed
// only if `min_columns <= n <= header size`. Errors cite line numbers.
struct CsvTable {
    std::vector<std::string> column_names;
    std::vector<std::vector<double>> rows;
    std::string origin;
};

CsvTable read_csv(std::istream& in, std::string origin, size_t min_columns);
CsvTable read_csv_file(const std::string& path, size_t min_columns);

} // namespace sqzwg

#endif // SQZWG_CSV_HPP
