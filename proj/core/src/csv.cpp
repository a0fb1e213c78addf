#include "sqzwg/csv.hpp"
#include "sqzwg/errors.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>

namespace sqzwg {

std::string format_double(double value) {
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    std::array<char, 32> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

void CsvWriter::header(const std::vector<std::string>& names) {
    for (size_t i = 0; i < names.size(); ++i) {
        if (i)
            out_ << ',';
        out_ << names[i];
    }
    out_ << '\n';
    columns_ = names.size();
    header_written_ = true;
}

void CsvWriter::row(const std::vector<double>& values) {
    for (size_t i = 0; i < values.size(); ++i) {
        if (i)
            out_ << ',';
        out_ << format_double(values[i]);
    }
    out_ << '\n';
}

void CsvWriter::row(const std::vector<std::optional<double>>& values) {
    for (size_t i = 0; i < values.size(); ++i) {
        if (i)
            out_ << ',';
        if (values[i])
            out_ << format_double(*values[i]);
    }
    out_ << '\n';
}

namespace {

std::vector<std::string> split_fields(std::string_view line) {
    std::vector<std::string> fields;
    size_t pos = 0;
    while (true) {
        const auto comma = line.find(',', pos);
        std::string_view f = line.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        while (!f.empty() && (f.front() == ' ' || f.front() == '\t'))
            f.remove_prefix(1);
        while (!f.empty() && (f.back() == ' ' || f.back() == '\t' || f.back() == '\r'))
            f.remove_suffix(1);
        fields.emplace_back(f);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return fields;
}

} // namespace

CsvTable read_csv(std::istream& in, std::string origin, size_t min_columns) {
    CsvTable table;
    table.origin = std::move(origin);

    std::string line;
    int line_no = 0;
    if (!std::getline(in, line))
        throw ParseError(table.origin + ": empty file, expected a CSV header row", 1);
    ++line_no;
    table.column_names = split_fields(line);
    if (table.column_names.size() < min_columns)
        throw ParseError(table.origin + ":1: header has " +
                             std::to_string(table.column_names.size()) + " columns, expected >= " +
                             std::to_string(min_columns),
                         1);

    while (std::getline(in, line)) {
        ++line_no;
        std::string_view sv = line;
        while (!sv.empty() && (sv.back() == '\r' || sv.back() == '\n'))
            sv.remove_suffix(1);
        if (sv.empty())
            continue;
        const auto fields = split_fields(sv);
        if (fields.size() < min_columns || fields.size() > table.column_names.size())
            throw ParseError(table.origin + ":" + std::to_string(line_no) + ": row has " +
                                 std::to_string(fields.size()) + " fields, expected between " +
                                 std::to_string(min_columns) + " and " +
                                 std::to_string(table.column_names.size()),
                             line_no);
        std::vector<double> row;
        row.reserve(fields.size());
        for (const auto& f : fields) {
            double v = 0.0;
            auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
            if (ec != std::errc{} || ptr != f.data() + f.size())
                throw ParseError(table.origin + ":" + std::to_string(line_no) +
                                     ": cannot parse field '" + f + "' as a number",
                                 line_no);
            row.push_back(v);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

CsvTable read_csv_file(const std::string& path, size_t min_columns) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open file '" + path + "'");
    return read_csv(in, path, min_columns);
}

} // namespace sqzwg
