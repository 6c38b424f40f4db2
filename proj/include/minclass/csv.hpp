#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "minclass/types.hpp"

namespace minclass {

/// Shortest decimal representation that round-trips the exact double.
std::string format_double(double value);

/// Strict parse of a full field; throws InputError otherwise.
double parse_double(std::string_view text);
long parse_long(std::string_view text);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Minimal CSV dialect: comma separated, optional double quotes around
/// fields, no embedded newlines.
CsvTable read_csv(const std::string& path);
void write_csv(const std::string& path, const CsvTable& table);

std::vector<std::string> split_csv_line(const std::string& line);
std::string join_csv_row(const std::vector<std::string>& fields);

/// Loads a data CSV: the named column becomes the response, every other
/// column must be numeric and becomes a predictor. Empty or non-numeric
/// cells are a hard error.
RawTable read_raw_table(const std::string& path, const std::string& response_column);

}  // namespace minclass
