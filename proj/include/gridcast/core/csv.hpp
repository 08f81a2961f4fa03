#pragma once

#include <string>
#include <vector>

namespace gridcast::core {

/// Minimal CSV helpers for the flat comma-separated files used throughout
/// the project. No quoting or escaping: field values never contain commas.
std::vector<std::string> split_csv_line(const std::string& line);

/// Reads all non-empty lines of a CSV file. Throws std::runtime_error if the
/// file cannot be opened.
std::vector<std::vector<std::string>> read_csv(const std::string& path);

/// Formats a double with 17 significant digits (lossless round-trip).
std::string format_double(double v);

/// Parses a double; returns false on malformed input.
bool try_parse_double(const std::string& s, double& out);

}  // namespace gridcast::core
