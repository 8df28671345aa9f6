#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace nesphere {

// Locale-independent number formatting built on std::to_chars/from_chars.
// Shortest round-trip form is used for every persisted real value unless a
// format pins a fixed precision (feature TSVs use 6 decimals).

/// Shortest decimal form that parses back to the identical double.
std::string format_double(double value);

/// Fixed-precision decimal form, e.g. format_fixed(1.5, 6) == "1.500000".
std::string format_fixed(double value, int precision);

/// Parses a full token as a double; returns false on trailing garbage.
bool parse_double(std::string_view text, double& out);

/// Parses a full token as a non-negative integer.
bool parse_size(std::string_view text, std::size_t& out);

/// Splits on runs of spaces and tabs, dropping empty fields.
std::vector<std::string_view> split_ws(std::string_view line);

/// Splits on a single delimiter, keeping empty fields.
std::vector<std::string_view> split_char(std::string_view line, char delim);

/// Removes surrounding spaces, tabs and carriage returns.
std::string_view trim(std::string_view text);

/// Reads a whole file; throws DataError when unreadable.
std::string read_file(const std::string& path);

/// Writes a whole file; throws DataError on I/O failure.
void write_file(const std::string& path, std::string_view content);

}  // namespace nesphere
