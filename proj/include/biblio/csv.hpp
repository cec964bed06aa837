#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace biblio::csv {

/// Splits on `delim`; fields are whitespace-trimmed. No quoting support:
/// the table formats used here keep delimiters out of the values.
std::vector<std::string> split(const std::string& line, char delim = ',');

std::string trim(const std::string& s);

/// Calls `row` for each non-empty, non-comment ('#') line with its fields
/// and 1-based line number. Throws ParseError when the file is unreadable.
void for_each_row(
    const std::filesystem::path& path, char delim,
    const std::function<void(const std::vector<std::string>&, int)>& row);

}  // namespace biblio::csv
