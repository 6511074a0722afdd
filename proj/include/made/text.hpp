#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace made {

/// Calls fn(line, 1-based line number) for each non-blank line, trimmed.
void for_each_line(const std::filesystem::path& path,
                   const std::function<void(std::string_view, std::size_t)>& fn);

/// Splits on commas or whitespace; empty fields are dropped.
std::vector<std::string_view> split_fields(std::string_view line);

long long parse_int(std::string_view s, const std::string& file, std::size_t line);
double parse_double(std::string_view s, const std::string& file, std::size_t line);

/// Shortest representation that reads back to the same double.
std::string format_double(double v);

/// Comma-separated table with a header row. Fields must not contain commas.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  friend bool operator==(const CsvTable&, const CsvTable&) = default;
};

void write_csv(const std::filesystem::path& path, const CsvTable& table);
CsvTable read_csv(const std::filesystem::path& path);

}  // namespace made
