#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace curling {

/// OEIS b-file: "index value" lines with consecutive indices from `offset`.
/// Values are kept as decimal text so big integers pass through untouched.
struct BFile {
  std::int64_t offset = 0;
  std::vector<std::string> values;

  friend bool operator==(const BFile&, const BFile&) = default;
};

std::string to_bfile(const BFile& b);
/// Strict reader: exactly one space per line, integer fields, consecutive
/// indices, no trailing whitespace, final newline. Throws BadFormat.
BFile parse_bfile(std::string_view text);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Column index by name; throws BadFormat if absent.
  std::size_t column(std::string_view name) const;

  friend bool operator==(const CsvTable&, const CsvTable&) = default;
};

/// Comma separated, header row, LF endings; fields holding a comma, quote or
/// newline are quoted with doubled inner quotes.
std::string to_csv(const CsvTable& table);
CsvTable parse_csv(std::string_view text);

std::string read_file(const std::filesystem::path& path);
/// Writes through a temporary sibling and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view data);

std::string sha256_hex(std::string_view data);

}  // namespace curling
