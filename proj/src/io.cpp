#include "curling/io.hpp"

#include "curling/error.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <fstream>
#include <memory>
#include <random>
#include <sstream>

namespace curling {
namespace {

bool is_integer(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

[[noreturn]] void bad_line(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::BadFormat, "b-file line " + std::to_string(line) + ": " + what);
}

bool needs_quotes(std::string_view field) {
  return field.find_first_of(",\"\n\r") != std::string_view::npos;
}

void put_field(std::string& out, std::string_view field) {
  if (!needs_quotes(field)) {
    out += field;
    return;
  }
  out += '"';
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
}

}  // namespace

std::string to_bfile(const BFile& b) {
  std::string out;
  for (std::size_t i = 0; i < b.values.size(); ++i) {
    out += std::to_string(b.offset + static_cast<std::int64_t>(i));
    out += ' ';
    out += b.values[i];
    out += '\n';
  }
  return out;
}

BFile parse_bfile(std::string_view text) {
  BFile out;
  if (text.empty()) return out;
  if (text.back() != '\n') throw Error(ErrorCode::BadFormat, "b-file must end with a newline");
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol + 1);
    const auto sp = line.find(' ');
    if (sp == std::string_view::npos) bad_line(line_no, "expected 'index value'");
    const auto index_text = line.substr(0, sp);
    const auto value_text = line.substr(sp + 1);
    if (!is_integer(index_text) || !is_integer(value_text)) bad_line(line_no, "fields must be integers");
    std::int64_t index = 0;
    auto [p, ec] = std::from_chars(index_text.data(), index_text.data() + index_text.size(), index);
    if (ec != std::errc{}) bad_line(line_no, "index out of range");
    if (out.values.empty()) {
      out.offset = index;
    } else if (index != out.offset + static_cast<std::int64_t>(out.values.size())) {
      bad_line(line_no, "index " + std::string(index_text) + " is not consecutive");
    }
    out.values.emplace_back(value_text);
  }
  return out;
}

std::size_t CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  throw Error(ErrorCode::BadFormat, "csv has no column '" + std::string(name) + "'");
}

std::string to_csv(const CsvTable& table) {
  std::string out;
  auto put_row = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      put_field(out, row[i]);
    }
    out += '\n';
  };
  put_row(table.header);
  for (const auto& row : table.rows) put_row(row);
  return out;
}

CsvTable parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    any = true;
    if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      row.push_back(std::move(field));
      field.clear();
      records.push_back(std::move(row));
      row.clear();
      any = false;
    } else if (c != '\r') {
      field += c;
    }
  }
  if (quoted) throw Error(ErrorCode::BadFormat, "csv ends inside a quoted field");
  if (any || !row.empty()) {
    row.push_back(std::move(field));
    records.push_back(std::move(row));
  }
  if (records.empty()) throw Error(ErrorCode::BadFormat, "csv has no header row");
  CsvTable out;
  out.header = std::move(records.front());
  for (std::size_t r = 1; r < records.size(); ++r) {
    if (records[r].size() != out.header.size())
      throw Error(ErrorCode::BadFormat, "csv row " + std::to_string(r) + " has " +
                                            std::to_string(records[r].size()) + " fields, header has " +
                                            std::to_string(out.header.size()));
    out.rows.push_back(std::move(records[r]));
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::BadFormat, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view data) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::random_device rd;
  auto tmp = path;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::BadFormat, "cannot write " + tmp.string());
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) throw Error(ErrorCode::BadFormat, "short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string sha256_hex(std::string_view data) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1)
    throw std::runtime_error("sha256 failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

}  // namespace curling
