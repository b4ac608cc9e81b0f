#include "curling/types.hpp"

#include "curling/error.hpp"

#include <algorithm>
#include <charconv>

namespace curling {

IntSeq parse_binary(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::EmptyInput, "empty binary string");
  IntSeq out;
  out.reserve(text.size());
  for (char c : text) {
    if (c != '2' && c != '3') {
      throw Error(ErrorCode::BadFormat, "binary sequences use only '2' and '3': " + std::string(text));
    }
    out.push_back(c - '0');
  }
  return out;
}

IntSeq parse_sequence(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::EmptyInput, "empty sequence");
  if (text.find(',') == std::string_view::npos &&
      std::all_of(text.begin(), text.end(), [](char c) { return c == '2' || c == '3'; })) {
    return parse_binary(text);
  }
  IntSeq out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view field = text.substr(pos, end - pos);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      throw Error(ErrorCode::BadFormat, "not an integer: '" + std::string(field) + "'");
    }
    out.push_back(value);
    pos = end + 1;
  }
  return out;
}

std::string format_binary(SeqView s) {
  std::string out;
  out.reserve(s.size());
  for (auto v : s) out.push_back(static_cast<char>('0' + v));
  return out;
}

std::string format_sequence(SeqView s) {
  std::string out;
  char buf[24];
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out.push_back(',');
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, s[i]);
    out.append(buf, ptr);
  }
  return out;
}

bool is_binary(SeqView s) noexcept {
  return std::all_of(s.begin(), s.end(), [](std::int64_t v) { return v == 2 || v == 3; });
}

std::uint64_t to_bits(SeqView s) {
  if (s.size() > 64) throw Error(ErrorCode::CapExceeded, "to_bits holds at most 64 symbols");
  std::uint64_t bits = 0;
  for (auto v : s) {
    if (v != 2 && v != 3) throw Error(ErrorCode::BadFormat, "not a {2,3} sequence");
    bits = (bits << 1) | static_cast<std::uint64_t>(v == 3);
  }
  return bits;
}

IntSeq from_bits(std::uint64_t bits, int n) {
  IntSeq out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = 2 + static_cast<std::int64_t>((bits >> (n - 1 - i)) & 1u);
  return out;
}

}  // namespace curling
