#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace curling {

using IntSeq = std::vector<std::int64_t>;
using SeqView = std::span<const std::int64_t>;
using BigInt = boost::multiprecision::cpp_int;

struct CurlResult {
  int k = 1;      // curling number
  int pi = 1;     // length of the shortest block Y with S = X Y^k
  int x_len = 0;  // |X| = n - k * pi

  friend bool operator==(const CurlResult&, const CurlResult&) = default;
};

struct ExtensionResult {
  std::size_t tau = 0;
  IntSeq extension;
};

inline constexpr std::size_t kDefaultStepLimit = 10'000;

// Binary sequences use the symbols 2 and 3. In bit form 2 -> 0, 3 -> 1 and the
// last symbol sits in bit 0, so the first of n symbols is bit n-1 and numeric
// order of the n-bit word equals lexicographic order with 2 < 3.

/// Parses "2323" style text. Throws Error(BadFormat) on anything but '2'/'3'.
IntSeq parse_binary(std::string_view text);

/// Parses "0,1,2" style text; also accepts a bare binary string.
IntSeq parse_sequence(std::string_view text);

std::string format_binary(SeqView s);
std::string format_sequence(SeqView s);

bool is_binary(SeqView s) noexcept;

/// n-bit word for a binary sequence of length <= 64.
std::uint64_t to_bits(SeqView s);
IntSeq from_bits(std::uint64_t bits, int n);

}  // namespace curling
