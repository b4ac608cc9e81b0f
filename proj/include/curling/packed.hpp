#pragma once

#include "curling/types.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace curling {

using u128 = unsigned __int128;

/// A {2,3}-sequence packed one bit per symbol (2 -> 0, 3 -> 1), last symbol in
/// bit 0 of words()[0]. Unused high bits of the top word are zero.
class PackedSeq {
 public:
  PackedSeq() = default;

  static PackedSeq pack(SeqView s);
  static PackedSeq from_word(std::uint64_t bits, std::size_t len);

  IntSeq unpack() const;

  std::size_t size() const noexcept { return len_; }
  bool empty() const noexcept { return len_ == 0; }

  /// Symbol bit at distance `p` from the end (p = 0 is the last symbol).
  int bit_from_end(std::size_t p) const noexcept {
    return static_cast<int>((words_[p >> 6] >> (p & 63)) & 1u);
  }

  /// The last min(size(), 128) symbols.
  u128 low128() const noexcept;

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const PackedSeq&, const PackedSeq&) = default;

 private:
  std::vector<std::uint64_t> words_;
  std::size_t len_ = 0;
};

/// min(CN, 4) of every binary sequence of length `width`, two bits per entry.
/// Immutable once built; safe to share across threads.
class SuffixCNTable {
 public:
  static constexpr int kDefaultWidth = 18;
  static constexpr int kMaxWidth = 28;
  static constexpr std::uint16_t kFormatVersion = 1;

  explicit SuffixCNTable(int width = kDefaultWidth);

  int width() const noexcept { return width_; }

  /// 0..3 meaning CN = 1, 2, 3, >= 4 for the width-bit word `suffix`.
  int code(std::uint64_t suffix) const noexcept {
    return (bytes_[suffix >> 2] >> ((suffix & 3u) * 2)) & 3;
  }

  /// 8-byte header ("CNT2", u16 version, u16 width, little endian) followed
  /// by the 2-bit entries, four per byte, entry i at bits 2*(i%4) of byte i/4.
  std::vector<std::uint8_t> serialize() const;
  static SuffixCNTable deserialize(std::span<const std::uint8_t> data);

  friend bool operator==(const SuffixCNTable&, const SuffixCNTable&) = default;

 private:
  SuffixCNTable(int width, std::vector<std::uint8_t> bytes) : width_(width), bytes_(std::move(bytes)) {}

  int width_;
  std::vector<std::uint8_t> bytes_;
};

/// Exact (k, pi) via table-seeded bounds and shift/XOR repetition counting.
/// Agrees with curling_number() on every input.
CurlResult fast_curling_number(const PackedSeq& s, const SuffixCNTable& table);
CurlResult fast_curling_number(const PackedSeq& s);

/// Curling number of the `len`-symbol word `bits` (len <= 128); no allocation.
CurlResult fast_curling_number(u128 bits, std::size_t len, const SuffixCNTable* table) noexcept;

/// True iff the `len`-symbol word ends in a square YY (i.e. CN > 1).
bool has_square_suffix(u128 bits, std::size_t len) noexcept;

/// Reusable extension engine for {2,3} starts. Keeps its buffers between calls,
/// so one instance per worker thread enumerates millions of starts without
/// allocating. Not thread-safe; the table it points to is.
class BinaryExtender {
 public:
  explicit BinaryExtender(const SuffixCNTable* table, std::size_t step_limit = kDefaultStepLimit)
      : table_(table), step_limit_(step_limit) {}

  /// Tail length of the `len`-symbol start held in `bits` (len <= 128).
  std::size_t tail_length(u128 bits, std::size_t len);
  std::size_t tail_length(const PackedSeq& s0);
  ExtensionResult extend(const PackedSeq& s0);

 private:
  void load(const PackedSeq& s0);
  void load(u128 bits, std::size_t len);
  std::size_t run(IntSeq* appended);

  const SuffixCNTable* table_;
  std::size_t step_limit_;
  std::vector<std::uint8_t> symbols_;  // oldest first
  u128 window_ = 0;
};

ExtensionResult fast_tail_length(const PackedSeq& s0, const SuffixCNTable& table,
                                 std::size_t step_limit = kDefaultStepLimit);

/// Process-wide default-width table, built on first use.
const SuffixCNTable& default_suffix_table();

}  // namespace curling
