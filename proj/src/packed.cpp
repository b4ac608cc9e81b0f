#include "curling/packed.hpp"

#include "curling/error.hpp"

#include <algorithm>
#include <cstring>

namespace curling {
namespace {

inline u128 low_mask(std::size_t bits) noexcept {
  return bits >= 128 ? ~u128{0} : ((u128{1} << bits) - 1);
}

inline std::size_t ctz128(u128 x) noexcept {
  const auto lo = static_cast<std::uint64_t>(x);
  if (lo) return static_cast<std::size_t>(__builtin_ctzll(lo));
  return 64 + static_cast<std::size_t>(__builtin_ctzll(static_cast<std::uint64_t>(x >> 64)));
}

// Number of copies of the last `block` symbols that end the sequence. The
// 128-bit window is checked by replicating the block with shift/OR and XOR-ing;
// a run that survives the whole window continues symbol by symbol via bit_at.
template <class BitAt>
std::size_t repeats(u128 window, std::size_t len, std::size_t block, const BitAt& bit_at) noexcept {
  std::size_t run = block;
  if (block < 128) {
    const std::size_t in_window = std::min<std::size_t>(len, 128);
    u128 rep = window & low_mask(block);
    for (std::size_t filled = block; filled < 128; filled <<= 1) rep |= rep << filled;
    const u128 diff = (window ^ rep) & low_mask(in_window);
    if (diff) return ctz128(diff) / block;
    run = in_window;
  }
  while (run < len && bit_at(run) == bit_at(run - block)) ++run;
  return run / block;
}

template <class BitAt>
CurlResult curl_kernel(u128 window, std::size_t len, const SuffixCNTable* table, const BitAt& bit_at) noexcept {
  if (len <= 1) return {1, 1, 0};
  std::size_t best_k = 1;
  std::size_t best_pi = 1;
  std::size_t first_block = 1;
  if (table != nullptr && len >= static_cast<std::size_t>(table->width())) {
    const auto w = static_cast<std::size_t>(table->width());
    const auto seed = static_cast<std::size_t>(table->code(static_cast<std::uint64_t>(window & low_mask(w)))) + 1;
    if (seed <= 3) {
      // The last w symbols curl exactly `seed` times, so no block of length
      // <= w / (seed + 1) can repeat seed + 1 times in the whole sequence.
      best_k = seed;
      first_block = w / (seed + 1) + 1;
      if (seed > 1) best_pi = 0;
    }
  }
  for (std::size_t block = first_block; (best_k + 1) * block <= len; ++block) {
    const std::size_t r = repeats(window, len, block, bit_at);
    if (r > best_k) {
      best_k = r;
      best_pi = block;
    }
  }
  if (best_pi == 0) {
    // k came from the table unchanged; its shortest witness fits in the window.
    for (std::size_t block = 1;; ++block) {
      if (repeats(window, len, block, bit_at) >= best_k) {
        best_pi = block;
        break;
      }
    }
  }
  return {static_cast<int>(best_k), static_cast<int>(best_pi), static_cast<int>(len - best_k * best_pi)};
}

struct WindowOnly {
  int operator()(std::size_t) const noexcept { return 0; }
};

}  // namespace

PackedSeq PackedSeq::pack(SeqView s) {
  if (s.empty()) throw Error(ErrorCode::EmptyInput, "cannot pack an empty sequence");
  PackedSeq out;
  out.len_ = s.size();
  out.words_.assign((s.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != 2 && s[i] != 3) throw Error(ErrorCode::BadFormat, "PackedSeq holds only 2s and 3s");
    const std::size_t p = s.size() - 1 - i;
    if (s[i] == 3) out.words_[p >> 6] |= std::uint64_t{1} << (p & 63);
  }
  return out;
}

PackedSeq PackedSeq::from_word(std::uint64_t bits, std::size_t len) {
  if (len == 0 || len > 64) throw Error(ErrorCode::IndexOutOfRange, "from_word needs 1 <= len <= 64");
  PackedSeq out;
  out.len_ = len;
  out.words_.assign(1, len == 64 ? bits : bits & ((std::uint64_t{1} << len) - 1));
  return out;
}

IntSeq PackedSeq::unpack() const {
  IntSeq out(len_);
  for (std::size_t i = 0; i < len_; ++i) out[i] = 2 + bit_from_end(len_ - 1 - i);
  return out;
}

u128 PackedSeq::low128() const noexcept {
  if (words_.empty()) return 0;
  u128 v = words_[0];
  if (words_.size() > 1) v |= u128{words_[1]} << 64;
  return v;
}

SuffixCNTable::SuffixCNTable(int width) : width_(width) {
  if (width < 1 || width > kMaxWidth) {
    throw Error(ErrorCode::CapExceeded, "suffix table width must be in 1.." + std::to_string(kMaxWidth));
  }
  const std::uint64_t entries = std::uint64_t{1} << width;
  bytes_.assign(static_cast<std::size_t>((entries + 3) / 4), 0);
  for (std::uint64_t t = 0; t < entries; ++t) {
    const int k = curl_kernel(u128{t}, static_cast<std::size_t>(width), nullptr, WindowOnly{}).k;
    const auto code = static_cast<std::uint8_t>(std::min(k, 4) - 1);
    bytes_[t >> 2] = static_cast<std::uint8_t>(bytes_[t >> 2] | (code << ((t & 3u) * 2)));
  }
}

std::vector<std::uint8_t> SuffixCNTable::serialize() const {
  std::vector<std::uint8_t> out{'C', 'N', 'T', '2',
                                static_cast<std::uint8_t>(kFormatVersion & 0xff),
                                static_cast<std::uint8_t>(kFormatVersion >> 8),
                                static_cast<std::uint8_t>(width_ & 0xff),
                                static_cast<std::uint8_t>(width_ >> 8)};
  out.insert(out.end(), bytes_.begin(), bytes_.end());
  return out;
}

SuffixCNTable SuffixCNTable::deserialize(std::span<const std::uint8_t> data) {
  if (data.size() < 8 || std::memcmp(data.data(), "CNT2", 4) != 0) {
    throw Error(ErrorCode::BadFormat, "not a suffix curling-number table");
  }
  const int version = data[4] | (data[5] << 8);
  const int width = data[6] | (data[7] << 8);
  if (version != kFormatVersion) throw Error(ErrorCode::CacheInvalid, "suffix table version mismatch");
  if (width < 1 || width > kMaxWidth) throw Error(ErrorCode::BadFormat, "suffix table width out of range");
  const std::size_t expected = static_cast<std::size_t>(((std::uint64_t{1} << width) + 3) / 4);
  if (data.size() != 8 + expected) throw Error(ErrorCode::BadFormat, "suffix table payload has wrong size");
  return SuffixCNTable(width, std::vector<std::uint8_t>(data.begin() + 8, data.end()));
}

CurlResult fast_curling_number(u128 bits, std::size_t len, const SuffixCNTable* table) noexcept {
  return curl_kernel(bits & low_mask(len), len, table, WindowOnly{});
}

CurlResult fast_curling_number(const PackedSeq& s, const SuffixCNTable& table) {
  if (s.empty()) throw Error(ErrorCode::EmptyInput, "curling number of the empty sequence");
  return curl_kernel(s.low128(), s.size(), &table, [&s](std::size_t p) { return s.bit_from_end(p); });
}

CurlResult fast_curling_number(const PackedSeq& s) {
  if (s.empty()) throw Error(ErrorCode::EmptyInput, "curling number of the empty sequence");
  return curl_kernel(s.low128(), s.size(), nullptr, [&s](std::size_t p) { return s.bit_from_end(p); });
}

bool has_square_suffix(u128 bits, std::size_t len) noexcept {
  for (std::size_t block = 1; 2 * block <= len; ++block) {
    if (((bits ^ (bits >> block)) & low_mask(block)) == 0) return true;
  }
  return false;
}

void BinaryExtender::load(u128 bits, std::size_t len) {
  symbols_.resize(len);
  for (std::size_t i = 0; i < len; ++i) symbols_[i] = static_cast<std::uint8_t>((bits >> (len - 1 - i)) & 1u);
  window_ = bits;
}

void BinaryExtender::load(const PackedSeq& s0) {
  const std::size_t len = s0.size();
  symbols_.resize(len);
  for (std::size_t i = 0; i < len; ++i) symbols_[i] = static_cast<std::uint8_t>(s0.bit_from_end(len - 1 - i));
  window_ = s0.low128();
}

std::size_t BinaryExtender::run(IntSeq* appended) {
  const std::size_t start_len = symbols_.size();
  const auto bit_at = [this](std::size_t p) { return static_cast<int>(symbols_[symbols_.size() - 1 - p]); };
  for (std::size_t tau = 0;; ++tau) {
    const int k = curl_kernel(window_, symbols_.size(), table_, bit_at).k;
    if (k == 1) return tau;
    if (tau == step_limit_) {
      IntSeq start(start_len);
      for (std::size_t i = 0; i < start_len; ++i) start[i] = 2 + symbols_[i];
      throw StepLimitExceeded(std::move(start), step_limit_);
    }
    if (appended) appended->push_back(k);
    // A value >= 4 occurs for the first time, so no square can end at it.
    if (k >= 4) return tau + 1;
    const auto b = static_cast<std::uint8_t>(k == 3);
    symbols_.push_back(b);
    window_ = (window_ << 1) | b;
  }
}

std::size_t BinaryExtender::tail_length(u128 bits, std::size_t len) {
  if (len == 0 || len > 128) throw Error(ErrorCode::IndexOutOfRange, "word starts hold 1..128 symbols");
  load(bits & low_mask(len), len);
  return run(nullptr);
}

std::size_t BinaryExtender::tail_length(const PackedSeq& s0) {
  if (s0.empty()) throw Error(ErrorCode::EmptyInput, "tail length of the empty sequence");
  load(s0);
  return run(nullptr);
}

ExtensionResult BinaryExtender::extend(const PackedSeq& s0) {
  if (s0.empty()) throw Error(ErrorCode::EmptyInput, "tail length of the empty sequence");
  load(s0);
  IntSeq appended;
  ExtensionResult out;
  out.tau = run(&appended);
  out.extension = s0.unpack();
  out.extension.insert(out.extension.end(), appended.begin(), appended.end());
  return out;
}

ExtensionResult fast_tail_length(const PackedSeq& s0, const SuffixCNTable& table, std::size_t step_limit) {
  BinaryExtender ext(&table, step_limit);
  return ext.extend(s0);
}

const SuffixCNTable& default_suffix_table() {
  static const SuffixCNTable table(SuffixCNTable::kDefaultWidth);
  return table;
}

}  // namespace curling
