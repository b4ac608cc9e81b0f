#include "curling/search.hpp"

#include "curling/curl.hpp"
#include "curling/error.hpp"
#include "curling/parallel.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace curling {
namespace {

constexpr int kMaxPrunedLength = 80;
constexpr std::size_t kMaxExhaustiveCap = 63;
constexpr int kShardBits = 12;

struct Best {
  std::size_t tau = 0;
  u128 bits = 0;
  std::uint64_t count = 0;

  void offer(std::size_t t, u128 b) noexcept {
    if (count == 0 || t > tau) {
      tau = t;
      bits = b;
      count = 1;
    } else if (t == tau) {
      ++count;
      if (b < bits) bits = b;
    }
  }

  void merge(const Best& other) noexcept {
    if (other.count == 0) return;
    if (count == 0 || other.tau > tau) {
      *this = other;
    } else if (other.tau == tau) {
      count += other.count;
      if (other.bits < bits) bits = other.bits;
    }
  }
};

IntSeq from_wide_bits(u128 bits, int n) {
  IntSeq out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = 2 + static_cast<int>((bits >> (n - 1 - i)) & 1u);
  return out;
}

const SuffixCNTable& pick_table(const SearchOptions& options) {
  return options.table != nullptr ? *options.table : default_suffix_table();
}

Best exhaustive(int n, const SearchOptions& options) {
  const auto& table = pick_table(options);
  const int shard_bits = std::min(n, kShardBits);
  const int low_bits = n - shard_bits;
  const std::size_t shards = std::size_t{1} << shard_bits;
  std::vector<Best> results(shards);
  for_each_shard(shards, options.threads, [&](std::size_t shard) {
    BinaryExtender ext(&table, options.step_limit);
    Best local;
    const std::uint64_t base = static_cast<std::uint64_t>(shard) << low_bits;
    const std::uint64_t span = std::uint64_t{1} << low_bits;
    for (std::uint64_t x = 0; x < span; ++x) local.offer(ext.tail_length(base | x, static_cast<std::size_t>(n)), base | x);
    results[shard] = local;
  });
  Best best;
  for (const auto& r : results) best.merge(r);
  return best;
}

class PrunedWalker {
 public:
  PrunedWalker(const FollowTable& follow, const SuffixCNTable& table, std::size_t step_limit, int n)
      : follow_(follow), ext_(&table, step_limit), n_(n) {}

  Best walk_from(std::uint32_t first_block) {
    const int b = follow_.block_bits();
    best_ = Best{};
    descend(first_block, first_block, (n_ - b) / b);
    return best_;
  }

 private:
  void descend(u128 prefix, std::uint32_t last, int full_left) {
    const int b = follow_.block_bits();
    if (full_left == 0) {
      const int r = (n_ - b) % b;
      if (r == 0) {
        evaluate(prefix);
      } else {
        for (auto q : follow_.successors(last, r)) evaluate((prefix << r) | q);
      }
      return;
    }
    for (auto q : follow_.successors(last, b)) descend((prefix << b) | q, q, full_left - 1);
  }

  void evaluate(u128 bits) { best_.offer(ext_.tail_length(bits, static_cast<std::size_t>(n_)), bits); }

  const FollowTable& follow_;
  BinaryExtender ext_;
  int n_;
  Best best_;
};

Best pruned(int n, const SearchOptions& options) {
  const auto& table = pick_table(options);
  const FollowTable follow(options.block_bits);
  const int b = follow.block_bits();
  if (n < b) {
    BinaryExtender ext(&table, options.step_limit);
    Best best;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      if (FollowTable::window_ok(x, n)) best.offer(ext.tail_length(x, static_cast<std::size_t>(n)), x);
    }
    return best;
  }
  std::vector<std::uint32_t> firsts;
  for (std::uint32_t p = 0; p < (1u << b); ++p) {
    if (follow.block_ok(p)) firsts.push_back(p);
  }
  std::vector<Best> results(firsts.size());
  for_each_shard(firsts.size(), options.threads, [&](std::size_t i) {
    PrunedWalker walker(follow, table, options.step_limit, n);
    results[i] = walker.walk_from(firsts[i]);
  });
  Best best;
  for (const auto& r : results) best.merge(r);
  return best;
}

}  // namespace

std::string_view to_string(SearchMode mode) noexcept {
  return mode == SearchMode::exhaustive ? "exhaustive" : "pruned-P3P4";
}

SearchMode parse_search_mode(std::string_view text) {
  if (text == "exhaustive") return SearchMode::exhaustive;
  if (text == "pruned" || text == "pruned-P3P4") return SearchMode::pruned;
  throw Error(ErrorCode::BadFormat, "unknown search mode '" + std::string(text) + "'");
}

StartProperties start_properties(SeqView s) {
  StartProperties p;
  p.begins_with_two = !s.empty() && s.front() == 2;
  p.avoids_33 = true;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] == 3 && s[i + 1] == 3) p.avoids_33 = false;
  }
  p.avoids_fourth_powers = true;
  const std::size_t n = s.size();
  for (std::size_t len = 1; 4 * len <= n && p.avoids_fourth_powers; ++len) {
    std::size_t run = 0;
    for (std::size_t i = 0; i + len < n; ++i) {
      run = s[i] == s[i + len] ? run + 1 : 0;
      if (run >= 3 * len) {
        p.avoids_fourth_powers = false;
        break;
      }
    }
  }
  return p;
}

FollowTable::FollowTable(int block_bits) : block_bits_(block_bits) {
  if (block_bits < 4 || block_bits > 12) throw Error(ErrorCode::CapExceeded, "block size must be in 4..12");
  const std::uint32_t blocks = 1u << block_bits;
  block_ok_.resize(blocks);
  for (std::uint32_t p = 0; p < blocks; ++p) block_ok_[p] = window_ok(p, block_bits);
  follow_.assign(static_cast<std::size_t>(block_bits), std::vector<std::vector<std::uint32_t>>(blocks));
  for (int len = 1; len <= block_bits; ++len) {
    for (std::uint32_t p = 0; p < blocks; ++p) {
      if (!block_ok_[p]) continue;
      auto& out = follow_[static_cast<std::size_t>(len - 1)][p];
      for (std::uint32_t q = 0; q < (1u << len); ++q) {
        if (window_ok((std::uint64_t{p} << len) | q, block_bits + len)) out.push_back(q);
      }
    }
  }
}

bool FollowTable::allowed(std::uint32_t first, std::uint32_t second) const {
  const std::uint32_t blocks = 1u << block_bits_;
  if (first >= blocks || second >= blocks) throw Error(ErrorCode::IndexOutOfRange, "block out of range");
  return window_ok((std::uint64_t{first} << block_bits_) | second, 2 * block_bits_);
}

bool FollowTable::window_ok(std::uint64_t bits, int len) noexcept {
  const auto mask = [](int w) { return w >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << w) - 1; };
  bits &= mask(len);
  if (len >= 2 && (bits & (bits >> 1)) != 0) return false;
  for (int l = 1; 4 * l <= len; ++l) {
    const std::uint64_t same = ~(bits ^ (bits >> l)) & mask(len - l);
    int run = 0;
    for (int p = 0; p < len - l; ++p) {
      run = ((same >> p) & 1u) ? run + 1 : 0;
      if (run >= 3 * l) return false;
    }
  }
  return true;
}

SearchReport omega_search(int n, SearchMode mode, const SearchOptions& options) {
  if (n < 1) throw Error(ErrorCode::IndexOutOfRange, "search length must be positive");
  Best best;
  if (mode == SearchMode::exhaustive) {
    const std::size_t cap = std::min(options.exhaustive_cap, kMaxExhaustiveCap);
    if (static_cast<std::size_t>(n) > cap) {
      throw Error(ErrorCode::CapExceeded,
                  "exhaustive search limited to n <= " + std::to_string(cap) + " (got " + std::to_string(n) + ")");
    }
    best = exhaustive(n, options);
  } else {
    if (n > kMaxPrunedLength) {
      throw Error(ErrorCode::CapExceeded, "pruned search limited to n <= " + std::to_string(kMaxPrunedLength));
    }
    best = pruned(n, options);
  }
  if (best.count == 0) throw Error(ErrorCode::CapExceeded, "no candidate passed the block filter");

  SearchReport report;
  report.n = n;
  report.omega = best.tau;
  report.best = from_wide_bits(best.bits, n);
  report.achiever_count = best.count;
  report.mode = mode;
  report.conjectural = mode == SearchMode::pruned;
  report.best_properties = start_properties(report.best);
  if (extend_to_tail(report.best, options.step_limit).tau != report.omega) {
    throw std::logic_error("fast search disagrees with the reference extension for " + format_binary(report.best));
  }
  return report;
}

std::vector<SearchReport> omega_series(int n_max, SearchMode mode, const SearchOptions& options) {
  std::vector<SearchReport> out;
  for (int n = 1; n <= n_max; ++n) out.push_back(omega_search(n, mode, options));
  return out;
}

std::vector<int> jump_points(const std::vector<SearchReport>& series) {
  std::vector<int> out;
  long long previous = -1;
  for (const auto& r : series) {
    if (static_cast<long long>(r.omega) > previous) out.push_back(r.n);
    previous = static_cast<long long>(r.omega);
  }
  return out;
}

std::vector<int> jump_points(int n_max, SearchMode mode, const SearchOptions& options) {
  return jump_points(omega_series(n_max, mode, options));
}

std::optional<IntSeq> neutral_prefix(SeqView start, int n, std::size_t target, std::size_t step_limit) {
  if (n < static_cast<int>(start.size())) throw Error(ErrorCode::IndexOutOfRange, "prefix length would be negative");
  const int m = n - static_cast<int>(start.size());
  if (m > 40) throw Error(ErrorCode::CapExceeded, "neutral prefix search limited to 40 free symbols");
  IntSeq s(static_cast<std::size_t>(n));
  std::copy(start.begin(), start.end(), s.begin() + m);
  for (std::uint64_t p = 0; p < (std::uint64_t{1} << m); ++p) {
    for (int i = 0; i < m; ++i) s[static_cast<std::size_t>(i)] = 2 + static_cast<int>((p >> (m - 1 - i)) & 1u);
    if (extend_to_tail(s, step_limit).tau == target) return IntSeq(s.begin(), s.begin() + m);
  }
  return std::nullopt;
}

Construction construct_larger(SeqView s0, std::size_t step_limit) {
  if (s0.empty()) throw Error(ErrorCode::EmptyInput, "construction needs a nonempty start");
  if (!is_binary(s0)) throw Error(ErrorCode::BadFormat, "construction needs a {2,3} start");
  IntSeq start = extend_to_tail(s0, step_limit).extension;
  start.insert(start.end(), s0.begin(), s0.end());
  const auto grown = extend_to_tail(start, step_limit);
  return {start.size(), grown.extension.size(), grown.tau};
}

}  // namespace curling
