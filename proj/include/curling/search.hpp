#pragma once

#include "curling/packed.hpp"
#include "curling/types.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace curling {

enum class SearchMode { exhaustive, pruned };

std::string_view to_string(SearchMode mode) noexcept;
SearchMode parse_search_mode(std::string_view text);

struct SearchOptions {
  unsigned threads = 0;
  std::size_t exhaustive_cap = 26;
  int block_bits = 8;
  std::size_t step_limit = kDefaultStepLimit;
  const SuffixCNTable* table = nullptr;  // nullptr: default_suffix_table()
};

/// Observed properties of good starting sequences.
struct StartProperties {
  bool begins_with_two = false;   // P2
  bool avoids_33 = false;         // P3
  bool avoids_fourth_powers = false;  // P4: no nonempty factor V^4
};

StartProperties start_properties(SeqView s);

struct SearchReport {
  int n = 0;
  std::size_t omega = 0;
  IntSeq best;                       // lexicographically least achiever (2 < 3)
  std::uint64_t achiever_count = 0;  // among the candidates examined
  SearchMode mode = SearchMode::exhaustive;
  bool conjectural = false;          // true iff pruned
  StartProperties best_properties;
};

/// For each length-b block, the blocks that may follow it: the 2b-symbol window
/// must contain neither 3 3 nor any factor V^4. Blocks that fail the check on
/// their own have no successors. Also holds the successor lists for a trailing
/// partial block of every length r < b.
class FollowTable {
 public:
  explicit FollowTable(int block_bits = 8);

  int block_bits() const noexcept { return block_bits_; }
  bool block_ok(std::uint32_t block) const noexcept { return block_ok_[block]; }
  /// Successors of `block` that are `len` symbols long (1 <= len <= b).
  const std::vector<std::uint32_t>& successors(std::uint32_t block, int len) const noexcept {
    return follow_[static_cast<std::size_t>(len - 1)][block];
  }
  bool allowed(std::uint32_t first, std::uint32_t second) const;

  /// True iff the `len`-symbol word has no 3 3 and no factor V^4.
  static bool window_ok(std::uint64_t bits, int len) noexcept;

 private:
  int block_bits_;
  std::vector<bool> block_ok_;
  std::vector<std::vector<std::vector<std::uint32_t>>> follow_;
};

SearchReport omega_search(int n, SearchMode mode, const SearchOptions& options = {});

/// Omega(1..n_max), one report per n.
std::vector<SearchReport> omega_series(int n_max, SearchMode mode, const SearchOptions& options = {});

/// Lengths n <= n_max with Omega(n) > Omega(n-1), taking Omega(0) = -1.
std::vector<int> jump_points(int n_max, SearchMode mode, const SearchOptions& options = {});
std::vector<int> jump_points(const std::vector<SearchReport>& series);

/// Searches prefixes P of length n - |start| such that P start still reaches
/// `target` steps. Returns the lexicographically least such P.
std::optional<IntSeq> neutral_prefix(SeqView start, int n, std::size_t target,
                                     std::size_t step_limit = kDefaultStepLimit);

struct Construction {
  std::size_t start_len = 0;
  std::size_t total_len = 0;
  std::size_t tail = 0;  // a certified lower bound on Omega(start_len)
};

/// Extends s0 to S^(e), then extends S^(e) s0 to its own tail.
Construction construct_larger(SeqView s0, std::size_t step_limit = kDefaultStepLimit);

}  // namespace curling
