#include "curling/tails.hpp"

#include "curling/curl.hpp"
#include "curling/error.hpp"
#include "curling/packed.hpp"
#include "curling/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace curling {
namespace {

constexpr int kCensusMax = 26;

void check_cap(int n, const TailOptions& options, int extra = 0) {
  if (n < 1) throw Error(ErrorCode::IndexOutOfRange, "length must be positive");
  if (n > options.cap || n + extra > kCensusMax) {
    throw Error(ErrorCode::CapExceeded, "tail enumeration limited to n <= " +
                                            std::to_string(std::min(options.cap, kCensusMax - extra)));
  }
}

}  // namespace

std::vector<std::uint8_t> tail_census(int n, const TailOptions& options) {
  if (n < 1 || n > kCensusMax) throw Error(ErrorCode::CapExceeded, "census limited to n <= 26");
  const auto& table = default_suffix_table();
  const std::size_t words = std::size_t{1} << n;
  std::vector<std::uint8_t> out(words);
  const int shard_bits = std::min(n, 10);
  const std::size_t shards = std::size_t{1} << shard_bits;
  const std::size_t span = words / shards;
  for_each_shard(shards, options.threads, [&](std::size_t shard) {
    BinaryExtender ext(&table, options.step_limit);
    for (std::size_t x = shard * span; x < (shard + 1) * span; ++x) {
      const std::size_t tau = ext.tail_length(x, static_cast<std::size_t>(n));
      if (tau > 255) throw Error(ErrorCode::CapExceeded, "tail length above 255 does not fit the census");
      out[x] = static_cast<std::uint8_t>(tau);
    }
  });
  return out;
}

TailRow tail_row_from_census(int n, const std::vector<std::uint8_t>& census) {
  TailRow row;
  row.n = n;
  row.counts.assign(256, 0);
  for (auto tau : census) ++row.counts[tau];
  while (row.counts.size() > 1 && row.counts.back() == 0) row.counts.pop_back();
  BigInt weighted = 0;
  for (std::size_t i = 0; i < row.counts.size(); ++i) weighted += BigInt(row.counts[i]) * i;
  row.mean = BigRational(weighted, BigInt(1) << n);
  return row;
}

TailRow tail_row(int n, const TailOptions& options) {
  check_cap(n, options);
  return tail_row_from_census(n, tail_census(n, options));
}

BigRational mean_tail(int n, const TailOptions& options) { return tail_row(n, options).mean; }

PrefixScan prefix_scan(int n, const TailOptions& options, std::size_t max_examples) {
  check_cap(n, options, 1);
  const auto here = tail_census(n, options);
  const auto longer = tail_census(n + 1, options);
  PrefixScan out;
  out.rotten.n = n;
  out.increase.n = n;
  const std::size_t top = std::size_t{1} << n;
  for (std::size_t x = 0; x < top; ++x) {
    const int tau = here[x];
    const int with2 = longer[x];
    const int with3 = longer[x | top];
    const bool less2 = with2 < tau, less3 = with3 < tau;
    if (less2 || less3) {
      ++out.rotten.rotten_count;
      if (out.rotten.examples.size() < max_examples) out.rotten.examples.push_back(from_bits(x, n));
    }
    if (less2 && less3) {
      ++out.rotten.doubly_rotten_count;
      out.rotten.doubly_rotten.push_back(from_bits(x, n));
    }
    const bool more2 = with2 > tau, more3 = with3 > tau;
    if (more2 || more3) ++out.increase.count;
    if (more2 && more3) {
      ++out.increase.both_count;
      out.increase.both_examples.push_back(from_bits(x, n));
    }
  }
  return out;
}

RottenReport rotten_scan(int n, const TailOptions& options, std::size_t max_examples) {
  return prefix_scan(n, options, max_examples).rotten;
}

PrefixIncreaseReport prefix_increase_scan(int n, const TailOptions& options) {
  return prefix_scan(n, options, 0).increase;
}

bool first_term_essential(SeqView s) {
  if (s.empty()) throw Error(ErrorCode::EmptyInput, "empty sequence");
  const int k = curling_number(s).k;
  const int rest = s.size() == 1 ? 0 : curling_number(s.subspan(1)).k;
  return rest < k;
}

std::uint64_t essential_first_scan(int n, const TailOptions& options) {
  check_cap(n, options);
  if (n == 1) return 2;
  const auto& table = default_suffix_table();
  const int shard_bits = std::min(n, 10);
  const std::size_t shards = std::size_t{1} << shard_bits;
  const std::uint64_t span = (std::uint64_t{1} << n) / shards;
  std::vector<std::uint64_t> parts(shards);
  const std::uint64_t rest_mask = (std::uint64_t{1} << (n - 1)) - 1;
  for_each_shard(shards, options.threads, [&](std::size_t shard) {
    std::uint64_t count = 0;
    for (std::uint64_t x = shard * span; x < (shard + 1) * span; ++x) {
      const int k = fast_curling_number(x, static_cast<std::size_t>(n), &table).k;
      if (k == 1) continue;
      if (fast_curling_number(x & rest_mask, static_cast<std::size_t>(n - 1), &table).k < k) ++count;
    }
    parts[shard] = count;
  });
  std::uint64_t total = 0;
  for (auto v : parts) total += v;
  return total;
}

ThetaStats theta_stats(int n, const CountTables& tables) {
  ThetaStats out;
  out.n = n;
  const double total = std::ldexp(1.0, n);
  for (int k = 1; k <= n; ++k) out.theta[k] = static_cast<double>(tables.get(Table::c, n, k)) / total;
  const double stay = (n >= 2 ? out.theta[2] : 0.0) + (n >= 3 ? out.theta[3] : 0.0);
  out.markov_estimate = stay > 0 ? n * std::log(2.0) / std::log(1.0 / stay) : 0.0;
  return out;
}

}  // namespace curling
