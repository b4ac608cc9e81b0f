#pragma once

#include "curling/tables.hpp"
#include "curling/types.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <vector>

namespace curling {

using BigRational = boost::multiprecision::cpp_rational;

struct TailOptions {
  unsigned threads = 0;
  int cap = 24;
  std::size_t step_limit = kDefaultStepLimit;
};

/// Tail length of every n-symbol {2,3} word, indexed by its bit pattern.
std::vector<std::uint8_t> tail_census(int n, const TailOptions& options = {});

struct TailRow {
  int n = 0;
  std::vector<std::uint64_t> counts;  // counts[i] = t(n,i), i = 0..Omega(n)
  BigRational mean;

  std::size_t max_tail() const noexcept { return counts.empty() ? 0 : counts.size() - 1; }
};

TailRow tail_row(int n, const TailOptions& options = {});
TailRow tail_row_from_census(int n, const std::vector<std::uint8_t>& census);
BigRational mean_tail(int n, const TailOptions& options = {});

struct RottenReport {
  int n = 0;
  std::uint64_t rotten_count = 0;
  std::uint64_t doubly_rotten_count = 0;
  std::vector<IntSeq> examples;        // lexicographic, at most max_examples
  std::vector<IntSeq> doubly_rotten;   // every witness found
};

struct PrefixIncreaseReport {
  int n = 0;
  std::uint64_t count = 0;       // tau(2 s) > tau(s) or tau(3 s) > tau(s)
  std::uint64_t both_count = 0;  // both prefixes lengthen the tail
  std::vector<IntSeq> both_examples;
};

struct PrefixScan {
  RottenReport rotten;
  PrefixIncreaseReport increase;
};

/// Rotten and prefix-increase statistics from one pair of censuses (n, n+1).
PrefixScan prefix_scan(int n, const TailOptions& options = {}, std::size_t max_examples = 64);
RottenReport rotten_scan(int n, const TailOptions& options = {}, std::size_t max_examples = 64);
PrefixIncreaseReport prefix_increase_scan(int n, const TailOptions& options = {});

/// True iff every X Y^k with k = CN(s) has X empty, i.e. CN(s without its
/// first term) < CN(s), the empty sequence counting as 0.
bool first_term_essential(SeqView s);
std::uint64_t essential_first_scan(int n, const TailOptions& options = {});

struct ThetaStats {
  int n = 0;
  std::map<int, double> theta;  // c(n,k) / 2^n
  double markov_estimate = 0;   // n log 2 / log(1 / (theta_2 + theta_3))
};

ThetaStats theta_stats(int n, const CountTables& tables);

}  // namespace curling
