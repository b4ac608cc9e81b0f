#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace curling {

struct CheckResult {
  std::string name;
  std::string source;    // where the expectation comes from
  bool pass = true;
  bool finding = false;  // a witness against an open conjecture
  std::string detail;
};

// Exhaustive invariant sweeps over binary words. Each returns one result whose
// detail names the first few counterexamples.

/// s = X Y^k with the shortest Y primitive, curling less than k (or once when
/// k = 1), and no shorter block giving k copies.
CheckResult check_shortest_block(int n_max);

/// Prefixing one symbol raises the curling number by at most one; all words
/// up to n_max plus `random_cases` longer ones.
CheckResult check_prefix_bound(int n_max, int random_cases = 2000, std::uint64_t seed = 1);

/// Robustness from s s agrees with robustness from s^(k+1).
CheckResult check_robust_equivalence(int n_max);

/// Every non-robust primitive word has exactly one X Y X (k = 1) or
/// X (T X)^k (k > 1) factorisation, and decompose_nonrobust returns it.
CheckResult check_decomposition_unique(int n_max);

/// Cardinality identities linking c(n,1), a, b and e, all from enumeration.
std::vector<CheckResult> check_abe_identities(int n_max, unsigned threads = 0);

/// For X with suffix Y, CN(Y X) = 1 and CN(X Y X) > 1, the word Y X splits as
/// S T S with T a suffix of X and S, and |S| = |Y| or |S| > 2|Y|.
CheckResult check_split_dichotomy(int m_max);

/// Fast curling number against the reference scan on every word up to n_max,
/// plus random longer words for both curling number and tail length.
CheckResult check_fast_vs_reference(int n_max, int random_cases = 100000, std::uint64_t seed = 7,
                                    unsigned threads = 0);

/// Random 1-free starts of length <= max_len all merge into Gijswijt's sequence.
CheckResult check_merge_random(int count, int max_len, std::size_t horizon, std::uint64_t seed = 11);

/// Recurrence, closed form, and doubling (from n0 = n_max / 2) against brute
/// force; also every brute row sums to 2^n.
std::vector<CheckResult> check_table_methods(int n_max, unsigned threads = 0);

}  // namespace curling
