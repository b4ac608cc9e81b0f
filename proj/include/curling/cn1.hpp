#pragma once

#include "curling/types.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace curling {

// For S with CN(S) = 1 and its length-i suffix S[i]:
//   a(n,i) counts S with CN(S[i] S) = 1,
//   b(n,i) counts S with CN(S S[i] S) = 1,
//   e(n,i,j) counts S with S[i] S counted by b(n+i, j).

enum class AbeKind : char { a = 'a', b = 'b', e = 'e', c = 'c' };

inline constexpr int kDefaultEBruteCap = 20;
inline constexpr int kAbBruteCap = 24;

/// Direct enumeration of the defining condition. e needs n <= e_cap.
std::uint64_t abe_brute(AbeKind kind, int n, int i, int j = 0, int e_cap = kDefaultEBruteCap, unsigned threads = 0);

/// Memoised mutual recursion for a, b and c(n,1). e comes from enumeration
/// up to e_brute_cap and is the only base case.
class Cn1Engine {
 public:
  explicit Cn1Engine(int e_brute_cap = kDefaultEBruteCap, unsigned threads = 0);

  int e_brute_cap() const noexcept { return e_cap_; }

  BigInt c1(int n);
  BigInt a(int n, int i);
  BigInt b(int n, int i);
  BigInt e(int n, int i, int j);
  /// Robust primitive words with curling number 1: a(m, m-1), and 2 for m = 1.
  BigInt pprime1(int m);

  using Key = std::tuple<char, int, int, int>;
  const std::map<Key, BigInt>& memo() const noexcept { return memo_; }
  std::size_t memo_size() const noexcept { return memo_.size(); }

  /// Header line "curling-abe-memo <version>", then sorted "kind n i j value".
  static constexpr int kMemoVersion = 1;
  void save(std::ostream& out) const;
  /// Merges records from `in`. Throws CacheInvalid on a version mismatch and
  /// BadFormat on malformed records.
  void load(std::istream& in);

 private:
  const BigInt* find(const Key& key) const;
  const BigInt& remember(const Key& key, BigInt value);
  void fill_e_row(int n, int i);

  int e_cap_;
  unsigned threads_;
  std::map<Key, BigInt> memo_;
};

struct C1Entry {
  int n = 0;
  BigInt value;
  double ratio = 0;       // c(n,1) / 2^n
  std::string ratio_text;  // same, 25 significant digits
};

std::vector<C1Entry> c1_recursive(int n_max, Cn1Engine& engine);

/// c(n,1) / 2^n as decimal text with `digits` significant digits.
std::string c1_ratio_text(const BigInt& c, int n, int digits = 25);

struct Decomposition {
  IntSeq x;
  IntSeq y_or_t;
};

/// k = 1: the factorisation s = X Y X with Y a proper suffix of X and CN(X) = 1.
/// k > 1: s = X (T X)^k with T a proper suffix of s.
/// Returns nothing iff s is robust. Throws NotPrimitive / CurlMismatch.
std::optional<Decomposition> decompose_nonrobust(SeqView s, int k);

/// Every s = X Y X with Y a nonempty proper suffix of X and CN(X) = 1.
std::vector<Decomposition> xyx_factorizations(SeqView s);

/// Every s = X (T X)^k with X, T nonempty and T a proper suffix of s.
std::vector<Decomposition> xtx_factorizations(SeqView s, int k);

}  // namespace curling
