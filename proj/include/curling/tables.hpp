#pragma once

#include "curling/packed.hpp"
#include "curling/types.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

namespace curling {

enum class Table { c, p, q, pprime, d };
enum class Provenance : std::uint8_t { none, brute, recurrence, sqrt_formula, doubling, derived };

std::string_view to_string(Table t) noexcept;
std::string_view to_string(Provenance p) noexcept;
Table parse_table(std::string_view text);

/// Triangular tables c, p, q, p', d indexed by 1 <= k <= n <= n_max, each cell
/// carrying the method that produced it. Cells are signed because d is.
class CountTables {
 public:
  explicit CountTables(int n_max = 0) { ensure_rows(n_max); }

  int n_max() const noexcept { return n_max_; }
  void ensure_rows(int n_max);

  bool has(Table t, int n, int k) const noexcept;
  /// Throws Error(MissingDependency) if the cell was never set.
  std::int64_t get(Table t, int n, int k) const;
  Provenance provenance(Table t, int n, int k) const noexcept;
  void set(Table t, int n, int k, std::int64_t value, Provenance how);

  bool row_complete(Table t, int n) const noexcept;
  /// Values for k = 1..n.
  std::vector<std::int64_t> row(Table t, int n) const;

  /// q(m,j) with q(m,j) = 0 for j <= 0 and q(m,j) = q(m,m) for j > m.
  std::int64_t q_ext(int m, int j) const;
  /// p'(m,j) with p'(m,j) = 0 for j <= 0 or j > m.
  std::int64_t pprime_ext(int m, int j) const;

 private:
  struct Cell {
    std::int64_t value = 0;
    Provenance how = Provenance::none;
  };
  static std::size_t index(int n, int k) noexcept {
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2 + static_cast<std::size_t>(k - 1);
  }
  const std::vector<Cell>& cells(Table t) const noexcept { return cells_[static_cast<int>(t)]; }
  bool in_range(int n, int k) const noexcept { return n >= 1 && n <= n_max_ && k >= 1 && k <= n; }

  int n_max_ = 0;
  std::vector<Cell> cells_[5];
};

struct Classification {
  int k = 1;
  int pi = 1;
  bool primitive = true;
  bool robust = false;  // meaningful only when primitive
};

/// Curling number, period, primitivity and robustness (no proper suffix of s s
/// curls k+1 or more times). Throws RobustnessUndefined for imprimitive s.
Classification classify(SeqView s);

/// Same test for a binary word of n <= 32 symbols; never throws, robust is
/// false for imprimitive words.
Classification classify_bits(std::uint64_t bits, int n, const SuffixCNTable* table) noexcept;

/// Robustness read straight off the definition: no proper suffix of s^(k+1)
/// has curling number >= k+1. Slow; used to cross-check classify().
bool robust_by_definition(SeqView s);

bool is_primitive(SeqView s) noexcept;

inline constexpr int kDefaultBruteCap = 24;

/// c, p, q, p' by enumerating all 2^n words for n = 1..n_max; d from c.
CountTables brute_tables(int n_max, unsigned threads = 0, int cap = kDefaultBruteCap);

/// Number of aperiodic binary words of length n (Moebius sum); n <= 62.
std::int64_t q_diagonal(int n);
int moebius(int n) noexcept;

/// c(n,1..n) from c(n-1,.) and p', q on divisors of n.
std::vector<std::int64_t> c_row_recurrence(int n, const CountTables& tables);

/// Fills c rows from..to in place, each from the row before it.
void fill_c_by_recurrence(CountTables& tables, int from, int to);

struct SqrtFormula {
  std::int64_t total = 0;
  std::map<int, std::int64_t> by_pi;
};

/// Closed form for c(n,k) split by period, valid for k >= floor(sqrt(n)).
/// Reads q(pi, k-1) from tables (the diagonal is computed if absent).
SqrtFormula c_sqrt_formula(int n, int k, const CountTables& tables);

enum class DMethod { definition, sqrt, pq };
DMethod parse_d_method(std::string_view text);

std::int64_t d_value(int n, int k, DMethod method, const CountTables& tables);

/// The diagonal pattern for the difference table in the k >= floor(sqrt(n))
/// region: q(m,m) at (mk, k-1), -q(m,m) at (mk, k) when k >= m+2, else 0.
std::int64_t d_diagonal_pattern(int n, int k);

/// If p and q are periods of s and |s| >= p + q - gcd(p,q), returns gcd(p,q)
/// (checked to be a period). Throws NotAPeriod if p or q is not a period.
std::optional<int> fine_wilf_period(SeqView s, int p, int q);

bool has_period(SeqView s, int p) noexcept;

inline constexpr int kMaxDoublingBase = 16;

/// Rows n0+1..2*n0 of c and p from the curling numbers of all length-n0 words.
/// Each longer word P M starts at CN(M) and is corrected for every period L
/// of M whose leftward continuation into P repeats more than CN(M) times.
CountTables extend_tables_doubling(int n0, unsigned threads = 0);

/// Sum over k of c(n,k), exact when the row is complete.
std::int64_t row_sum(const CountTables& tables, Table t, int n);

}  // namespace curling
