#include "curling/tables.hpp"

#include "curling/curl.hpp"
#include "curling/error.hpp"
#include "curling/parallel.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace curling {
namespace {

constexpr std::uint64_t mask64(int w) noexcept {
  return w >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << w) - 1;
}

int isqrt(int n) noexcept {
  int r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::int64_t pow2(int e) {
  if (e < 0 || e > 62) throw Error(ErrorCode::CapExceeded, "2^" + std::to_string(e) + " does not fit a table cell");
  return std::int64_t{1} << e;
}

bool primitive_bits(std::uint64_t bits, int n) noexcept {
  for (int d = 1; d < n; ++d) {
    if (n % d == 0 && ((bits ^ (bits >> d)) & mask64(n - d)) == 0) return false;
  }
  return true;
}

std::string cell_name(Table t, int n, int k) {
  return std::string(to_string(t)) + "(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

}  // namespace

std::string_view to_string(Table t) noexcept {
  switch (t) {
    case Table::c: return "c";
    case Table::p: return "p";
    case Table::q: return "q";
    case Table::pprime: return "pprime";
    case Table::d: return "d";
  }
  return "?";
}

std::string_view to_string(Provenance p) noexcept {
  switch (p) {
    case Provenance::none: return "none";
    case Provenance::brute: return "brute";
    case Provenance::recurrence: return "recurrence";
    case Provenance::sqrt_formula: return "sqrt-formula";
    case Provenance::doubling: return "doubling";
    case Provenance::derived: return "derived";
  }
  return "?";
}

Table parse_table(std::string_view text) {
  if (text == "c") return Table::c;
  if (text == "p") return Table::p;
  if (text == "q") return Table::q;
  if (text == "pprime" || text == "p'") return Table::pprime;
  if (text == "d") return Table::d;
  throw Error(ErrorCode::BadFormat, "unknown table '" + std::string(text) + "'");
}

void CountTables::ensure_rows(int n_max) {
  if (n_max <= n_max_) return;
  n_max_ = n_max;
  const std::size_t size = static_cast<std::size_t>(n_max) * static_cast<std::size_t>(n_max + 1) / 2;
  for (auto& c : cells_) c.resize(size);
}

bool CountTables::has(Table t, int n, int k) const noexcept {
  return in_range(n, k) && cells(t)[index(n, k)].how != Provenance::none;
}

std::int64_t CountTables::get(Table t, int n, int k) const {
  if (!has(t, n, k)) throw Error(ErrorCode::MissingDependency, "table cell " + cell_name(t, n, k) + " is not available");
  return cells(t)[index(n, k)].value;
}

Provenance CountTables::provenance(Table t, int n, int k) const noexcept {
  return in_range(n, k) ? cells(t)[index(n, k)].how : Provenance::none;
}

void CountTables::set(Table t, int n, int k, std::int64_t value, Provenance how) {
  if (n < 1 || k < 1 || k > n) throw Error(ErrorCode::IndexOutOfRange, "no table cell " + cell_name(t, n, k));
  ensure_rows(n);
  cells_[static_cast<int>(t)][index(n, k)] = {value, how};
}

bool CountTables::row_complete(Table t, int n) const noexcept {
  if (n < 1 || n > n_max_) return false;
  for (int k = 1; k <= n; ++k) {
    if (!has(t, n, k)) return false;
  }
  return true;
}

std::vector<std::int64_t> CountTables::row(Table t, int n) const {
  std::vector<std::int64_t> out;
  for (int k = 1; k <= n; ++k) out.push_back(get(t, n, k));
  return out;
}

std::int64_t CountTables::q_ext(int m, int j) const {
  if (j <= 0) return 0;
  if (j >= m) return has(Table::q, m, m) ? get(Table::q, m, m) : q_diagonal(m);
  return get(Table::q, m, j);
}

std::int64_t CountTables::pprime_ext(int m, int j) const {
  if (j <= 0 || j > m) return 0;
  return get(Table::pprime, m, j);
}

bool has_period(SeqView s, int p) noexcept {
  if (p <= 0) return false;
  for (std::size_t i = 0; i + static_cast<std::size_t>(p) < s.size(); ++i) {
    if (s[i] != s[i + static_cast<std::size_t>(p)]) return false;
  }
  return true;
}

bool is_primitive(SeqView s) noexcept {
  const int n = static_cast<int>(s.size());
  for (int d = 1; d < n; ++d) {
    if (n % d == 0 && has_period(s, d)) return false;
  }
  return true;
}

Classification classify(SeqView s) {
  if (s.empty()) throw Error(ErrorCode::EmptyInput, "cannot classify the empty sequence");
  const auto cr = curling_number(s);
  Classification out{cr.k, cr.pi, is_primitive(s), false};
  if (!out.primitive) {
    throw Error(ErrorCode::RobustnessUndefined, "robustness is defined only for primitive sequences; " +
                                                    format_sequence(s) + " is a proper power");
  }
  IntSeq ss(s.begin(), s.end());
  ss.insert(ss.end(), s.begin(), s.end());
  const std::size_t proper = ss.size() - 1;
  const auto need = static_cast<std::size_t>(cr.k + 1);
  out.robust = true;
  for (std::size_t len = 1; need * len <= proper; ++len) {
    if (std::min(periodic_suffix_length(ss, len), proper) >= need * len) {
      out.robust = false;
      break;
    }
  }
  return out;
}

bool robust_by_definition(SeqView s) {
  if (s.empty()) throw Error(ErrorCode::EmptyInput, "cannot classify the empty sequence");
  const auto need = static_cast<std::size_t>(curling_number(s).k + 1);
  IntSeq power;
  for (std::size_t i = 0; i < need; ++i) power.insert(power.end(), s.begin(), s.end());
  const std::size_t proper = power.size() - 1;
  for (std::size_t len = 1; need * len <= proper; ++len) {
    if (std::min(periodic_suffix_length(power, len), proper) >= need * len) return false;
  }
  return true;
}

Classification classify_bits(std::uint64_t bits, int n, const SuffixCNTable* table) noexcept {
  bits &= mask64(n);
  const auto cr = fast_curling_number(bits, static_cast<std::size_t>(n), table);
  Classification out{cr.k, cr.pi, primitive_bits(bits, n), false};
  if (!out.primitive) return out;
  const std::uint64_t y = (bits << n) | bits;
  const int two_n = 2 * n;
  const int need = cr.k + 1;
  out.robust = true;
  for (int len = 1; need * len < two_n; ++len) {
    const std::uint64_t diff = (y ^ (y >> len)) & mask64(two_n - len);
    const int matched = diff ? std::countr_zero(diff) : two_n - len;
    if (matched + len >= need * len) {
      out.robust = false;
      break;
    }
  }
  return out;
}

CountTables brute_tables(int n_max, unsigned threads, int cap) {
  if (n_max < 1) throw Error(ErrorCode::IndexOutOfRange, "brute tables need n_max >= 1");
  if (n_max > cap || n_max > 32) {
    throw Error(ErrorCode::CapExceeded, "brute enumeration limited to n <= " + std::to_string(std::min(cap, 32)));
  }
  const auto& table = default_suffix_table();
  CountTables out(n_max);
  for (int n = 1; n <= n_max; ++n) {
    struct Counts {
      std::vector<std::int64_t> c, p, pp;
    };
    const int shard_bits = std::min(n, 8);
    const int low_bits = n - shard_bits;
    const std::size_t shards = std::size_t{1} << shard_bits;
    std::vector<Counts> parts(shards);
    for_each_shard(shards, threads, [&](std::size_t shard) {
      Counts local{std::vector<std::int64_t>(static_cast<std::size_t>(n) + 1),
                   std::vector<std::int64_t>(static_cast<std::size_t>(n) + 1),
                   std::vector<std::int64_t>(static_cast<std::size_t>(n) + 1)};
      const std::uint64_t base = static_cast<std::uint64_t>(shard) << low_bits;
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << low_bits); ++x) {
        const auto cl = classify_bits(base | x, n, &table);
        const auto k = static_cast<std::size_t>(cl.k);
        ++local.c[k];
        if (cl.primitive) {
          ++local.p[k];
          if (cl.robust) ++local.pp[k];
        }
      }
      parts[shard] = std::move(local);
    });
    std::int64_t cumulative = 0;
    for (int k = 1; k <= n; ++k) {
      std::int64_t c = 0, p = 0, pp = 0;
      for (const auto& part : parts) {
        c += part.c[static_cast<std::size_t>(k)];
        p += part.p[static_cast<std::size_t>(k)];
        pp += part.pp[static_cast<std::size_t>(k)];
      }
      cumulative += p;
      out.set(Table::c, n, k, c, Provenance::brute);
      out.set(Table::p, n, k, p, Provenance::brute);
      out.set(Table::pprime, n, k, pp, Provenance::brute);
      out.set(Table::q, n, k, cumulative, Provenance::brute);
    }
    if (n >= 2) {
      for (int k = 1; k <= n; ++k) out.set(Table::d, n, k, d_value(n, k, DMethod::definition, out), Provenance::derived);
    }
  }
  return out;
}

int moebius(int n) noexcept {
  if (n < 1) return 0;
  int result = 1;
  for (int f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      n /= f;
      if (n % f == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

std::int64_t q_diagonal(int n) {
  if (n < 1) throw Error(ErrorCode::IndexOutOfRange, "q_diagonal needs n >= 1");
  std::int64_t total = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) total += moebius(n / d) * pow2(d);
  }
  return total;
}

std::vector<std::int64_t> c_row_recurrence(int n, const CountTables& tables) {
  if (n < 1) throw Error(ErrorCode::IndexOutOfRange, "row index must be positive");
  std::vector<std::int64_t> row(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    std::int64_t v;
    if (n == k || n == k + 1) {
      v = 2;
    } else {
      v = 2 * tables.get(Table::c, n - 1, k);
      if (n % k == 0) v += tables.pprime_ext(n / k, k - 1) + tables.q_ext(n / k, k - 2);
      if (n % (k + 1) == 0) v -= tables.pprime_ext(n / (k + 1), k) + tables.q_ext(n / (k + 1), k - 1);
    }
    row[static_cast<std::size_t>(k - 1)] = v;
  }
  return row;
}

void fill_c_by_recurrence(CountTables& tables, int from, int to) {
  tables.ensure_rows(to);
  for (int n = std::max(from, 1); n <= to; ++n) {
    const auto row = c_row_recurrence(n, tables);
    for (int k = 1; k <= n; ++k) tables.set(Table::c, n, k, row[static_cast<std::size_t>(k - 1)], Provenance::recurrence);
  }
}

SqrtFormula c_sqrt_formula(int n, int k, const CountTables& tables) {
  if (n < 1 || k < 1) throw Error(ErrorCode::FormulaOutOfRange, "formula needs n, k >= 1");
  SqrtFormula out;
  if (k > n) return out;
  if (k == n || k == n - 1) {
    out.total = 2;
    out.by_pi[1] = 2;
    return out;
  }
  if (n < 4 || k < isqrt(n)) {
    throw Error(ErrorCode::FormulaOutOfRange, "closed form needs n >= 4 and k >= floor(sqrt(n)); got n=" +
                                                  std::to_string(n) + " k=" + std::to_string(k));
  }
  for (int pi = 1; pi <= n / (k + 1); ++pi) {
    out.by_pi[pi] = pow2(n - (k + 1) * pi) * (pow2(pi) - 1) * tables.q_ext(pi, k - 1);
  }
  for (int pi = (n + 1 + k) / (k + 1); pi <= n / k; ++pi) out.by_pi[pi] = pow2(n - k * pi) * tables.q_ext(pi, k - 1);
  for (const auto& [pi, v] : out.by_pi) out.total += v;
  return out;
}

DMethod parse_d_method(std::string_view text) {
  if (text == "definition") return DMethod::definition;
  if (text == "sqrt") return DMethod::sqrt;
  if (text == "pq") return DMethod::pq;
  throw Error(ErrorCode::BadFormat, "unknown d method '" + std::string(text) + "'");
}

std::int64_t d_value(int n, int k, DMethod method, const CountTables& tables) {
  if (n < 2 || k < 1 || k > n) {
    throw Error(ErrorCode::FormulaOutOfRange, "d(n,k) needs n >= 2 and 1 <= k <= n");
  }
  switch (method) {
    case DMethod::definition:
      return (k <= n - 1 ? 2 * tables.get(Table::c, n - 1, k) : 0) - tables.get(Table::c, n, k);
    case DMethod::sqrt:
      if (k < isqrt(n)) throw Error(ErrorCode::FormulaOutOfRange, "sqrt method needs k >= floor(sqrt(n))");
      return 2 * c_sqrt_formula(n - 1, k, tables).total - c_sqrt_formula(n, k, tables).total;
    case DMethod::pq: {
      std::int64_t v = 0;
      if (n % (k + 1) == 0) v += tables.pprime_ext(n / (k + 1), k) + tables.q_ext(n / (k + 1), k - 1);
      if (n % k == 0) v -= tables.pprime_ext(n / k, k - 1) + tables.q_ext(n / k, k - 2);
      return v;
    }
  }
  return 0;
}

std::int64_t d_diagonal_pattern(int n, int k) {
  std::int64_t v = 0;
  if (n % (k + 1) == 0 && k + 1 >= n / (k + 1) + 2) v += q_diagonal(n / (k + 1));
  if (n % k == 0 && k >= n / k + 2) v -= q_diagonal(n / k);
  return v;
}

std::optional<int> fine_wilf_period(SeqView s, int p, int q) {
  if (!has_period(s, p) || !has_period(s, q)) {
    throw Error(ErrorCode::NotAPeriod, std::to_string(has_period(s, p) ? q : p) + " is not a period of " +
                                           format_sequence(s));
  }
  const int g = std::gcd(p, q);
  if (static_cast<int>(s.size()) < p + q - g) return std::nullopt;
  if (!has_period(s, g)) throw std::logic_error("periodicity lemma violated for " + format_sequence(s));
  return g;
}

namespace {

// Counts CN over all words P M (|P| = 1..n0) for one fixed suffix M.
class DoublingWorker {
 public:
  DoublingWorker(int n0, std::vector<std::vector<std::int64_t>>& counts) : n0_(n0), counts_(counts) {}

  void run(std::uint64_t m) {
    m_ = m;
    l_ = fast_curling_number(m, static_cast<std::size_t>(n0_), nullptr).k;
    std::vector<int> periods;
    for (int len = 1; len <= n0_; ++len) {
      if (((m ^ (m >> len)) & mask64(n0_ - len)) == 0) periods.push_back(len);
    }
    for (h_ = 1; h_ <= n0_; ++h_) {
      const int n = n0_ + h_;
      targets_.clear();
      for (int len : periods) {
        if ((l_ + 1) * len <= n) targets_.push_back(len);
      }
      if (targets_.empty()) {
        counts_[static_cast<std::size_t>(h_)][static_cast<std::size_t>(l_)] += std::int64_t{1} << h_;
        continue;
      }
      descend(0, (std::uint32_t{1} << targets_.size()) - 1, l_, 0, 0);
    }
  }

 private:
  // Symbol forced at distance t (1-based) to the left of M by period len.
  int forced(int len, int t) const noexcept {
    return static_cast<int>((m_ >> (n0_ - len + (t - 1) % len)) & 1u);
  }

  int repeats(int len, int matched) const noexcept { return (n0_ + matched) / len; }

  void descend(int t, std::uint32_t active, int best, std::uint32_t winners, std::uint64_t p_bits) {
    if (active == 0 || t == h_) {
      for (std::uint32_t a = active; a; a &= a - 1) {
        const int i = std::countr_zero(a);
        const int r = repeats(targets_[static_cast<std::size_t>(i)], t);
        best = std::max(best, r);
        if (r > l_) winners |= std::uint32_t{1} << i;
      }
      if (std::popcount(winners) >= 2 && l_ >= 2) collision(winners, t, p_bits);
      counts_[static_cast<std::size_t>(h_)][static_cast<std::size_t>(best)] += std::int64_t{1} << (h_ - t);
      return;
    }
    for (int sym = 0; sym <= 1; ++sym) {
      std::uint32_t next = 0;
      int b = best;
      std::uint32_t w = winners;
      for (std::uint32_t a = active; a; a &= a - 1) {
        const int i = std::countr_zero(a);
        const int len = targets_[static_cast<std::size_t>(i)];
        if (forced(len, t + 1) == sym) {
          next |= std::uint32_t{1} << i;
        } else {
          const int r = repeats(len, t);
          b = std::max(b, r);
          if (r > l_) w |= std::uint32_t{1} << i;
        }
      }
      descend(t + 1, next, b, w, p_bits | (static_cast<std::uint64_t>(sym) << t));
    }
  }

  // Two periods both beat CN(M) >= 2: the periodicity lemma says this cannot happen.
  [[noreturn]] void collision(std::uint32_t winners, int t, std::uint64_t p_bits) const {
    const int a = targets_[static_cast<std::size_t>(std::countr_zero(winners))];
    winners &= winners - 1;
    const int b = targets_[static_cast<std::size_t>(std::countr_zero(winners))];
    const int w_len = std::min((l_ + 1) * a, n0_ + t);
    IntSeq w(static_cast<std::size_t>(w_len));
    for (int i = 0; i < w_len; ++i) {
      const int dist = w_len - 1 - i;
      const int bit = dist < n0_ ? static_cast<int>((m_ >> dist) & 1u) : static_cast<int>((p_bits >> (dist - n0_)) & 1u);
      w[static_cast<std::size_t>(i)] = 2 + bit;
    }
    const auto g = b < w_len ? fine_wilf_period(w, a, b) : std::nullopt;
    throw std::logic_error("two periods " + std::to_string(a) + " and " + std::to_string(b) +
                           " both extend a suffix with curling number " + std::to_string(l_) +
                           (g ? " (common period " + std::to_string(*g) + ")" : ""));
  }

  int n0_;
  std::vector<std::vector<std::int64_t>>& counts_;
  std::uint64_t m_ = 0;
  int l_ = 1;
  int h_ = 0;
  std::vector<int> targets_;
};

}  // namespace

CountTables extend_tables_doubling(int n0, unsigned threads) {
  if (n0 < 1 || n0 > kMaxDoublingBase) {
    throw Error(ErrorCode::CapExceeded, "doubling base must be in 1.." + std::to_string(kMaxDoublingBase));
  }
  using Grid = std::vector<std::vector<std::int64_t>>;
  const std::size_t width = 2 * static_cast<std::size_t>(n0) + 1;
  const Grid empty(static_cast<std::size_t>(n0) + 1, std::vector<std::int64_t>(width));
  const std::size_t words = std::size_t{1} << n0;
  const std::size_t shards = std::min<std::size_t>(words, 256);
  std::vector<Grid> parts(shards, empty);
  for_each_shard(shards, threads, [&](std::size_t shard) {
    DoublingWorker worker(n0, parts[shard]);
    for (std::size_t m = shard; m < words; m += shards) worker.run(m);
  });
  Grid counts = empty;
  for (const auto& part : parts) {
    for (std::size_t h = 0; h < counts.size(); ++h) {
      for (std::size_t k = 0; k < width; ++k) counts[h][k] += part[h][k];
    }
  }

  CountTables out(2 * n0);
  for (int h = 1; h <= n0; ++h) {
    const int n = n0 + h;
    std::vector<std::int64_t> imprimitive(static_cast<std::size_t>(n) + 1);
    for (int m = 1; m < n; ++m) {
      if (n % m != 0) continue;
      for (std::uint64_t root = 0; root < (std::uint64_t{1} << m); ++root) {
        if (!primitive_bits(root, m)) continue;
        u128 word = 0;
        for (int rep = 0; rep < n / m; ++rep) word = (word << m) | root;
        ++imprimitive[static_cast<std::size_t>(fast_curling_number(word, static_cast<std::size_t>(n), nullptr).k)];
      }
    }
    for (int k = 1; k <= n; ++k) {
      const auto c = counts[static_cast<std::size_t>(h)][static_cast<std::size_t>(k)];
      out.set(Table::c, n, k, c, Provenance::doubling);
      out.set(Table::p, n, k, c - imprimitive[static_cast<std::size_t>(k)], Provenance::doubling);
    }
  }
  return out;
}

std::int64_t row_sum(const CountTables& tables, Table t, int n) {
  std::int64_t total = 0;
  for (int k = 1; k <= n; ++k) total += tables.get(t, n, k);
  return total;
}

}  // namespace curling
