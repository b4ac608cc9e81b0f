#include "curling/cn1.hpp"

#include "curling/curl.hpp"
#include "curling/error.hpp"
#include "curling/packed.hpp"
#include "curling/parallel.hpp"
#include "curling/tables.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace curling {
namespace {

inline u128 mask(int w) noexcept { return w >= 128 ? ~u128{0} : ((u128{1} << w) - 1); }

// Square suffix with block length >= min_block. Callers pass the smallest
// block not already excluded by a square-free suffix they know about.
bool square_suffix_from(u128 bits, int len, int min_block) noexcept {
  for (int block = std::max(min_block, 1); 2 * block <= len; ++block) {
    if (((bits ^ (bits >> block)) & mask(block)) == 0) return true;
  }
  return false;
}

std::string key_name(char kind, int n, int i, int j) {
  std::string out(1, kind);
  out += "(" + std::to_string(n);
  if (kind != 'c') out += "," + std::to_string(i);
  if (kind == 'e') out += "," + std::to_string(j);
  return out + ")";
}

void check_indices(AbeKind kind, int n, int i, int j) {
  if (n < 1) throw Error(ErrorCode::IndexOutOfRange, "n must be positive");
  if (kind == AbeKind::c) return;
  if (i < 1 || i >= n) throw Error(ErrorCode::IndexOutOfRange, key_name(static_cast<char>(kind), n, i, j) + " needs 1 <= i < n");
  if (kind == AbeKind::e && (j < 1 || j >= n + i)) {
    throw Error(ErrorCode::IndexOutOfRange, key_name('e', n, i, j) + " needs 1 <= j < n + i");
  }
}

// e(n, i, j) for every j in 1..n+i-1 (index 0 unused).
std::vector<std::uint64_t> e_row_brute(int n, int i, unsigned threads) {
  const int len_u = n + i;
  const int shard_bits = std::min(n, 8);
  const int low_bits = n - shard_bits;
  const std::size_t shards = std::size_t{1} << shard_bits;
  std::vector<std::vector<std::uint64_t>> parts(shards, std::vector<std::uint64_t>(static_cast<std::size_t>(len_u)));
  for_each_shard(shards, threads, [&](std::size_t shard) {
    auto& row = parts[shard];
    const std::uint64_t base = static_cast<std::uint64_t>(shard) << low_bits;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << low_bits); ++x) {
      const u128 s = base | x;
      if (has_square_suffix(s, static_cast<std::size_t>(n))) continue;
      const u128 u = ((s & mask(i)) << n) | s;
      if (square_suffix_from(u, len_u, n / 2 + 1)) continue;
      for (int j = 1; j < len_u; ++j) {
        const u128 v = (((u << j) | (u & mask(j))) << len_u) | u;
        if (!square_suffix_from(v, 2 * len_u + j, len_u / 2 + 1)) ++row[static_cast<std::size_t>(j)];
      }
    }
  });
  std::vector<std::uint64_t> out(static_cast<std::size_t>(len_u));
  for (const auto& part : parts) {
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += part[j];
  }
  return out;
}

std::uint64_t ab_brute(AbeKind kind, int n, int i, unsigned threads) {
  const int shard_bits = std::min(n, 8);
  const int low_bits = n - shard_bits;
  const std::size_t shards = std::size_t{1} << shard_bits;
  std::vector<std::uint64_t> parts(shards);
  for_each_shard(shards, threads, [&](std::size_t shard) {
    std::uint64_t count = 0;
    const std::uint64_t base = static_cast<std::uint64_t>(shard) << low_bits;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << low_bits); ++x) {
      const u128 s = base | x;
      if (has_square_suffix(s, static_cast<std::size_t>(n))) continue;
      const u128 tail = s & mask(i);
      bool ok;
      if (kind == AbeKind::a) {
        ok = !square_suffix_from((tail << n) | s, n + i, n / 2 + 1);
      } else {
        ok = !square_suffix_from((((s << i) | tail) << n) | s, 2 * n + i, n / 2 + 1);
      }
      if (ok) ++count;
    }
    parts[shard] = count;
  });
  std::uint64_t total = 0;
  for (auto v : parts) total += v;
  return total;
}

bool equal_range(SeqView s, std::size_t a, std::size_t b, std::size_t len) {
  return std::equal(s.begin() + static_cast<std::ptrdiff_t>(a), s.begin() + static_cast<std::ptrdiff_t>(a + len),
                    s.begin() + static_cast<std::ptrdiff_t>(b));
}

IntSeq slice(SeqView s, std::size_t from, std::size_t len) {
  return IntSeq(s.begin() + static_cast<std::ptrdiff_t>(from), s.begin() + static_cast<std::ptrdiff_t>(from + len));
}

}  // namespace

std::uint64_t abe_brute(AbeKind kind, int n, int i, int j, int e_cap, unsigned threads) {
  check_indices(kind, n, i, j);
  switch (kind) {
    case AbeKind::a:
    case AbeKind::b:
      if (n > kAbBruteCap) throw Error(ErrorCode::CapExceeded, "a and b enumeration limited to n <= 24");
      return ab_brute(kind, n, i, threads);
    case AbeKind::e:
      if (n > e_cap) {
        throw Error(ErrorCode::CapExceeded, "e enumeration limited to n <= " + std::to_string(e_cap));
      }
      return e_row_brute(n, i, threads)[static_cast<std::size_t>(j)];
    case AbeKind::c: {
      if (n > kAbBruteCap) throw Error(ErrorCode::CapExceeded, "c(n,1) enumeration limited to n <= 24");
      std::uint64_t count = 0;
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        if (!has_square_suffix(x, static_cast<std::size_t>(n))) ++count;
      }
      return count;
    }
  }
  return 0;
}

Cn1Engine::Cn1Engine(int e_brute_cap, unsigned threads) : e_cap_(e_brute_cap), threads_(threads) {
  if (e_brute_cap < 1 || e_brute_cap > 30) throw Error(ErrorCode::CapExceeded, "e_brute_cap must be in 1..30");
}

const BigInt* Cn1Engine::find(const Key& key) const {
  const auto it = memo_.find(key);
  return it == memo_.end() ? nullptr : &it->second;
}

const BigInt& Cn1Engine::remember(const Key& key, BigInt value) {
  return memo_.insert_or_assign(key, std::move(value)).first->second;
}

BigInt Cn1Engine::c1(int n) {
  check_indices(AbeKind::c, n, 0, 0);
  // Iterative so deep rows do not recurse through every shorter length.
  int start = n;
  while (start > 1 && !find({'c', start - 1, 0, 0})) --start;
  for (int m = start; m <= n; ++m) {
    if (find({'c', m, 0, 0})) continue;
    BigInt v = m == 1 ? BigInt(2) : 2 * *find({'c', m - 1, 0, 0});
    if (m >= 2 && m % 2 == 0) v -= pprime1(m / 2);
    remember({'c', m, 0, 0}, std::move(v));
  }
  return *find({'c', n, 0, 0});
}

BigInt Cn1Engine::pprime1(int m) {
  if (m < 1) throw Error(ErrorCode::IndexOutOfRange, "p'(m,1) needs m >= 1");
  return m == 1 ? BigInt(2) : a(m, m - 1);
}

BigInt Cn1Engine::a(int n, int i) {
  check_indices(AbeKind::a, n, i, 0);
  if (const auto* hit = find({'a', n, i, 0})) return *hit;
  BigInt v = c1(n);
  const int lo = 3 * i < n ? (n - i + 1) / 2 : 1 + n / 3;
  for (int m = lo; m <= (n - 1) / 2; ++m) v -= b(m, n - 2 * m);
  return remember({'a', n, i, 0}, std::move(v));
}

BigInt Cn1Engine::b(int n, int i) {
  check_indices(AbeKind::b, n, i, 0);
  if (const auto* hit = find({'b', n, i, 0})) return *hit;
  BigInt v;
  if (3 * i < n) {
    v = a(n, i);
    // m = 2i would need e(i, i, .), which is empty.
    const int lo = std::max(2 * i + 1, 1 + (n + i) / 3);
    for (int m = lo; m <= (n + i - 1) / 2; ++m) v -= e(m - i, i, n + i - 2 * m);
  } else if (2 * i <= n) {
    v = a(n, i);
  } else {
    v = a(n, i) - b(i, n - i);
  }
  return remember({'b', n, i, 0}, std::move(v));
}

BigInt Cn1Engine::e(int n, int i, int j) {
  check_indices(AbeKind::e, n, i, j);
  if (const auto* hit = find({'e', n, i, j})) return *hit;
  if (n > e_cap_) {
    throw Error(ErrorCode::MissingDependency, "e(" + std::to_string(n) + "," + std::to_string(i) + "," +
                                                  std::to_string(j) + ") is needed but e_brute_cap is " +
                                                  std::to_string(e_cap_));
  }
  fill_e_row(n, i);
  return *find({'e', n, i, j});
}

void Cn1Engine::fill_e_row(int n, int i) {
  const auto row = e_row_brute(n, i, threads_);
  for (int j = 1; j < n + i; ++j) remember({'e', n, i, j}, BigInt(row[static_cast<std::size_t>(j)]));
}

void Cn1Engine::save(std::ostream& out) const {
  out << "curling-abe-memo " << kMemoVersion << '\n';
  for (const auto& [key, value] : memo_) {
    const auto& [kind, n, i, j] = key;
    out << kind << ' ' << n << ' ' << i << ' ' << j << ' ' << value.str() << '\n';
  }
}

void Cn1Engine::load(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::BadFormat, "empty memo file");
  std::istringstream header(line);
  std::string magic;
  int version = 0;
  if (!(header >> magic >> version) || magic != "curling-abe-memo") throw Error(ErrorCode::BadFormat, "not a memo file");
  if (version != kMemoVersion) throw Error(ErrorCode::CacheInvalid, "memo format version " + std::to_string(version));
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream rec(line);
    char kind = 0;
    int n = 0, i = 0, j = 0;
    std::string value;
    std::string extra;
    if (!(rec >> kind >> n >> i >> j >> value) || (rec >> extra) ||
        std::string_view("abce").find(kind) == std::string_view::npos ||
        value.find_first_not_of("-0123456789") != std::string::npos) {
      throw Error(ErrorCode::BadFormat, "bad memo record on line " + std::to_string(line_no));
    }
    remember({kind, n, i, j}, BigInt(value));
  }
}

std::string c1_ratio_text(const BigInt& c, int n, int digits) {
  using Float = boost::multiprecision::cpp_bin_float_100;
  const Float r = Float(c) / boost::multiprecision::ldexp(Float(1), n);
  return r.str(digits, std::ios_base::fixed);
}

std::vector<C1Entry> c1_recursive(int n_max, Cn1Engine& engine) {
  std::vector<C1Entry> out;
  for (int n = 1; n <= n_max; ++n) {
    C1Entry entry;
    entry.n = n;
    entry.value = engine.c1(n);
    entry.ratio_text = c1_ratio_text(entry.value, n);
    entry.ratio = std::stod(entry.ratio_text);
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<Decomposition> xyx_factorizations(SeqView s) {
  std::vector<Decomposition> out;
  const std::size_t n = s.size();
  for (std::size_t x = 1; 2 * x < n; ++x) {
    const std::size_t y = n - 2 * x;
    if (y >= x) continue;
    if (!equal_range(s, 0, n - x, x)) continue;
    if (!equal_range(s, x, x - y, y)) continue;
    const IntSeq xs = slice(s, 0, x);
    if (curling_number(xs).k != 1) continue;
    out.push_back({xs, slice(s, x, y)});
  }
  return out;
}

std::vector<Decomposition> xtx_factorizations(SeqView s, int k) {
  std::vector<Decomposition> out;
  const std::size_t n = s.size();
  const auto kk = static_cast<std::size_t>(k);
  for (std::size_t x = 1; x + kk * (x + 1) <= n; ++x) {
    if ((n - x) % kk != 0) continue;
    const std::size_t block = (n - x) / kk;
    const std::size_t t = block - x;
    if (t == 0 || t >= n) continue;
    IntSeq built = slice(s, 0, x);
    const IntSeq ts = slice(s, x, t);
    for (std::size_t r = 0; r < kk; ++r) {
      built.insert(built.end(), ts.begin(), ts.end());
      built.insert(built.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(x));
    }
    if (!std::equal(built.begin(), built.end(), s.begin())) continue;
    if (!std::equal(ts.begin(), ts.end(), s.end() - static_cast<std::ptrdiff_t>(t))) continue;
    out.push_back({slice(s, 0, x), ts});
  }
  return out;
}

std::optional<Decomposition> decompose_nonrobust(SeqView s, int k) {
  if (s.empty()) throw Error(ErrorCode::EmptyInput, "cannot decompose the empty sequence");
  if (!is_primitive(s)) throw Error(ErrorCode::NotPrimitive, format_sequence(s) + " is a proper power");
  const auto cls = classify(s);
  if (cls.k != k) {
    throw Error(ErrorCode::CurlMismatch, "curling number is " + std::to_string(cls.k) + ", not " + std::to_string(k));
  }
  if (cls.robust) return std::nullopt;
  const std::size_t n = s.size();
  IntSeq ss(s.begin(), s.end());
  ss.insert(ss.end(), s.begin(), s.end());
  if (k == 1) {
    for (std::size_t z = n / 2 + 1; z < n; ++z) {
      if (periodic_suffix_length(ss, z) < 2 * z) continue;
      const std::size_t x = n - z;
      const std::size_t y = z - x;
      Decomposition d{slice(s, 0, x), slice(s, x, y)};
      if (y >= 1 && y < x && equal_range(s, x, x - y, y) && equal_range(s, 0, n - x, x) &&
          curling_number(d.x).k == 1) {
        return d;
      }
      throw std::logic_error("square suffix of s s does not give an X Y X factorisation");
    }
    throw std::logic_error("non-robust sequence without a square suffix in s s");
  }
  const auto need = static_cast<std::size_t>(k + 1);
  for (std::size_t q = 1; need * q < 2 * n; ++q) {
    if (periodic_suffix_length(ss, q) < need * q) continue;
    const std::size_t x = n - static_cast<std::size_t>(k) * q;
    if (x == 0 || x >= q) continue;
    for (auto& d : xtx_factorizations(s, k)) {
      if (d.x.size() == x) return d;
    }
  }
  throw std::logic_error("non-robust sequence without an X (T X)^k factorisation");
}

}  // namespace curling
