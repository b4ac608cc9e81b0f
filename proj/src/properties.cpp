#include "curling/properties.hpp"

#include "curling/cn1.hpp"
#include "curling/curl.hpp"
#include "curling/error.hpp"
#include "curling/packed.hpp"
#include "curling/parallel.hpp"
#include "curling/tables.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <random>
#include <sstream>

namespace curling {
namespace {

constexpr std::size_t kMaxWitnesses = 5;

// Collects failures from any thread; keeps a handful of witnesses.
class Failures {
 public:
  void add(std::string what) {
    std::lock_guard lock(mu_);
    ++count_;
    if (witnesses_.size() < kMaxWitnesses) witnesses_.push_back(std::move(what));
  }
  std::uint64_t count() const { return count_; }

  CheckResult result(std::string name, std::string source, std::string summary) {
    CheckResult r{std::move(name), std::move(source), count_ == 0, false, std::move(summary)};
    if (count_) {
      std::sort(witnesses_.begin(), witnesses_.end());
      r.detail += ": " + std::to_string(count_) + " failure(s)";
      for (const auto& w : witnesses_) r.detail += "; " + w;
    }
    return r;
  }

 private:
  std::mutex mu_;
  std::uint64_t count_ = 0;
  std::vector<std::string> witnesses_;
};

IntSeq tail_of(SeqView s, std::size_t len) { return IntSeq(s.end() - static_cast<std::ptrdiff_t>(len), s.end()); }

IntSeq random_binary(std::mt19937_64& rng, std::size_t len) {
  IntSeq s(len);
  for (auto& v : s) v = 2 + static_cast<std::int64_t>(rng() & 1);
  return s;
}

template <class Body>
void for_each_word(int n_max, unsigned threads, Body body) {
  for (int n = 1; n <= n_max; ++n) {
    const std::uint64_t words = std::uint64_t{1} << n;
    const std::uint64_t shards = std::min<std::uint64_t>(words, 256);
    const std::uint64_t span = words / shards;
    for_each_shard(shards, threads, [&](std::size_t shard) {
      for (std::uint64_t x = shard * span; x < (shard + 1) * span; ++x) body(x, n);
    });
  }
}

std::string sweep(int n_max) { return "all binary words, n <= " + std::to_string(n_max); }

std::string cell(const char* name, std::initializer_list<int> args) {
  std::string out = name;
  out += '(';
  bool first = true;
  for (int a : args) {
    if (!first) out += ',';
    out += std::to_string(a);
    first = false;
  }
  return out + ')';
}

}  // namespace

CheckResult check_shortest_block(int n_max) {
  Failures f;
  for_each_word(n_max, 0, [&](std::uint64_t x, int n) {
    const auto s = from_bits(x, n);
    const auto cr = curling_number(s);
    const auto pi = static_cast<std::size_t>(cr.pi);
    const auto k = static_cast<std::size_t>(cr.k);
    const auto y = tail_of(s, pi);
    bool ok = periodic_suffix_length(s, pi) >= k * pi && is_primitive(y);
    const int ky = curling_number(y).k;
    ok = ok && (k == 1 ? ky == 1 : ky < cr.k);
    for (std::size_t len = 1; ok && len < pi; ++len) ok = periodic_suffix_length(s, len) < k * len;
    if (!ok) f.add(format_binary(s));
  });
  return f.result("shortest-block", "invariant", sweep(n_max));
}

CheckResult check_prefix_bound(int n_max, int random_cases, std::uint64_t seed) {
  Failures f;
  const auto* table = &default_suffix_table();
  for_each_word(n_max, 0, [&](std::uint64_t x, int n) {
    const int k = fast_curling_number(x, static_cast<std::size_t>(n), table).k;
    const auto len = static_cast<std::size_t>(n + 1);
    for (const std::uint64_t w : {x, x | (std::uint64_t{1} << n)}) {
      const int k2 = fast_curling_number(w, len, table).k;
      if (k2 != k && k2 != k + 1) f.add(format_binary(from_bits(w, n + 1)));
    }
  });
  std::mt19937_64 rng(seed);
  for (int c = 0; c < random_cases; ++c) {
    auto s = random_binary(rng, static_cast<std::size_t>(n_max + 1 + static_cast<int>(rng() % 48)));
    const int k = curling_number(SeqView(s).subspan(1)).k;
    const int k2 = curling_number(s).k;
    if (k2 != k && k2 != k + 1) f.add(format_binary(s));
  }
  return f.result("prefix-bound", "invariant",
                  sweep(n_max) + " plus " + std::to_string(random_cases) + " random longer words");
}

CheckResult check_robust_equivalence(int n_max) {
  Failures f;
  const auto* table = &default_suffix_table();
  for_each_word(n_max, 0, [&](std::uint64_t x, int n) {
    const auto s = from_bits(x, n);
    if (!is_primitive(s)) return;
    const bool squared = classify(s).robust;
    if (squared != robust_by_definition(s) || squared != classify_bits(x, n, table).robust)
      f.add(format_binary(s));
  });
  return f.result("robust-equivalence", "invariant", sweep(n_max) + ", primitive only");
}

CheckResult check_decomposition_unique(int n_max) {
  Failures f;
  std::atomic<std::uint64_t> nonrobust{0};
  for_each_word(n_max, 0, [&](std::uint64_t x, int n) {
    const auto s = from_bits(x, n);
    if (!is_primitive(s)) return;
    const auto cls = classify(s);
    const auto found = decompose_nonrobust(s, cls.k);
    const auto all = cls.k == 1 ? xyx_factorizations(s) : xtx_factorizations(s, cls.k);
    if (cls.robust) {
      if (found || !all.empty()) f.add(format_binary(s) + " robust but factors");
      return;
    }
    ++nonrobust;
    if (all.size() != 1) {
      f.add(format_binary(s) + " has " + std::to_string(all.size()) + " factorisations");
    } else if (!found || found->x != all[0].x || found->y_or_t != all[0].y_or_t) {
      f.add(format_binary(s) + " decomposition differs from the unique factorisation");
    }
  });
  return f.result("decomposition-unique", "invariant",
                  sweep(n_max) + ", " + std::to_string(nonrobust.load()) + " non-robust primitive words");
}

std::vector<CheckResult> check_abe_identities(int n_max, unsigned threads) {
  Failures complement, bijection, split, middle;
  auto a = [&](int n, int i) { return static_cast<std::int64_t>(abe_brute(AbeKind::a, n, i, 0, kDefaultEBruteCap, threads)); };
  auto b = [&](int n, int i) { return static_cast<std::int64_t>(abe_brute(AbeKind::b, n, i, 0, kDefaultEBruteCap, threads)); };
  auto e = [&](int n, int i, int j) {
    return static_cast<std::int64_t>(abe_brute(AbeKind::e, n, i, j, kDefaultEBruteCap, threads));
  };
  for (int n = 2; n <= n_max; ++n) {
    const auto c1 = static_cast<std::int64_t>(abe_brute(AbeKind::c, n, 0, 0, kDefaultEBruteCap, threads));
    for (int i = 1; i < n; ++i) {
      const auto ai = a(n, i);
      const auto bi = b(n, i);
      // C(n,1) minus A(n,i), counted through the X of S = X Y X.
      const int lo = 3 * i < n ? (n - i + 1) / 2 : 1 + n / 3;
      std::int64_t sum = 0;
      for (int m = lo; m <= (n - 1) / 2; ++m) sum += b(m, n - 2 * m);
      if (c1 - ai != sum) complement.add(cell("a", {n, i}));
      if (2 * i > n) {
        if (ai - bi != b(i, n - i)) bijection.add(cell("b", {n, i}));
      } else if (3 * i >= n) {
        if (ai != bi) middle.add(cell("b", {n, i}));
      } else {
        std::int64_t es = 0;
        for (int m = std::max(2 * i + 1, 1 + (n + i) / 3); m <= (n + i - 1) / 2; ++m) es += e(m - i, i, n + i - 2 * m);
        if (ai - bi != es) split.add(cell("b", {n, i}));
      }
    }
  }
  const std::string range = "n <= " + std::to_string(n_max) + ", all i";
  return {complement.result("abe-complement", "invariant: c(n,1) - a(n,i) = sum b(m, n-2m)", range),
          bijection.result("abe-upper-bijection", "invariant: a - b = b(i, n-i) for i > n/2", range),
          split.result("abe-lower-split", "invariant: a - b = sum e(m-i, i, n+i-2m) for i < n/3", range),
          middle.result("abe-middle-range", "invariant: b = a for n/3 <= i <= n/2", range)};
}

CheckResult check_split_dichotomy(int m_max) {
  Failures f;
  std::uint64_t instances = 0;
  for (int m = 2; m <= m_max; ++m) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
      const auto x = from_bits(bits, m);
      for (int y = 1; y < m; ++y) {
        IntSeq yx = tail_of(x, static_cast<std::size_t>(y));
        yx.insert(yx.end(), x.begin(), x.end());
        if (curling_number(yx).k != 1) continue;
        IntSeq xyx = x;
        xyx.insert(xyx.end(), yx.begin(), yx.end());
        if (curling_number(xyx).k == 1) continue;
        ++instances;
        const std::size_t len = yx.size();
        bool any = false, banded = false;
        for (std::size_t s = 1; 2 * s < len; ++s) {
          const std::size_t t = len - 2 * s;
          if (t >= s || t > static_cast<std::size_t>(m)) continue;
          if (!std::equal(yx.begin(), yx.begin() + static_cast<std::ptrdiff_t>(s), yx.end() - static_cast<std::ptrdiff_t>(s)))
            continue;
          if (curling_number(SeqView(yx).first(s)).k != 1) continue;
          any = true;
          const auto ys = static_cast<std::size_t>(y);
          if (s != ys && s <= 2 * ys) banded = true;
        }
        if (!any || banded) f.add(format_binary(x) + "/" + std::to_string(y));
      }
    }
  }
  return f.result("split-dichotomy", "invariant",
                  "|X| <= " + std::to_string(m_max) + ", " + std::to_string(instances) + " instances");
}

CheckResult check_fast_vs_reference(int n_max, int random_cases, std::uint64_t seed, unsigned threads) {
  Failures f;
  const auto* table = &default_suffix_table();
  for_each_word(n_max, threads, [&](std::uint64_t x, int n) {
    const auto s = from_bits(x, n);
    if (fast_curling_number(x, static_cast<std::size_t>(n), table) != curling_number(s)) f.add(format_binary(s));
  });
  constexpr std::size_t kBatch = 1000;
  const std::size_t batches = (static_cast<std::size_t>(random_cases) + kBatch - 1) / kBatch;
  for_each_shard(batches, threads, [&](std::size_t batch) {
    std::mt19937_64 rng(seed + batch);
    BinaryExtender ext(table);
    const std::size_t todo = std::min(kBatch, static_cast<std::size_t>(random_cases) - batch * kBatch);
    for (std::size_t c = 0; c < todo; ++c) {
      const std::size_t len = static_cast<std::size_t>(n_max) + 1 + rng() % (128 - static_cast<std::size_t>(n_max));
      const auto s = random_binary(rng, len);
      const auto packed = PackedSeq::pack(s);
      bool ok = fast_curling_number(packed, *table) == curling_number(s);
      ok = ok && ext.tail_length(packed) == extend_to_tail(s).tau;
      if (!ok) f.add(format_binary(s));
    }
  });
  return f.result("fast-vs-reference", "invariant",
                  sweep(n_max) + " plus " + std::to_string(random_cases) + " random words up to 128");
}

CheckResult check_merge_random(int count, int max_len, std::size_t horizon, std::uint64_t seed) {
  Failures f;
  std::mt19937_64 rng(seed);
  for (int c = 0; c < count; ++c) {
    const auto s = random_binary(rng, 1 + rng() % static_cast<std::size_t>(max_len));
    if (!check_merge(s, horizon)) f.add(format_binary(s));
  }
  return f.result("merge", "invariant",
                  std::to_string(count) + " random starts, length <= " + std::to_string(max_len) + ", horizon " +
                      std::to_string(horizon));
}

std::vector<CheckResult> check_table_methods(int n_max, unsigned threads) {
  const auto brute = brute_tables(n_max, threads, std::max(n_max, kDefaultBruteCap));
  Failures sums, recurrence, closed, doubling, dpq, dsqrt;
  for (int n = 1; n <= n_max; ++n) {
    if (row_sum(brute, Table::c, n) != (std::int64_t{1} << n)) sums.add(cell("row", {n}));
    if (n >= 3 && c_row_recurrence(n, brute) != brute.row(Table::c, n)) recurrence.add(cell("c-row", {n}));
    const int k0 = std::max(1, static_cast<int>(std::sqrt(static_cast<double>(n))));
    for (int k = n < 4 ? std::max(1, n - 1) : k0; k <= n; ++k) {
      try {
        if (c_sqrt_formula(n, k, brute).total != brute.get(Table::c, n, k)) closed.add(cell("c", {n, k}));
      } catch (const Error& e) {
        closed.add(cell("c", {n, k}) + " " + e.what());
      }
    }
    if (n < 2) continue;
    for (int k = 1; k <= n; ++k) {
      const auto def = d_value(n, k, DMethod::definition, brute);
      if (d_value(n, k, DMethod::pq, brute) != def) dpq.add(cell("d", {n, k}));
      if (k < k0) continue;
      try {
        if (d_value(n, k, DMethod::sqrt, brute) != def) dsqrt.add(cell("d", {n, k}));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::FormulaOutOfRange) dsqrt.add(cell("d", {n, k}) + " " + e.what());
      }
    }
  }
  const int n0 = std::min(n_max / 2, kMaxDoublingBase);
  if (n0 >= 1) {
    const auto ext = extend_tables_doubling(n0, threads);
    for (int n = n0 + 1; n <= 2 * n0; ++n)
      for (const auto t : {Table::c, Table::p})
        if (ext.row(t, n) != brute.row(t, n)) doubling.add(cell(t == Table::c ? "c-row" : "p-row", {n}));
  }
  const std::string range = "n <= " + std::to_string(n_max);
  return {sums.result("row-sums", "invariant: sum_k c(n,k) = 2^n", range),
          recurrence.result("c-recurrence", "invariant: row recurrence vs enumeration", "3 <= " + range),
          closed.result("c-closed-form", "invariant: closed form vs enumeration",
                        range + ", k >= floor(sqrt n) when n >= 4, k >= n-1 below"),
          doubling.result("doubling", "invariant: doubling from n0 vs enumeration",
                          "n0 = " + std::to_string(n0) + ", rows " + std::to_string(n0 + 1) + ".." +
                              std::to_string(2 * n0)),
          dpq.result("d-from-pq", "invariant: d via p', q vs 2c(n-1,k) - c(n,k)", range),
          dsqrt.result("d-closed-form", "invariant: d via closed form vs 2c(n-1,k) - c(n,k)",
                       range + ", where defined")};
}

}  // namespace curling
