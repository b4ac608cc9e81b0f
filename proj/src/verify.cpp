#include "curling/verify.hpp"

#include "curling/cn1.hpp"
#include "curling/curl.hpp"
#include "curling/error.hpp"
#include "curling/io.hpp"
#include "curling/search.hpp"
#include "curling/tables.hpp"
#include "curling/tails.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>

#ifndef CURLING_GOLDEN_DIR
#define CURLING_GOLDEN_DIR "data/golden"
#endif

namespace curling {
namespace {

constexpr std::size_t kShownCells = 10;
constexpr const char* kLimitRatio = "0.27004339525895354325";

class Golden {
 public:
  explicit Golden(std::filesystem::path dir) : dir_(std::move(dir)) {
    const auto j = nlohmann::json::parse(read_file(dir_ / "manifest.json"));
    for (const auto& f : j.at("fixtures")) oeis_[f.at("file").get<std::string>()] = f.at("oeis").get<std::string>();
  }

  std::string source(const std::string& file) const {
    const auto it = oeis_.find(file);
    return it == oeis_.end() ? file : "OEIS " + it->second + ", " + file;
  }

  const CsvTable& load(const std::string& file) {
    auto it = cache_.find(file);
    if (it == cache_.end()) it = cache_.emplace(file, parse_csv(read_file(dir_ / file))).first;
    return it->second;
  }

  /// Rows of a (n, k, value) style file keyed by the first two columns.
  std::map<std::pair<int, int>, std::string> cells(const std::string& file) {
    const auto& t = load(file);
    std::map<std::pair<int, int>, std::string> out;
    for (const auto& r : t.rows) out[{std::stoi(r[0]), std::stoi(r[1])}] = r[2];
    return out;
  }

  /// Rows of an (n, value) style file.
  std::map<int, std::string> column(const std::string& file, const std::string& name) {
    const auto& t = load(file);
    const auto col = t.column(name);
    std::map<int, std::string> out;
    for (const auto& r : t.rows) out[std::stoi(r[0])] = r[col];
    return out;
  }

 private:
  std::filesystem::path dir_;
  std::map<std::string, std::string> oeis_;
  std::map<std::string, CsvTable> cache_;
};

class Diff {
 public:
  template <class A, class B>
  void expect(const std::string& cell, const A& want, const B& got) {
    ++compared_;
    const auto w = text(want), g = text(got);
    if (w != g) bad_.push_back(cell + ": expected " + w + ", got " + g);
  }
  void fail(std::string what) { bad_.push_back(std::move(what)); }

  CheckResult result(std::string name, std::string source) const {
    CheckResult r{std::move(name), std::move(source), bad_.empty(), false, std::to_string(compared_) + " cells"};
    if (!bad_.empty()) {
      r.detail += ", " + std::to_string(bad_.size()) + " mismatched";
      for (std::size_t i = 0; i < bad_.size() && i < kShownCells; ++i) r.detail += "; " + bad_[i];
    }
    return r;
  }

 private:
  static std::string text(const std::string& s) { return s; }
  static std::string text(const char* s) { return s; }
  template <class T>
  static std::string text(const T& v) {
    if constexpr (std::is_same_v<T, BigInt>) return v.str();
    else return std::to_string(v);
  }

  std::size_t compared_ = 0;
  std::vector<std::string> bad_;
};

std::string at(const std::string& file, int n) { return file + " n=" + std::to_string(n); }
std::string at(const std::string& file, int n, int k) {
  return file + " (" + std::to_string(n) + "," + std::to_string(k) + ")";
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

class Runner {
 public:
  explicit Runner(const std::function<void(const CheckResult&)>& cb) : cb_(cb) {}

  template <class Fn>
  void check(const std::string& name, const std::string& source, Fn fn) {
    CheckResult r;
    try {
      r = fn();
    } catch (const std::exception& e) {
      r = CheckResult{name, source, false, false, e.what()};
    }
    add(std::move(r));
  }

  template <class Fn>
  void many(const std::string& name, Fn fn) {
    try {
      for (auto& r : fn()) add(std::move(r));
    } catch (const std::exception& e) {
      add(CheckResult{name, "invariant", false, false, e.what()});
    }
  }

  void add(CheckResult r) {
    if (cb_) cb_(r);
    report_.checks.push_back(std::move(r));
  }

  VerifyReport take() { return std::move(report_); }

 private:
  const std::function<void(const CheckResult&)>& cb_;
  VerifyReport report_;
};

void paper_tables(Runner& run, Golden& golden, const VerifyOptions& o) {
  SearchOptions so;
  so.threads = o.threads;
  so.step_limit = o.step_limit;
  so.exhaustive_cap = static_cast<std::size_t>(std::max(o.omega_max, 26));
  std::vector<SearchReport> series;

  run.check("omega", golden.source("omega.csv"), [&] {
    series = omega_series(o.omega_max, SearchMode::exhaustive, so);
    Diff d;
    for (const auto& [n, v] : golden.column("omega.csv", "omega"))
      if (n <= o.omega_max) d.expect(at("omega.csv", n), v, series[static_cast<std::size_t>(n - 1)].omega);
    return d.result("omega", golden.source("omega.csv"));
  });

  run.check("jump-points", golden.source("achievers.csv"), [&] {
    if (series.empty()) throw Error(ErrorCode::MissingDependency, "omega series unavailable");
    Diff d;
    std::string want, got;
    for (const auto& [n, s] : golden.column("achievers.csv", "sequence"))
      if (n <= o.omega_max) want += (want.empty() ? "" : ",") + std::to_string(n);
    for (int n : jump_points(series)) got += (got.empty() ? "" : ",") + std::to_string(n);
    d.expect("jump points <= " + std::to_string(o.omega_max), want, got);
    return d.result("jump-points", golden.source("achievers.csv"));
  });

  run.check("achievers", golden.source("achievers.csv"), [&] {
    if (series.empty()) throw Error(ErrorCode::MissingDependency, "omega series unavailable");
    Diff d;
    for (const auto& [n, s] : golden.column("achievers.csv", "sequence")) {
      if (n > o.omega_max) continue;
      const auto& r = series[static_cast<std::size_t>(n - 1)];
      d.expect(at("achievers.csv", n), s, format_binary(r.best));
      if (n >= 2) d.expect(at("achievers.csv", n) + " achiever count", 1, r.achiever_count);
    }
    return d.result("achievers", golden.source("achievers.csv"));
  });

  run.check("achiever-shape", "observed property of jump-point achievers", [&] {
    CheckResult r{"achiever-shape", "observed property of jump-point achievers", true, false,
                  "starts with 2, no 33, no fourth power"};
    for (int n : jump_points(series)) {
      const auto& best = series[static_cast<std::size_t>(n - 1)].best;
      const auto p = start_properties(best);
      if (!(p.begins_with_two && p.avoids_33 && p.avoids_fourth_powers)) {
        r.pass = false;
        r.finding = true;
        r.detail += "; witness " + format_binary(best);
      }
    }
    return r;
  });

  run.check("construct-larger", golden.source("achievers.csv"), [&] {
    Diff d;
    const auto rows = golden.column("achievers.csv", "sequence");
    const auto it = rows.find(48);
    if (it == rows.end()) throw Error(ErrorCode::MissingDependency, "achievers.csv has no n=48 row");
    const auto c = construct_larger(parse_binary(it->second), o.step_limit);
    d.expect("start length", 227, c.start_len);
    d.expect("total length", 596, c.total_len);
    d.expect("tail", 369, c.tail);
    return d.result("construct-larger", golden.source("achievers.csv") + " n=48");
  });

  CountTables tables;
  run.check("count-tables", "enumeration", [&] {
    tables = brute_tables(o.table_max, o.threads);
    return CheckResult{"count-tables", "enumeration", true, false, "rows 1.." + std::to_string(o.table_max)};
  });
  const std::pair<const char*, std::string> files[] = {
      {"c", "c.csv"}, {"p", "p.csv"}, {"q", "q.csv"}, {"pprime", "pprime.csv"}, {"nonrobust", "nonrobust.csv"}, {"d", "d.csv"}};
  for (const auto& [name, file] : files) {
    run.check(name, golden.source(file), [&, name = std::string(name), file = file] {
      Diff d;
      for (const auto& [nk, v] : golden.cells(file)) {
        const auto [n, k] = nk;
        if (n > o.table_max) continue;
        std::int64_t got = 0;
        if (name == "nonrobust") got = tables.get(Table::p, n, k) - tables.get(Table::pprime, n, k);
        else if (name == "d") got = d_value(n, k, DMethod::definition, tables);
        else got = tables.get(parse_table(name), n, k);
        d.expect(at(file, n, k), v, got);
      }
      return d.result(name, golden.source(file));
    });
  }

  TailOptions to;
  to.threads = o.threads;
  to.step_limit = o.step_limit;
  to.cap = std::max({o.mean_n, o.tail_max + 1, 22});
  auto tail_check = [&](const std::string& name, const std::string& file) {
    run.check(name, golden.source(file), [&, name, file] {
      Diff d;
      std::map<int, std::map<int, std::string>> want;
      for (const auto& [ni, v] : golden.cells(file)) want[ni.first][ni.second] = v;
      for (const auto& [n, row] : want) {
        const auto computed = tail_row(n, to);
        const int top = std::max<int>(static_cast<int>(computed.counts.size()) - 1, row.rbegin()->first);
        for (int i = 0; i <= top; ++i) {
          const auto got = static_cast<std::size_t>(i) < computed.counts.size() ? computed.counts[static_cast<std::size_t>(i)] : 0;
          const auto w = row.find(i);
          d.expect(at(file, n, i), w == row.end() ? std::string("absent") : w->second,
                   w == row.end() && got == 0 ? std::string("absent") : std::to_string(got));
        }
      }
      return d.result(name, golden.source(file));
    });
  };
  tail_check("tails-small", "tails_small.csv");
  tail_check("tails-22", "tails_22.csv");

  run.check("mean-tail", "bound on the mean tail length", [&] {
    const auto mean = mean_tail(o.mean_n, to);
    const double m = mean.convert_to<double>();
    CheckResult r{"mean-tail", "bound on the mean tail length", m >= 2.60 && m <= 2.80, false, ""};
    r.detail = "mean(" + std::to_string(o.mean_n) + ") = " + std::to_string(m) + ", want [2.60, 2.80]";
    return r;
  });

  std::vector<PrefixScan> scans;
  run.check("rotten-counts", golden.source("rotten_counts.csv"), [&] {
    for (int n = 1; n <= o.tail_max; ++n) scans.push_back(prefix_scan(n, to, 64));
    Diff d;
    for (const auto& [n, v] : golden.column("rotten_counts.csv", "count"))
      if (n <= o.tail_max) d.expect(at("rotten_counts.csv", n), v, scans[static_cast<std::size_t>(n - 1)].rotten.rotten_count);
    return d.result("rotten-counts", golden.source("rotten_counts.csv"));
  });

  run.check("rotten-first", golden.source("rotten_first.csv"), [&] {
    std::vector<std::string> got;
    for (const auto& s : scans)
      for (const auto& e : s.rotten.examples) got.push_back(format_binary(e));
    Diff d;
    for (const auto& [idx, v] : golden.column("rotten_first.csv", "sequence")) {
      const auto i = static_cast<std::size_t>(idx - 1);
      d.expect(at("rotten_first.csv", idx), v, i < got.size() ? got[i] : std::string("none"));
    }
    return d.result("rotten-first", golden.source("rotten_first.csv"));
  });

  run.check("prefix-increase-counts", golden.source("prefix_increase_counts.csv"), [&] {
    Diff d;
    for (const auto& [n, v] : golden.column("prefix_increase_counts.csv", "count"))
      if (n <= static_cast<int>(scans.size()))
        d.expect(at("prefix_increase_counts.csv", n), v, scans[static_cast<std::size_t>(n - 1)].increase.count);
    return d.result("prefix-increase-counts", golden.source("prefix_increase_counts.csv"));
  });

  run.check("doubly-rotten", "conjecture: no start is doubly rotten", [&] {
    CheckResult r{"doubly-rotten", "conjecture: no start is doubly rotten", true, false,
                  "n <= " + std::to_string(scans.size())};
    for (const auto& s : scans)
      for (const auto& w : s.rotten.doubly_rotten) {
        r.pass = false;
        r.finding = true;
        r.detail += "; witness " + format_binary(w);
      }
    return r;
  });

  run.check("both-prefix-increase", "conjecture: no start lengthens under both prefixes", [&] {
    CheckResult r{"both-prefix-increase", "conjecture: no start lengthens under both prefixes", true, false,
                  "n <= " + std::to_string(scans.size())};
    for (const auto& s : scans)
      for (const auto& w : s.increase.both_examples) {
        r.pass = false;
        r.finding = true;
        r.detail += "; witness " + format_binary(w);
      }
    return r;
  });

  run.check("essential-counts", golden.source("essential_counts.csv"), [&] {
    Diff d;
    for (const auto& [n, v] : golden.column("essential_counts.csv", "count")) {
      if (n > o.tail_max) continue;
      const auto got = essential_first_scan(n, to);
      d.expect(at("essential_counts.csv", n), v, got);
      if (is_prime(n)) d.expect("prime length " + std::to_string(n), 2, got);
    }
    return d.result("essential-counts", golden.source("essential_counts.csv"));
  });

  run.check("gijswijt", "OEIS A090822", [&] {
    Diff d;
    const auto g = gijswijt_prefix(220);
    d.expect("first 9 terms", "1,1,2,1,1,2,2,2,3", format_sequence(SeqView(g).first(9)));
    const auto four = std::find(g.begin(), g.end(), 4);
    d.expect("first 4 at term", 220, four == g.end() ? 0 : static_cast<long>(four - g.begin()) + 1);
    return d.result("gijswijt", "OEIS A090822");
  });

  run.check("c1-recursion", golden.source("c.csv"), [&] {
    Cn1Engine engine(o.e_cap, o.threads);
    const auto entries = c1_recursive(o.c1_max, engine);
    Diff d;
    for (const auto& [nk, v] : golden.cells("c.csv"))
      if (nk.second == 1 && nk.first <= o.c1_max) d.expect(at("c.csv", nk.first, 1), v, entries[static_cast<std::size_t>(nk.first - 1)].value);
    if (o.c1_max >= 60) {
      const double r60 = entries[59].ratio;
      if (std::abs(r60 - std::stod(kLimitRatio)) > 1e-8)
        d.fail("r(60) = " + entries[59].ratio_text + ", limit " + kLimitRatio);
    }
    for (const auto& e : entries)
      if (e.n >= 8 && !(e.ratio > 0.27)) d.fail("c(" + std::to_string(e.n) + ",1) <= 0.27 * 2^n");
    return d.result("c1-recursion", golden.source("c.csv") + " column k=1, limit ratio");
  });
}

void theorems(Runner& run, const VerifyOptions& o) {
  const int small = std::min(o.sweep_max, 14);
  run.check("shortest-block", "invariant", [&] { return check_shortest_block(small); });
  run.check("prefix-bound", "invariant", [&] { return check_prefix_bound(o.sweep_max); });
  run.check("robust-equivalence", "invariant", [&] { return check_robust_equivalence(o.sweep_max); });
  run.check("decomposition-unique", "invariant", [&] { return check_decomposition_unique(small); });
  run.many("abe-identities", [&] { return check_abe_identities(small, o.threads); });
  run.check("split-dichotomy", "invariant", [&] { return check_split_dichotomy(std::min(o.sweep_max, 10)); });
  run.check("fast-vs-reference", "invariant", [&] { return check_fast_vs_reference(o.fast_max, 100000, 7, o.threads); });
  run.check("merge", "invariant", [&] { return check_merge_random(200, 12, 100); });
  run.many("table-methods", [&] { return check_table_methods(o.brute_max, o.threads); });
  run.check("c1-vs-enumeration", "invariant", [&] {
    Cn1Engine engine(o.e_cap, o.threads);
    Diff d;
    const int top = std::min(o.brute_max, kAbBruteCap);
    for (int n = 1; n <= top; ++n)
      d.expect("c(" + std::to_string(n) + ",1)", BigInt(abe_brute(AbeKind::c, n, 0, 0, o.e_cap, o.threads)), engine.c1(n));
    return d.result("c1-vs-enumeration", "invariant: recursion vs enumeration, n <= " + std::to_string(top));
  });
}

}  // namespace

Suite parse_suite(std::string_view text) {
  if (text == "paper-tables") return Suite::paper_tables;
  if (text == "theorems") return Suite::theorems;
  if (text == "all") return Suite::all;
  throw Error(ErrorCode::BadFormat, "unknown suite '" + std::string(text) + "'");
}

std::string_view to_string(Suite s) noexcept {
  switch (s) {
    case Suite::paper_tables: return "paper-tables";
    case Suite::theorems: return "theorems";
    case Suite::all: return "all";
  }
  return "?";
}

std::filesystem::path default_golden_dir() { return CURLING_GOLDEN_DIR; }

std::size_t VerifyReport::failures() const noexcept {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.pass; }));
}

VerifyReport verify(Suite suite, const VerifyOptions& options, const std::function<void(const CheckResult&)>& on_check) {
  Runner run(on_check);
  if (suite != Suite::theorems) {
    std::optional<Golden> golden;
    run.check("golden-manifest", "manifest.json", [&] {
      golden.emplace(options.golden_dir);
      return CheckResult{"golden-manifest", "manifest.json", true, false, options.golden_dir.string()};
    });
    if (golden) paper_tables(run, *golden, options);
  }
  if (suite != Suite::paper_tables) theorems(run, options);
  return run.take();
}

std::string format_check(const CheckResult& r) {
  const char* tag = r.pass ? "PASS" : r.finding ? "FINDING" : "FAIL";
  return std::string(tag) + " " + r.name + " [" + r.source + "] " + r.detail;
}

}  // namespace curling
