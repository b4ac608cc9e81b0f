#include "curling/cli.hpp"

#include "curling/cache.hpp"
#include "curling/cn1.hpp"
#include "curling/curl.hpp"
#include "curling/error.hpp"
#include "curling/io.hpp"
#include "curling/search.hpp"
#include "curling/tables.hpp"
#include "curling/tails.hpp"
#include "curling/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <iostream>
#include <sstream>

namespace curling {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { plain, csv, bfile };

struct Args {
  std::string format = "plain";
  std::string cache_dir;
  unsigned threads = 0;
  std::size_t step_limit = kDefaultStepLimit;

  std::string seq;
  int n = 0;
  int n_max = 0;
  int k = 0;
  int i = 0;
  int j = 0;
  std::string mode = "exhaustive";
  int block_bits = 8;
  std::size_t exhaustive_cap = 26;
  bool construct = false;

  std::string table = "c";
  std::string method = "brute";
  std::string d_method = "definition";
  int n0 = 0;
  int brute_cap = kDefaultBruteCap;

  std::string kind;
  int e_cap = kDefaultEBruteCap;

  int tail_cap = 24;
  int examples = 0;

  std::string suite = "all";
  std::string golden_dir;
  VerifyOptions verify;
};

Format format_of(const Args& a) {
  if (a.format == "csv") return Format::csv;
  if (a.format == "bfile") return Format::bfile;
  return Format::plain;
}

std::string fixed(double v, int digits) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, digits);
  return std::string(buf, r.ptr);
}

/// r to `digits` decimals, rounded half up; r >= 0.
std::string decimal(const BigRational& r, int digits) {
  BigInt scale = 1;
  for (int d = 0; d < digits; ++d) scale *= 10;
  const BigInt num = boost::multiprecision::numerator(r), den = boost::multiprecision::denominator(r);
  BigInt q = (2 * num * scale + den) / (2 * den);
  std::string s = q.str();
  if (digits == 0) return s;
  if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  return s;
}

std::string rational_text(const BigRational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

void need(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

int range_top(const Args& a) {
  need(a.n > 0 || a.n_max > 0, "give --n or --n-max");
  return a.n_max > 0 ? a.n_max : a.n;
}

int range_bottom(const Args& a) { return a.n_max > 0 ? 1 : a.n; }

BFile bfile_of(std::int64_t offset, std::vector<std::string> values) { return BFile{offset, std::move(values)}; }

std::string cmd_curl(const Args& a) {
  need(!a.seq.empty(), "--seq is required");
  const auto r = curling_number(parse_sequence(a.seq));
  switch (format_of(a)) {
    case Format::plain: return "k=" + std::to_string(r.k) + " pi=" + std::to_string(r.pi) + "\n";
    case Format::csv: return to_csv({{"k", "pi"}, {{std::to_string(r.k), std::to_string(r.pi)}}});
    case Format::bfile: throw UsageError("curl has no b-file form");
  }
  return {};
}

std::string cmd_extend(const Args& a) {
  need(!a.seq.empty(), "--seq is required");
  const auto s0 = parse_sequence(a.seq);
  if (a.construct) {
    const auto c = construct_larger(s0, a.step_limit);
    if (format_of(a) == Format::csv)
      return to_csv({{"start_len", "total_len", "tail"},
                     {{std::to_string(c.start_len), std::to_string(c.total_len), std::to_string(c.tail)}}});
    need(format_of(a) == Format::plain, "--construct has no b-file form");
    return "start_len=" + std::to_string(c.start_len) + " total_len=" + std::to_string(c.total_len) +
           " tail=" + std::to_string(c.tail) + "\n";
  }
  const auto r = extend_to_tail(s0, a.step_limit);
  const IntSeq appended(r.extension.begin() + static_cast<std::ptrdiff_t>(s0.size()), r.extension.end());
  switch (format_of(a)) {
    case Format::plain: return "tau=" + std::to_string(r.tau) + "\nextension=" + format_sequence(r.extension) + "\n";
    case Format::csv: return to_csv({{"tau", "extension"}, {{std::to_string(r.tau), format_sequence(r.extension)}}});
    case Format::bfile: {
      std::vector<std::string> v;
      for (auto x : appended) v.push_back(std::to_string(x));
      return to_bfile(bfile_of(static_cast<std::int64_t>(s0.size()) + 1, std::move(v)));
    }
  }
  return {};
}

std::string cmd_gijswijt(const Args& a) {
  need(a.n > 0, "--n is required");
  const auto g = gijswijt_prefix(static_cast<std::size_t>(a.n));
  switch (format_of(a)) {
    case Format::plain: return format_sequence(g) + "\n";
    case Format::csv: {
      CsvTable t{{"n", "value"}, {}};
      for (std::size_t i = 0; i < g.size(); ++i) t.rows.push_back({std::to_string(i + 1), std::to_string(g[i])});
      return to_csv(t);
    }
    case Format::bfile: {
      std::vector<std::string> v;
      for (auto x : g) v.push_back(std::to_string(x));
      return to_bfile(bfile_of(1, std::move(v)));
    }
  }
  return {};
}

SearchOptions search_options(const Args& a) {
  SearchOptions so;
  so.threads = a.threads;
  so.step_limit = a.step_limit;
  so.block_bits = a.block_bits;
  so.exhaustive_cap = a.exhaustive_cap;
  return so;
}

std::string cmd_omega(const Args& a) {
  const int top = range_top(a);
  const auto mode = parse_search_mode(a.mode);
  const auto so = search_options(a);
  std::vector<SearchReport> reports;
  for (int n = range_bottom(a); n <= top; ++n) reports.push_back(omega_search(n, mode, so));
  switch (format_of(a)) {
    case Format::plain: {
      std::string out;
      for (const auto& r : reports) {
        if (reports.size() > 1) out += "n=" + std::to_string(r.n) + " ";
        out += "omega=" + std::to_string(r.omega) + " best=" + format_binary(r.best);
        out += reports.size() > 1 ? " " : "\n";
        out += "achievers=" + std::to_string(r.achiever_count) + " mode=" + std::string(to_string(r.mode)) + "\n";
      }
      return out;
    }
    case Format::csv: {
      CsvTable t{{"n", "omega", "best", "achievers", "mode"}, {}};
      for (const auto& r : reports)
        t.rows.push_back({std::to_string(r.n), std::to_string(r.omega), format_binary(r.best),
                          std::to_string(r.achiever_count), std::string(to_string(r.mode))});
      return to_csv(t);
    }
    case Format::bfile: {
      std::vector<std::string> v;
      for (const auto& r : reports) v.push_back(std::to_string(r.omega));
      return to_bfile(bfile_of(reports.front().n, std::move(v)));
    }
  }
  return {};
}

std::string cmd_jumps(const Args& a) {
  need(a.n_max > 0, "--n-max is required");
  const auto series = omega_series(a.n_max, parse_search_mode(a.mode), search_options(a));
  const auto jumps = jump_points(series);
  switch (format_of(a)) {
    case Format::plain: {
      std::string out = "jumps=";
      for (std::size_t i = 0; i < jumps.size(); ++i) out += (i ? "," : "") + std::to_string(jumps[i]);
      out += "\n";
      for (int n : jumps) {
        const auto& r = series[static_cast<std::size_t>(n - 1)];
        out += "n=" + std::to_string(n) + " omega=" + std::to_string(r.omega) + " best=" + format_binary(r.best) + "\n";
      }
      return out;
    }
    case Format::csv: {
      CsvTable t{{"n", "omega", "best"}, {}};
      for (int n : jumps) {
        const auto& r = series[static_cast<std::size_t>(n - 1)];
        t.rows.push_back({std::to_string(n), std::to_string(r.omega), format_binary(r.best)});
      }
      return to_csv(t);
    }
    case Format::bfile: {
      std::vector<std::string> v;
      for (int n : jumps) v.push_back(std::to_string(n));
      return to_bfile(bfile_of(1, std::move(v)));
    }
  }
  return {};
}

CountTables build_tables(const Args& a, int n_max) {
  if (a.method == "brute") return brute_tables(n_max, a.threads, a.brute_cap);
  if (a.method == "recurrence") {
    auto t = brute_tables(std::max(2, n_max / 2), a.threads, a.brute_cap);
    fill_c_by_recurrence(t, t.n_max() + 1, n_max);
    return t;
  }
  if (a.method == "doubling") {
    const int n0 = a.n0 > 0 ? a.n0 : (n_max + 1) / 2;
    need(2 * n0 >= n_max, "--n-max exceeds twice --n0");
    auto t = brute_tables(n0, a.threads, a.brute_cap);
    const auto ext = extend_tables_doubling(n0, a.threads);
    t.ensure_rows(n_max);
    for (int n = n0 + 1; n <= n_max; ++n)
      for (const auto tab : {Table::c, Table::p})
        for (int k = 1; k <= n; ++k) t.set(tab, n, k, ext.get(tab, n, k), Provenance::doubling);
    return t;
  }
  throw UsageError("unknown --method '" + a.method + "' (brute, recurrence, doubling)");
}

std::string cmd_tables(const Args& a) {
  const int top = range_top(a);
  const auto table = parse_table(a.table);
  const auto tables = build_tables(a, top);
  const auto dm = parse_d_method(a.d_method);
  auto value = [&](int n, int k) {
    return table == Table::d ? d_value(n, k, dm, tables) : tables.get(table, n, k);
  };
  const int first = table == Table::d ? std::max(2, range_bottom(a)) : range_bottom(a);
  if (a.k > 0) {
    need(a.n > 0, "--k needs --n");
    const auto v = value(a.n, a.k);
    if (format_of(a) == Format::csv)
      return to_csv({{"n", "k", "value"}, {{std::to_string(a.n), std::to_string(a.k), std::to_string(v)}}});
    return a.table + "(" + std::to_string(a.n) + "," + std::to_string(a.k) + ")=" + std::to_string(v) + "\n";
  }
  switch (format_of(a)) {
    case Format::plain: {
      std::string out;
      for (int n = first; n <= top; ++n) {
        out += std::to_string(n) + ":";
        for (int k = 1; k <= n; ++k) out += " " + std::to_string(value(n, k));
        out += "\n";
      }
      return out;
    }
    case Format::csv: {
      CsvTable t{{"n", "k", "value"}, {}};
      for (int n = first; n <= top; ++n)
        for (int k = 1; k <= n; ++k) t.rows.push_back({std::to_string(n), std::to_string(k), std::to_string(value(n, k))});
      return to_csv(t);
    }
    case Format::bfile: {
      std::vector<std::string> v;
      for (int n = first; n <= top; ++n)
        for (int k = 1; k <= n; ++k) v.push_back(std::to_string(value(n, k)));
      return to_bfile(bfile_of(1, std::move(v)));
    }
  }
  return {};
}

std::string cmd_cn1(const Args& a) {
  Cn1Engine engine(a.e_cap, a.threads);
  std::optional<Cache> cache;
  const std::string memo_params = "e_cap=" + std::to_string(a.e_cap);
  if (!a.cache_dir.empty()) {
    cache.emplace(a.cache_dir);
    if (auto text = cache->load("abe-memo", memo_params)) {
      std::istringstream in(*text);
      engine.load(in);
    }
  }
  auto keep = [&] {
    if (!cache) return;
    std::ostringstream memo;
    engine.save(memo);
    cache->store("abe-memo", memo_params, memo.str());
  };
  if (!a.kind.empty()) {
    need(a.kind.size() == 1 && std::string("abe").find(a.kind) != std::string::npos, "--kind is a, b or e");
    need(a.n > 0 && a.i > 0, "--kind needs --n and --i");
    BigInt v;
    std::string label = a.kind + "(" + std::to_string(a.n) + "," + std::to_string(a.i);
    if (a.kind == "a") v = engine.a(a.n, a.i);
    else if (a.kind == "b") v = engine.b(a.n, a.i);
    else {
      v = engine.e(a.n, a.i, a.j);
      label += "," + std::to_string(a.j);
    }
    keep();
    return label + ")=" + v.str() + "\n";
  }
  const int top = range_top(a);
  const auto entries = c1_recursive(top, engine);
  keep();
  const int first = range_bottom(a);
  switch (format_of(a)) {
    case Format::plain: {
      std::string out;
      for (const auto& e : entries)
        if (e.n >= first) out += "n=" + std::to_string(e.n) + " c=" + e.value.str() + " ratio=" + e.ratio_text + "\n";
      return out;
    }
    case Format::csv: {
      CsvTable t{{"n", "c1", "ratio"}, {}};
      for (const auto& e : entries)
        if (e.n >= first) t.rows.push_back({std::to_string(e.n), e.value.str(), e.ratio_text});
      return to_csv(t);
    }
    case Format::bfile: {
      std::vector<std::string> v;
      for (const auto& e : entries)
        if (e.n >= first) v.push_back(e.value.str());
      return to_bfile(bfile_of(first, std::move(v)));
    }
  }
  return {};
}

TailOptions tail_options(const Args& a) {
  TailOptions to;
  to.threads = a.threads;
  to.cap = a.tail_cap;
  to.step_limit = a.step_limit;
  return to;
}

std::string cmd_tails(const Args& a) {
  const int top = range_top(a);
  const int first = range_bottom(a);
  const auto to = tail_options(a);
  std::vector<TailRow> rows;
  for (int n = first; n <= top; ++n) rows.push_back(tail_row(n, to));
  switch (format_of(a)) {
    case Format::plain: {
      std::string out;
      for (const auto& r : rows) {
        out += "n=" + std::to_string(r.n) + " max=" + std::to_string(r.max_tail()) + " mean=" + decimal(r.mean, 6) +
               " exact=" + rational_text(r.mean) + "\n";
        out += "t:";
        for (auto c : r.counts) out += " " + std::to_string(c);
        out += "\n";
      }
      return out;
    }
    case Format::csv: {
      CsvTable t{{"n", "i", "t"}, {}};
      for (const auto& r : rows)
        for (std::size_t i = 0; i < r.counts.size(); ++i)
          t.rows.push_back({std::to_string(r.n), std::to_string(i), std::to_string(r.counts[i])});
      return to_csv(t);
    }
    case Format::bfile: {
      need(rows.size() == 1, "b-file output is per fixed n; use --n");
      std::vector<std::string> v;
      for (auto c : rows.front().counts) v.push_back(std::to_string(c));
      return to_bfile(bfile_of(0, std::move(v)));
    }
  }
  return {};
}

std::string cmd_rotten(const Args& a) {
  const int top = range_top(a);
  const int first = range_bottom(a);
  const auto to = tail_options(a);
  std::vector<PrefixScan> scans;
  for (int n = first; n <= top; ++n) scans.push_back(prefix_scan(n, to, static_cast<std::size_t>(std::max(a.examples, 0))));
  switch (format_of(a)) {
    case Format::plain: {
      std::string out;
      for (const auto& s : scans) {
        out += "n=" + std::to_string(s.rotten.n) + " rotten=" + std::to_string(s.rotten.rotten_count) +
               " doubly_rotten=" + std::to_string(s.rotten.doubly_rotten_count) +
               " prefix_increase=" + std::to_string(s.increase.count) +
               " both_increase=" + std::to_string(s.increase.both_count) + "\n";
        for (const auto& e : s.rotten.examples) out += "  " + format_binary(e) + "\n";
      }
      return out;
    }
    case Format::csv: {
      CsvTable t{{"n", "rotten", "doubly_rotten", "prefix_increase", "both_increase"}, {}};
      for (const auto& s : scans)
        t.rows.push_back({std::to_string(s.rotten.n), std::to_string(s.rotten.rotten_count),
                          std::to_string(s.rotten.doubly_rotten_count), std::to_string(s.increase.count),
                          std::to_string(s.increase.both_count)});
      return to_csv(t);
    }
    case Format::bfile: {
      std::vector<std::string> v;
      for (const auto& s : scans) v.push_back(std::to_string(s.rotten.rotten_count));
      return to_bfile(bfile_of(first, std::move(v)));
    }
  }
  return {};
}

std::string cmd_essential(const Args& a) {
  const int top = range_top(a);
  const int first = range_bottom(a);
  const auto to = tail_options(a);
  std::vector<std::string> counts;
  for (int n = first; n <= top; ++n) counts.push_back(std::to_string(essential_first_scan(n, to)));
  switch (format_of(a)) {
    case Format::plain: {
      std::string out;
      for (int n = first; n <= top; ++n) out += "n=" + std::to_string(n) + " count=" + counts[static_cast<std::size_t>(n - first)] + "\n";
      return out;
    }
    case Format::csv: {
      CsvTable t{{"n", "count"}, {}};
      for (int n = first; n <= top; ++n) t.rows.push_back({std::to_string(n), counts[static_cast<std::size_t>(n - first)]});
      return to_csv(t);
    }
    case Format::bfile: return to_bfile(bfile_of(first, std::move(counts)));
  }
  return {};
}

std::string cmd_theta(const Args& a) {
  const int top = range_top(a);
  const int first = range_bottom(a);
  const auto tables = brute_tables(top, a.threads, a.brute_cap);
  std::vector<ThetaStats> stats;
  for (int n = first; n <= top; ++n) stats.push_back(theta_stats(n, tables));
  switch (format_of(a)) {
    case Format::plain: {
      std::string out;
      for (const auto& s : stats) {
        out += "n=" + std::to_string(s.n) + " markov=" + fixed(s.markov_estimate, 4) + " theta=";
        bool comma = false;
        for (const auto& [k, v] : s.theta) {
          out += (comma ? "," : "") + fixed(v, 6);
          comma = true;
        }
        out += "\n";
      }
      return out;
    }
    case Format::csv: {
      CsvTable t{{"n", "k", "theta", "markov_estimate"}, {}};
      for (const auto& s : stats)
        for (const auto& [k, v] : s.theta)
          t.rows.push_back({std::to_string(s.n), std::to_string(k), fixed(v, 12), fixed(s.markov_estimate, 6)});
      return to_csv(t);
    }
    case Format::bfile: throw UsageError("theta has no b-file form");
  }
  return {};
}

int cmd_verify(const Args& a, std::ostream& out) {
  need(format_of(a) != Format::bfile, "verify has no b-file form");
  auto opts = a.verify;
  opts.threads = a.threads;
  opts.step_limit = a.step_limit;
  opts.e_cap = a.e_cap;
  if (!a.golden_dir.empty()) opts.golden_dir = a.golden_dir;
  const bool csv = format_of(a) == Format::csv;
  if (csv) out << "status,name,source,detail\n";
  const auto report = verify(parse_suite(a.suite), opts, [&](const CheckResult& r) {
    if (csv) {
      CsvTable row{{r.pass ? "PASS" : r.finding ? "FINDING" : "FAIL", r.name, r.source, r.detail}, {}};
      out << to_csv(row);
    } else {
      out << format_check(r) << "\n";
    }
    out.flush();
  });
  if (!csv)
    out << "summary: " << report.checks.size() << " checks, " << report.failures() << " failed\n";
  return report.ok() ? kExitOk : kExitDomain;
}

/// Everything that determines a subcommand's output, minus threads and the
/// cache location.
std::string cache_params(const CLI::App& sub, const Args& a) {
  std::vector<std::string> parts;
  for (const auto* opt : sub.get_options()) {
    if (opt->get_name() == "--help" || opt->count() == 0) continue;
    std::string joined;
    for (const auto& r : opt->results()) joined += (joined.empty() ? "" : "|") + r;
    parts.push_back(opt->get_name() + "=" + joined);
  }
  std::sort(parts.begin(), parts.end());
  std::string out = sub.get_name() + ";format=" + a.format + ";step-limit=" + std::to_string(a.step_limit);
  for (const auto& p : parts) out += ";" + p;
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Args a;
  CLI::App app{"Curling numbers, tail lengths and their counting tables", "curling"};
  app.require_subcommand(1);
  app.add_option("--format", a.format, "plain, csv or bfile")->check(CLI::IsMember({"plain", "csv", "bfile"}));
  app.add_option("--cache-dir", a.cache_dir, "reuse results stored here");
  app.add_option("--threads", a.threads, "worker threads, 0 for all cores");
  app.add_option("--step-limit", a.step_limit, "cap on extension steps");

  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };
  auto* curl = sub("curl", "curling number and period of a sequence");
  curl->add_option("--seq", a.seq, "comma separated integers or a 2/3 string");
  auto* extend = sub("extend", "append curling numbers until the tail ends");
  extend->add_option("--seq", a.seq, "starting sequence");
  extend->add_flag("--construct", a.construct, "bootstrap a longer start from this one");
  auto* gij = sub("gijswijt", "prefix of Gijswijt's sequence");
  gij->add_option("--n", a.n, "number of terms");
  auto* omega = sub("omega", "maximal tail length over starts of length n");
  auto* jumps = sub("jumps", "lengths where the maximal tail grows");
  for (auto* s : {omega, jumps}) {
    s->add_option("--mode", a.mode, "exhaustive or pruned");
    s->add_option("--block-bits", a.block_bits, "block width for pruned search");
    s->add_option("--exhaustive-cap", a.exhaustive_cap, "largest n for exhaustive search");
    s->add_option("--n-max", a.n_max, "largest n");
  }
  omega->add_option("--n", a.n, "length");
  auto* tables = sub("tables", "counting tables c, p, q, pprime, d");
  tables->add_option("--table", a.table, "c, p, q, pprime or d");
  tables->add_option("--n", a.n, "single row (with --k, single cell)");
  tables->add_option("--n-max", a.n_max, "rows 1..n-max");
  tables->add_option("--k", a.k, "column");
  tables->add_option("--method", a.method, "brute, recurrence or doubling");
  tables->add_option("--n0", a.n0, "base length for doubling");
  tables->add_option("--d-method", a.d_method, "definition, sqrt or pq");
  tables->add_option("--brute-cap", a.brute_cap, "largest n for enumeration");
  auto* cn1 = sub("cn1", "c(n,1) by recursion; single a, b, e values");
  cn1->add_option("--n", a.n, "length");
  cn1->add_option("--n-max", a.n_max, "largest n");
  cn1->add_option("--kind", a.kind, "a, b or e");
  cn1->add_option("--i", a.i, "suffix length");
  cn1->add_option("--j", a.j, "e's third index");
  cn1->add_option("--e-cap", a.e_cap, "largest n for enumerated e");
  auto* tails = sub("tails", "tail length distribution t(n,i)");
  auto* rotten = sub("rotten", "starts whose tail shrinks under a one-symbol prefix");
  auto* essential = sub("essential", "words whose curling number needs the first term");
  for (auto* s : {tails, rotten, essential}) {
    s->add_option("--n", a.n, "length");
    s->add_option("--n-max", a.n_max, "largest n");
    s->add_option("--tail-cap", a.tail_cap, "largest n for enumeration");
  }
  rotten->add_option("--examples", a.examples, "list this many rotten starts per n");
  auto* theta = sub("theta", "curling number distribution and the Markov estimate");
  theta->add_option("--n", a.n, "length");
  theta->add_option("--n-max", a.n_max, "largest n");
  theta->add_option("--brute-cap", a.brute_cap, "largest n for enumeration");
  auto* ver = sub("verify", "replay the golden tables and invariant sweeps");
  ver->add_option("--suite", a.suite, "paper-tables, theorems or all")
      ->check(CLI::IsMember({"paper-tables", "theorems", "all"}));
  ver->add_option("--golden-dir", a.golden_dir, "fixture directory");
  ver->add_option("--omega-max", a.verify.omega_max, "exhaustive search range");
  ver->add_option("--table-max", a.verify.table_max, "table rows compared");
  ver->add_option("--tail-max", a.verify.tail_max, "rotten and essential range");
  ver->add_option("--mean-n", a.verify.mean_n, "length for the mean tail bound");
  ver->add_option("--c1-max", a.verify.c1_max, "recursive c(n,1) range");
  ver->add_option("--sweep-max", a.verify.sweep_max, "exhaustive invariant sweeps");
  ver->add_option("--fast-max", a.verify.fast_max, "fast-path comparison range");
  ver->add_option("--brute-max", a.verify.brute_max, "method agreement range");
  ver->add_option("--e-cap", a.e_cap, "largest n for enumerated e");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  try {
    if (name == "verify") return cmd_verify(a, out);
    const std::string params = cache_params(*chosen, a);
    std::optional<Cache> cache;
    if (!a.cache_dir.empty()) {
      cache.emplace(a.cache_dir);
      if (auto hit = cache->load(name, params)) {
        out << *hit;
        return kExitOk;
      }
    }
    std::string payload;
    if (name == "curl") payload = cmd_curl(a);
    else if (name == "extend") payload = cmd_extend(a);
    else if (name == "gijswijt") payload = cmd_gijswijt(a);
    else if (name == "omega") payload = cmd_omega(a);
    else if (name == "jumps") payload = cmd_jumps(a);
    else if (name == "tables") payload = cmd_tables(a);
    else if (name == "cn1") payload = cmd_cn1(a);
    else if (name == "tails") payload = cmd_tails(a);
    else if (name == "rotten") payload = cmd_rotten(a);
    else if (name == "essential") payload = cmd_essential(a);
    else if (name == "theta") payload = cmd_theta(a);
    if (cache) cache->store(name, params, payload);
    out << payload;
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitDomain;
  }
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + std::min(argc, 1), argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace curling
