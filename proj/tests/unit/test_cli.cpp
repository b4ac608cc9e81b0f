#include "curling/cli.hpp"
#include "curling/io.hpp"
#include "curling/verify.hpp"

#include "helpers.hpp"

#include <filesystem>
#include <random>
#include <sstream>

using namespace curling;
namespace fs = std::filesystem;

namespace {

struct Run {
  int rc;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int rc = run(args, out, err);
  return {rc, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("curling-cli-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("plain outputs") {
  auto r = cli({"curl", "--seq", "0,1,2,2,1,2,2,1,2,2"});
  CHECK(r.rc == kExitOk);
  CHECK(r.out == "k=3 pi=3\n");
  r = cli({"omega", "--n", "4", "--mode", "exhaustive"});
  CHECK(r.rc == kExitOk);
  CHECK(r.out.find("omega=4 best=2323") != std::string::npos);
  r = cli({"tails", "--n", "6"});
  CHECK(r.out.find("t: 20 18 12 6 7 0 0 0 1") != std::string::npos);
  r = cli({"cn1", "--n", "12"});
  CHECK(r.out.rfind("n=12 c=1124 ", 0) == 0);
  CHECK(cli({"gijswijt", "--n", "5"}).out == "1,1,2,1,1\n");
}

TEST_CASE("exit codes") {
  CHECK(cli({}).rc == kExitUsage);
  CHECK(cli({"curl"}).rc == kExitUsage);
  CHECK(cli({"nonsense"}).rc == kExitUsage);
  CHECK(cli({"--format", "json", "tails", "--n", "4"}).rc == kExitUsage);
  CHECK(cli({"--format", "bfile", "curl", "--seq", "2,2"}).rc == kExitUsage);
  auto r = cli({"curl", "--seq", "2,x"});
  CHECK(r.rc == kExitDomain);
  CHECK_FALSE(r.err.empty());
  CHECK(cli({"omega", "--n", "40", "--mode", "exhaustive"}).rc == kExitDomain);
  CHECK(cli({"--step-limit", "5", "extend", "--seq", "2,2,3,2,2,2,3,2,3"}).rc == kExitDomain);
  CHECK(cli({"--help"}).rc == kExitOk);
}

TEST_CASE("every b-file output parses back") {
  const std::vector<std::vector<std::string>> runs = {
      {"omega", "--n-max", "8", "--mode", "exhaustive"},
      {"jumps", "--n-max", "10", "--mode", "exhaustive"},
      {"tables", "--table", "c", "--n", "6"},
      {"tables", "--table", "d", "--n", "8"},
      {"cn1", "--n-max", "30"},
      {"tails", "--n", "8"},
      {"rotten", "--n-max", "8"},
      {"essential", "--n-max", "8"},
      {"extend", "--seq", "2,3,2,3"},
      {"gijswijt", "--n", "40"},
  };
  for (const auto& args : runs) {
    std::vector<std::string> full{"--format", "bfile"};
    full.insert(full.end(), args.begin(), args.end());
    const auto r = cli(full);
    INFO(args.front());
    REQUIRE(r.rc == kExitOk);
    const auto b = parse_bfile(r.out);
    CHECK_FALSE(b.values.empty());
    CHECK(to_bfile(b) == r.out);
  }
}

TEST_CASE("csv output") {
  const auto r = cli({"--format", "csv", "tables", "--table", "c", "--n-max", "4"});
  REQUIRE(r.rc == kExitOk);
  const auto t = parse_csv(r.out);
  CHECK(t.header == std::vector<std::string>{"n", "k", "value"});
  CHECK(t.rows.size() == 10);
  CHECK(t.rows.back() == std::vector<std::string>{"4", "4", "2"});
}

TEST_CASE("cached results are identical") {
  TempDir tmp;
  const std::string dir = tmp.path.string();
  const std::vector<std::string> args{"--cache-dir", dir, "--threads", "1", "omega", "--n", "12", "--mode", "exhaustive"};
  const auto first = cli(args);
  REQUIRE(first.rc == kExitOk);
  CHECK(std::distance(fs::directory_iterator(tmp.path), fs::directory_iterator{}) >= 2);
  const auto second = cli(args);
  CHECK(second.out == first.out);
  auto threads = args;
  threads[3] = "0";
  CHECK(cli(threads).out == first.out);
  const auto uncached = cli({"--threads", "0", "omega", "--n", "12", "--mode", "exhaustive"});
  CHECK(uncached.out == first.out);

  for (const auto& e : fs::directory_iterator(tmp.path))
    if (e.path().extension() == ".dat") write_file_atomic(e.path(), "garbage");
  CHECK(cli(args).out == first.out);
}

TEST_CASE("a corrupted golden cell is named") {
  TempDir tmp;
  const auto golden = tmp.path / "golden";
  fs::copy(default_golden_dir(), golden);
  auto table = parse_csv(read_file(golden / "c.csv"));
  const auto n = table.column("n"), k = table.column("k"), v = table.column("value");
  bool changed = false;
  for (auto& row : table.rows) {
    if (row[n] == "8" && row[k] == "3") {
      REQUIRE(row[v] == "38");
      row[v] = "39";
      changed = true;
    }
  }
  REQUIRE(changed);
  write_file_atomic(golden / "c.csv", to_csv(table));

  VerifyOptions o;
  o.golden_dir = golden;
  o.omega_max = 10;
  o.table_max = 10;
  o.tail_max = 12;
  o.mean_n = 16;
  o.c1_max = 60;
  const auto report = verify(Suite::paper_tables, o);
  REQUIRE(report.failures() >= 1);
  std::vector<std::string> failed;
  for (const auto& c : report.checks)
    if (!c.pass && !c.finding) failed.push_back(c.name);
  CHECK(failed == std::vector<std::string>{"c"});
  for (const auto& c : report.checks) {
    if (c.name != "c") continue;
    CHECK(c.detail.find("c.csv (8,3): expected 39, got 38") != std::string::npos);
  }
}

}
