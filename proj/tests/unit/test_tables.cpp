#include "curling/curl.hpp"
#include "curling/tables.hpp"

#include "helpers.hpp"

using namespace curling;
using testing::S;

namespace {
const CountTables& brute16() {
  static const CountTables t = brute_tables(16);
  return t;
}
}  // namespace

TEST_SUITE("tables") {

TEST_CASE("classification") {
  auto c = classify(S({3, 2, 2, 3, 2}));
  CHECK(c.k == 1);
  CHECK(c.primitive);
  CHECK_FALSE(c.robust);
  c = classify(S({3, 2, 2, 3, 2, 2, 3, 2}));
  CHECK(c.k == 2);
  CHECK_FALSE(c.robust);
  c = classify(S({2, 3}));
  CHECK(c.robust);
  CHECK_CODE(classify(S({2, 3, 2, 3})), ErrorCode::RobustnessUndefined);
  CHECK_FALSE(robust_by_definition(S({3, 2, 2, 3, 2})));
  CHECK(robust_by_definition(S({2, 3})));
}

TEST_CASE("bit classification matches the sequence form") {
  const auto& table = default_suffix_table();
  for (int n = 1; n <= 12; ++n) {
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      const auto s = from_bits(x, n);
      const auto b = classify_bits(x, n, &table);
      REQUIRE(b.primitive == is_primitive(s));
      if (!b.primitive) continue;
      const auto c = classify(s);
      REQUIRE(b.k == c.k);
      REQUIRE(b.pi == c.pi);
      REQUIRE(b.robust == c.robust);
    }
  }
}

TEST_CASE("enumerated rows") {
  const auto& t = brute16();
  CHECK(t.row(Table::c, 8) == std::vector<std::int64_t>{74, 110, 38, 18, 8, 4, 2, 2});
  CHECK(t.get(Table::c, 12, 2) == 1762);
  CHECK(t.get(Table::pprime, 12, 1) == 1114);
  CHECK(t.get(Table::q, 6, 6) == 54);
  for (int n = 1; n <= 16; ++n) CHECK(row_sum(t, Table::c, n) == (std::int64_t{1} << n));
  CHECK(t.provenance(Table::c, 3, 1) == Provenance::brute);
  CHECK_CODE(CountTables(4).get(Table::c, 2, 1), ErrorCode::MissingDependency);
  CHECK_CODE(brute_tables(30), ErrorCode::CapExceeded);
}

TEST_CASE("aperiodic word counts") {
  CHECK(q_diagonal(1) == 2);
  CHECK(q_diagonal(6) == 54);
  CHECK(q_diagonal(12) == 4020);
  for (int n = 1; n <= 16; ++n) CHECK(q_diagonal(n) == brute16().get(Table::q, n, n));
  CHECK(moebius(1) == 1);
  CHECK(moebius(6) == 1);
  CHECK(moebius(12) == 0);
  CHECK(moebius(7) == -1);
}

TEST_CASE("row recurrence") {
  const auto& t = brute16();
  for (int n = 3; n <= 16; ++n) CHECK(c_row_recurrence(n, t) == t.row(Table::c, n));
  CHECK(c_row_recurrence(12, t)[1] == 1762);
  // prime rows double
  for (int k = 1; k <= 5; ++k) CHECK(t.get(Table::c, 7, k) == 2 * t.get(Table::c, 6, k));
  CHECK(2 * t.get(Table::c, 5, 1) - t.get(Table::pprime, 3, 1) == 20);
  CountTables grown = brute_tables(8);
  fill_c_by_recurrence(grown, 9, 16);
  for (int n = 9; n <= 16; ++n) CHECK(grown.row(Table::c, n) == t.row(Table::c, n));
  CHECK(grown.provenance(Table::c, 16, 3) == Provenance::recurrence);
}

TEST_CASE("closed form for large k") {
  const auto& t = brute16();
  auto f = c_sqrt_formula(12, 4, t);
  CHECK(f.total == 286);
  CHECK(f.by_pi == std::map<int, std::int64_t>{{1, 256}, {2, 24}, {3, 6}});
  f = c_sqrt_formula(12, 3, t);
  CHECK(f.total == 660);
  CHECK(f.by_pi == std::map<int, std::int64_t>{{1, 512}, {2, 96}, {3, 42}, {4, 10}});
  CHECK(c_sqrt_formula(5, 5, t).total == 2);
  CHECK_CODE(c_sqrt_formula(12, 2, t), ErrorCode::FormulaOutOfRange);
}

TEST_CASE("doubling defect") {
  const auto& t = brute16();
  CHECK(d_value(8, 1, DMethod::definition, t) == 6);
  CHECK(d_value(8, 4, DMethod::sqrt, t) == -2);
  CHECK(d_value(7, 3, DMethod::definition, t) == 0);
  for (int n = 2; n <= 16; ++n)
    for (int k = 1; k <= n; ++k) CHECK(d_value(n, k, DMethod::pq, t) == d_value(n, k, DMethod::definition, t));
  CHECK(d_diagonal_pattern(8, 4) == -2);
  CHECK(d_diagonal_pattern(8, 3) == 2);
  CHECK_CODE(d_value(1, 1, DMethod::definition, t), ErrorCode::FormulaOutOfRange);
  CHECK(parse_d_method("pq") == DMethod::pq);
  CHECK_CODE(parse_d_method("guess"), ErrorCode::BadFormat);
}

TEST_CASE("fine and wilf") {
  IntSeq alt;
  for (int i = 0; i < 5; ++i) alt.insert(alt.end(), {2, 3});
  CHECK(fine_wilf_period(alt, 4, 6) == 2);
  CHECK(fine_wilf_period(S({2, 3, 3, 2, 3, 3}), 3, 6) == 3);
  CHECK_FALSE(fine_wilf_period(parse_binary("2223222"), 4, 6).has_value());
  CHECK_CODE(fine_wilf_period(S({2, 3, 3}), 2, 1), ErrorCode::NotAPeriod);
}

TEST_CASE("doubling extension") {
  const auto ext = extend_tables_doubling(8);
  for (int n = 9; n <= 16; ++n) {
    CHECK(ext.row(Table::c, n) == brute16().row(Table::c, n));
    CHECK(ext.row(Table::p, n) == brute16().row(Table::p, n));
  }
  CHECK(ext.provenance(Table::c, 12, 2) == Provenance::doubling);
  CHECK_CODE(extend_tables_doubling(17), ErrorCode::CapExceeded);
}

TEST_CASE("doubling from twelve") {
  const auto ext = extend_tables_doubling(12);
  CHECK(ext.get(Table::c, 24, 24) == 2);
  const auto& t = brute16();
  for (int k = 1; k <= 11; ++k) CHECK(ext.get(Table::c, 13, k) == 2 * t.get(Table::c, 12, k));
  for (int n = 13; n <= 16; ++n) CHECK(ext.row(Table::c, n) == t.row(Table::c, n));
}

TEST_CASE("table names") {
  CHECK(parse_table("pprime") == Table::pprime);
  CHECK(to_string(Table::d) == "d");
  CHECK_CODE(parse_table("z"), ErrorCode::BadFormat);
}

}
