#include "curling/cn1.hpp"
#include "curling/curl.hpp"
#include "curling/properties.hpp"
#include "curling/tables.hpp"

#include "helpers.hpp"

#include <cmath>
#include <sstream>

using namespace curling;
using testing::S;

TEST_SUITE("cn1") {

TEST_CASE("enumerated a and b") {
  CHECK(abe_brute(AbeKind::a, 5, 4) == 10);
  CHECK(abe_brute(AbeKind::a, 9, 3) == 142);
  CHECK(abe_brute(AbeKind::b, 9, 3) == 142);
  CHECK(abe_brute(AbeKind::a, 10, 9) == 280);
  CHECK(abe_brute(AbeKind::b, 7, 5) == 26);
  CHECK(abe_brute(AbeKind::c, 12, 0) == 1124);
}

TEST_CASE("recursive a and b agree with enumeration") {
  Cn1Engine engine;
  CHECK(engine.a(5, 4) == 10);
  // b = a when n/3 <= i <= n/2
  CHECK(engine.b(9, 3) == 142);
  CHECK(engine.b(7, 5) == engine.a(7, 5) - engine.b(5, 2));
  CHECK(engine.a(10, 9) == 280);
  for (int n = 2; n <= 14; ++n) {
    for (int i = 1; i < n; ++i) {
      REQUIRE(engine.a(n, i) == abe_brute(AbeKind::a, n, i));
      REQUIRE(engine.b(n, i) == abe_brute(AbeKind::b, n, i));
    }
  }
  CHECK(engine.pprime1(6) == brute_tables(12).get(Table::pprime, 6, 1));
}

TEST_CASE("a through the complement sum") {
  Cn1Engine engine;
  for (int n = 2; n <= 10; ++n) {
    for (int i = 1; i < n; ++i) {
      const int lo = 3 * i < n ? (n - i + 1) / 2 : 1 + n / 3;
      BigInt sum = 0;
      for (int m = lo; m <= (n - 1) / 2; ++m) sum += engine.b(m, n - 2 * m);
      CHECK(engine.a(n, i) == engine.c1(n) - sum);
    }
  }
}

TEST_CASE("c(n,1) by recursion") {
  Cn1Engine engine;
  CHECK(engine.c1(12) == 1124);
  const auto t = brute_tables(20);
  for (int n = 1; n <= 20; ++n) CHECK(engine.c1(n) == t.get(Table::c, n, 1));
  const auto entries = c1_recursive(100, engine);
  CHECK(entries.size() == 100);
  CHECK(std::abs(entries[59].ratio - 0.27004339525895354325) < 1e-8);
  for (const auto& e : entries)
    if (e.n >= 8) CHECK(e.ratio > 0.27);
  CHECK(c1_ratio_text(BigInt(3), 2, 5) == "0.75000");
}

TEST_CASE("e beyond its cap is a missing dependency") {
  Cn1Engine engine(8);
  CHECK_CODE(engine.e(9, 1, 1), ErrorCode::MissingDependency);
  CHECK_CODE(Cn1Engine(0), ErrorCode::CapExceeded);
  CHECK_CODE(abe_brute(AbeKind::a, 30, 1), ErrorCode::CapExceeded);
}

TEST_CASE("memo round trip") {
  Cn1Engine engine;
  engine.c1(40);
  std::stringstream buf;
  engine.save(buf);
  Cn1Engine fresh;
  fresh.load(buf);
  CHECK(fresh.memo() == engine.memo());
  std::stringstream again;
  fresh.save(again);
  std::stringstream first;
  engine.save(first);
  CHECK(again.str() == first.str());

  std::stringstream old("curling-abe-memo 0\n");
  CHECK_CODE(fresh.load(old), ErrorCode::CacheInvalid);
  std::stringstream junk("curling-abe-memo 1\nq 1 2\n");
  CHECK_CODE(fresh.load(junk), ErrorCode::BadFormat);
}

TEST_CASE("non-robust decompositions") {
  auto d = decompose_nonrobust(parse_binary("3322322333223"), 1);
  REQUIRE(d.has_value());
  CHECK(d->x == S({3, 3, 2, 2, 3}));
  CHECK(d->y_or_t == S({2, 2, 3}));
  d = decompose_nonrobust(S({3, 2, 2, 3, 2, 2, 3, 2}), 2);
  REQUIRE(d.has_value());
  CHECK(d->x == S({3, 2}));
  CHECK(d->y_or_t == S({2}));
  CHECK_FALSE(decompose_nonrobust(S({2, 3}), 1).has_value());
  CHECK_CODE(decompose_nonrobust(S({2, 3, 2, 3}), 2), ErrorCode::NotPrimitive);
  CHECK_CODE(decompose_nonrobust(S({2, 3}), 2), ErrorCode::CurlMismatch);
}

TEST_CASE("invariant sweeps at small sizes") {
  CHECK(check_decomposition_unique(12).pass);
  for (const auto& r : check_abe_identities(12)) CHECK_MESSAGE(r.pass, r.name << ": " << r.detail);
  CHECK(check_split_dichotomy(8).pass);
}

}
