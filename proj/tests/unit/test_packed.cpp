#include "curling/curl.hpp"
#include "curling/packed.hpp"

#include "helpers.hpp"

#include <random>

using namespace curling;
using testing::S;

TEST_SUITE("packed") {

TEST_CASE("pack and unpack") {
  const auto s = S({2, 3, 2, 3, 2, 2, 2});
  const auto p = PackedSeq::pack(s);
  CHECK(p.size() == 7);
  CHECK(p.unpack() == s);
  CHECK(p.bit_from_end(0) == 0);
  CHECK(p.bit_from_end(5) == 1);
  CHECK_CODE(PackedSeq::pack(IntSeq{}), ErrorCode::EmptyInput);
  CHECK_CODE(PackedSeq::pack(S({2, 4})), ErrorCode::BadFormat);
}

TEST_CASE("long words span several limbs") {
  std::mt19937_64 rng(3);
  IntSeq s(200);
  for (auto& v : s) v = 2 + static_cast<std::int64_t>(rng() & 1);
  CHECK(PackedSeq::pack(s).unpack() == s);
}

TEST_CASE("fast curling number examples") {
  CHECK(fast_curling_number(PackedSeq::pack(S({2, 3, 2, 3, 2, 2, 2}))) == CurlResult{3, 1, 4});
  CHECK(fast_curling_number(PackedSeq::pack(S({2, 2}))) == CurlResult{2, 1, 0});
}

TEST_CASE("fast path agrees with the reference on every short word") {
  const auto& table = default_suffix_table();
  for (int n = 1; n <= 14; ++n) {
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      const auto s = from_bits(x, n);
      const auto ref = curling_number(s);
      REQUIRE(fast_curling_number(x, static_cast<std::size_t>(n), &table) == ref);
      REQUIRE(has_square_suffix(x, static_cast<std::size_t>(n)) == (ref.k > 1));
    }
  }
}

TEST_CASE("tail lengths from the packed engine") {
  const auto& table = default_suffix_table();
  BinaryExtender ext(&table);
  CHECK(ext.tail_length(PackedSeq::pack(S({2, 3, 2, 3}))) == 4);
  CHECK(ext.tail_length(PackedSeq::pack(S({2, 2, 3, 2, 2, 2, 3, 2, 3}))) == 59);
  const auto r = fast_tail_length(PackedSeq::pack(S({2, 3, 2, 3})), table);
  CHECK(r.extension == S({2, 3, 2, 3, 2, 2, 2, 3}));
  CHECK_CODE(ext.tail_length(0, 0), ErrorCode::IndexOutOfRange);
}

TEST_CASE("random starts of length 30 match the reference tail") {
  const auto& table = default_suffix_table();
  BinaryExtender ext(&table);
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    IntSeq s(30);
    for (auto& v : s) v = 2 + static_cast<std::int64_t>(rng() & 1);
    REQUIRE(ext.tail_length(PackedSeq::pack(s)) == extend_to_tail(s).tau);
  }
}

TEST_CASE("step limit applies to the packed engine") {
  BinaryExtender ext(&default_suffix_table(), 10);
  CHECK_CODE(ext.tail_length(PackedSeq::pack(S({2, 2, 3, 2, 2, 2, 3, 2, 3}))), ErrorCode::StepLimitExceeded);
}

TEST_CASE("suffix table serialisation") {
  const SuffixCNTable small(8);
  const auto bytes = small.serialize();
  CHECK(bytes.size() == 8 + 64);
  CHECK(bytes[0] == 'C');
  CHECK(SuffixCNTable::deserialize(bytes) == small);
  auto bad = bytes;
  bad[4] = 9;
  CHECK_CODE(SuffixCNTable::deserialize(bad), ErrorCode::CacheInvalid);
  bad = bytes;
  bad.pop_back();
  CHECK_CODE(SuffixCNTable::deserialize(bad), ErrorCode::BadFormat);
  CHECK_CODE(SuffixCNTable(40), ErrorCode::CapExceeded);
}

TEST_CASE("table codes saturate at four") {
  const SuffixCNTable t(6);
  CHECK(t.code(0) == 3);         // 222222
  CHECK(t.code(0b010101) == 2);  // 232323
  CHECK(t.code(0b000001) == 0);  // 222223
}

}
