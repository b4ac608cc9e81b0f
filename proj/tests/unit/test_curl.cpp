#include "curling/curl.hpp"

#include "helpers.hpp"

#include <algorithm>

using namespace curling;
using testing::S;

TEST_SUITE("curl") {

TEST_CASE("curling number of small sequences") {
  CHECK(curling_number(S({0, 1, 2, 2, 1, 2, 2, 1, 2, 2})) == CurlResult{3, 3, 1});
  CHECK(curling_number(S({2})) == CurlResult{1, 1, 0});
  CHECK(curling_number(S({2, 3, 2, 3, 2, 2, 2})) == CurlResult{3, 1, 4});
  CHECK(curling_number(S({2, 3, 2, 3})) == CurlResult{2, 2, 0});
  CHECK_CODE(curling_number(IntSeq{}), ErrorCode::EmptyInput);
}

TEST_CASE("shortest block wins among equal counts") {
  // 2222 curls four times with block 2 and twice with block 22
  CHECK(curling_number(S({2, 2, 2, 2})) == CurlResult{4, 1, 0});
  CHECK(curling_number(S({3, 2, 3, 2, 3, 2})) == CurlResult{3, 2, 0});
}

TEST_CASE("periodic suffix length") {
  CHECK(periodic_suffix_length(S({3, 2, 3, 2, 3}), 2) == 5);
  CHECK(periodic_suffix_length(S({2, 2, 3}), 1) == 1);
  CHECK(periodic_suffix_length(S({2, 3}), 5) == 2);
}

TEST_CASE("extension to the tail") {
  auto r = extend_to_tail(S({2, 3, 2, 3}));
  CHECK(r.tau == 4);
  CHECK(r.extension == S({2, 3, 2, 3, 2, 2, 2, 3}));
  r = extend_to_tail(S({1}));
  CHECK(r.tau == 0);
  CHECK(r.extension == S({1}));
  r = extend_to_tail(S({3, 2, 3, 2, 3}));
  CHECK(r.tau == 4);
  CHECK(r.extension == S({3, 2, 3, 2, 3, 2, 3, 3, 2}));
  CHECK(extend_to_tail(S({2, 2, 3, 2, 2})).tau == 2);
  CHECK(extend_to_tail(S({2, 2, 3, 2, 2, 2, 3, 2, 3})).tau == 59);
  CHECK_CODE(extend_to_tail(IntSeq{}), ErrorCode::EmptyInput);
}

TEST_CASE("step limit") {
  CHECK_CODE(extend_to_tail(S({2, 2, 3, 2, 2, 2, 3, 2, 3}), 10), ErrorCode::StepLimitExceeded);
  CHECK(extend_to_tail(S({2, 2, 3, 2, 2, 2, 3, 2, 3}), 59).tau == 59);
}

TEST_CASE("gijswijt prefix") {
  CHECK(gijswijt_prefix(9) == S({1, 1, 2, 1, 1, 2, 2, 2, 3}));
  CHECK(gijswijt_prefix(1) == S({1}));
  const auto g = gijswijt_prefix(220);
  CHECK(g.back() == 4);
  CHECK(std::count(g.begin(), g.end(), 4) == 1);
  CHECK_CODE(gijswijt_prefix(0), ErrorCode::EmptyInput);
}

TEST_CASE("weak starts") {
  CHECK(is_weak(S({3, 2, 2})));
  CHECK_FALSE(is_weak(S({2, 3, 2, 2, 2, 3, 2, 3})));
  CHECK_FALSE(is_weak(S({2, 2, 2})));
  CHECK_CODE(is_weak(S({2})), ErrorCode::LengthOne);
  CHECK_CODE(is_weak(IntSeq{}), ErrorCode::EmptyInput);
}

TEST_CASE("merge into gijswijt") {
  CHECK(check_merge(S({2, 3, 2, 3}), 20));
  CHECK(check_merge(S({2}), 50));
  CHECK(check_merge(S({3, 3, 3}), 100));
  CHECK_CODE(check_merge(S({2, 1}), 10), ErrorCode::ContainsOne);
}

TEST_CASE("text encodings") {
  CHECK(parse_binary("2323") == S({2, 3, 2, 3}));
  CHECK(parse_sequence("0,1,2") == S({0, 1, 2}));
  CHECK(parse_sequence("223") == S({2, 2, 3}));
  CHECK(format_binary(S({3, 2})) == "32");
  CHECK(format_sequence(S({1, 10, 2})) == "1,10,2");
  CHECK_CODE(parse_binary("2a3"), ErrorCode::BadFormat);
  CHECK_CODE(parse_binary(""), ErrorCode::EmptyInput);
  CHECK_CODE(parse_sequence("1,,2"), ErrorCode::BadFormat);
}

TEST_CASE("bit form orders like the text") {
  CHECK(to_bits(S({2, 2, 3})) == 1);
  CHECK(to_bits(S({3, 2, 2})) == 4);
  CHECK(from_bits(5, 4) == S({2, 3, 2, 3}));
  for (std::uint64_t x = 0; x < 64; ++x) CHECK(to_bits(from_bits(x, 6)) == x);
  CHECK(is_binary(S({2, 3})));
  CHECK_FALSE(is_binary(S({2, 1})));
}

TEST_CASE("error text names the code") {
  const Error e(ErrorCode::CapExceeded, "too big");
  CHECK(std::string(e.what()) == "CapExceeded: too big");
}

}
