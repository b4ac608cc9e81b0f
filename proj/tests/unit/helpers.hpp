#pragma once

#include "curling/error.hpp"
#include "curling/types.hpp"

#include <doctest.h>

#include <initializer_list>

namespace testing {

inline curling::IntSeq S(std::initializer_list<int> v) { return curling::IntSeq(v.begin(), v.end()); }

template <class Fn>
curling::ErrorCode code_of(Fn fn) {
  try {
    fn();
  } catch (const curling::Error& e) {
    return e.code();
  }
  FAIL("expected curling::Error");
  return curling::ErrorCode::BadFormat;
}

}  // namespace testing

#define CHECK_CODE(expr, ec) CHECK(testing::code_of([&] { (void)(expr); }) == (ec))
