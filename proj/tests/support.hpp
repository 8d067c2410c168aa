#pragma once

#include "doctest.h"

#include "gframe/error.hpp"

namespace gframe::test {

// Runs fn and returns the ErrorCode it threw; fails the test if it returned.
template <typename Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected gframe::Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace gframe::test
