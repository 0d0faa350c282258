#pragma once

#include <doctest.h>

#include "nbai/error.hpp"

namespace nbai::test {

template <typename F>
ErrorCode code_of(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected nbai::Error");
  return ErrorCode::ValidationError;
}

}  // namespace nbai::test
