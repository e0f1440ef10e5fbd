#pragma once

#include <doctest.h>

#include "core/error.hpp"

namespace syt::test {

template <class F>
Errc error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::invalid_argument;
}

}  // namespace syt::test
