#pragma once

#include <doctest.h>

#include <functional>

#include "qcat/error.hpp"

namespace qcat::test {

inline ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no qcat::Error thrown");
  return ErrorKind::InvalidArgument;
}

}  // namespace qcat::test
