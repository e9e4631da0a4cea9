#pragma once

#include "spinmap/error.hpp"

#include <utility>

template <class F>
bool throws_kind(F&& f, spinmap::ErrorKind kind) {
  try {
    std::forward<F>(f)();
  } catch (const spinmap::Error& e) {
    return e.kind() == kind;
  }
  return false;
}
