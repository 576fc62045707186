#pragma once

#include <optional>

#include "hgraph/error.hpp"

namespace hgraph::testing {

// Kind of the hgraph::Error thrown by f, or nullopt when it returns normally.
template <class F>
std::optional<ErrorKind> caught_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

template <class F>
int caught_detail(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.detail();
  }
  return -1;
}

}  // namespace hgraph::testing
