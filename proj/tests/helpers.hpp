// Assertion helpers for the error contract.

#ifndef ACTA_TESTS_HELPERS_HPP_
#define ACTA_TESTS_HELPERS_HPP_

#include <optional>  // for optional

#include "acta/error.hpp"

// The kind of the acta::Error thrown by f, or nothing when f returns.
template <typename F>
std::optional<acta::ErrorKind> error_kind(F&& f) {
  try {
    f();
  } catch (acta::Error const& e) {
    return e.kind();
  }
  return std::nullopt;
}

#endif  // ACTA_TESTS_HELPERS_HPP_
