#pragma once

#include "invseq/error.hpp"

#include <optional>

// Kind of the invseq::Error thrown by f, or nullopt if it returns normally.
template <typename F>
std::optional<invseq::ErrorKind> error_kind(F&& f) {
  try {
    f();
  } catch (const invseq::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}
