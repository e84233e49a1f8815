#pragma once

#include <optional>
#include <random>

#include "fracsym/error.hpp"

// Code of the fracsym::Error thrown by f, or nullopt if it returned.
template <class F>
std::optional<fracsym::ErrorCode> error_of(F&& f) {
  try {
    f();
  } catch (const fracsym::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}
