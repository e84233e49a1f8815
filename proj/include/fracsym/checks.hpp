#pragma once

#include <string>
#include <vector>

namespace fracsym {

/// One row of a verification sweep: two independently computed quantities.
struct CheckRow {
  std::string label;
  double lhs = 0.0;
  double rhs = 0.0;
  double diff = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::string note;
};

inline CheckRow make_check(std::string label, double lhs, double rhs,
                           double diff, double tol) {
  return {std::move(label), lhs, rhs, diff, tol, diff <= tol, {}};
}

inline bool all_pass(const std::vector<CheckRow>& rows) {
  for (const auto& row : rows) {
    if (!row.pass) return false;
  }
  return true;
}

}  // namespace fracsym
