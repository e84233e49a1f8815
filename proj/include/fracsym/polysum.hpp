#pragma once

// Finite sums Σ c·t^p x^q y^r.

#include <string>
#include <string_view>
#include <vector>

namespace fracsym {

enum class Axis { t, x, y };

struct PolyTerm {
  double c = 0.0;
  double p = 0.0;  // exponent of t
  double q = 0.0;  // exponent of x
  double r = 0.0;  // exponent of y

  double exponent(Axis axis) const noexcept;
};

class PolySum3 {
 public:
  PolySum3() = default;

  /// Adds a term, merging into an existing term with the same exponents.
  /// Exponents must exceed −1.
  void add(const PolyTerm& term);

  const std::vector<PolyTerm>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  double evaluate(double t, double x, double y) const;

  /// Same sum with the x and y exponents exchanged.
  PolySum3 swap_xy() const;

  /// Parses `c,p,q,r;c,p,q,r;…`. Empty (or blank) text is the zero sum.
  /// User-facing exponents must be nonnegative.
  static PolySum3 parse(std::string_view text);

  /// Inverse of parse for canonical input: shortest round-trip decimals.
  std::string to_string() const;

  friend PolySum3 operator+(PolySum3 lhs, const PolySum3& rhs);
  friend PolySum3 operator*(double scale, PolySum3 sum);

 private:
  std::vector<PolyTerm> terms_;
};

}  // namespace fracsym
