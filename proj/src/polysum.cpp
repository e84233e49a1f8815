#include "fracsym/polysum.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <string>

#include "fracsym/error.hpp"

namespace fracsym {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_real(std::string_view field, std::string_view context) {
  field = trim(field);
  double value = 0.0;
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (field.empty() || ec != std::errc{} || ptr != end || !std::isfinite(value)) {
    fail(ErrorCode::parse, "f-term: cannot parse real '" + std::string(field) +
                               "' in '" + std::string(context) + "'");
  }
  return value;
}

void append_real(std::string& out, double value) {
  std::array<char, 32> buffer{};
  const auto [ptr, ec] =
      std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  out.append(buffer.data(), ptr);
}

}  // namespace

double PolyTerm::exponent(Axis axis) const noexcept {
  switch (axis) {
    case Axis::t: return p;
    case Axis::x: return q;
    case Axis::y: return r;
  }
  return 0.0;
}

void PolySum3::add(const PolyTerm& term) {
  if (!(term.p > -1.0 && term.q > -1.0 && term.r > -1.0)) {
    fail(ErrorCode::domain, "PolySum3: exponents must exceed -1");
  }
  for (auto& existing : terms_) {
    if (existing.p == term.p && existing.q == term.q && existing.r == term.r) {
      existing.c += term.c;
      return;
    }
  }
  terms_.push_back(term);
}

double PolySum3::evaluate(double t, double x, double y) const {
  double sum = 0.0;
  for (const auto& term : terms_) {
    sum += term.c * std::pow(t, term.p) * std::pow(x, term.q) *
           std::pow(y, term.r);
  }
  return sum;
}

PolySum3 PolySum3::swap_xy() const {
  PolySum3 swapped;
  for (const auto& term : terms_) swapped.add({term.c, term.p, term.r, term.q});
  return swapped;
}

PolySum3 PolySum3::parse(std::string_view text) {
  PolySum3 sum;
  if (trim(text).empty()) return sum;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto stop = text.find(';', start);
    const auto chunk = text.substr(
        start, stop == std::string_view::npos ? std::string_view::npos
                                              : stop - start);
    std::array<double, 4> fields{};
    std::size_t field_start = 0;
    for (std::size_t k = 0; k < fields.size(); ++k) {
      const auto comma = chunk.find(',', field_start);
      const bool last = (k + 1 == fields.size());
      if (last != (comma == std::string_view::npos)) {
        fail(ErrorCode::parse, "f-term: expected four comma-separated reals "
                               "in '" + std::string(chunk) + "'");
      }
      fields[k] = parse_real(chunk.substr(field_start, last ? std::string_view::npos
                                                             : comma - field_start),
                             chunk);
      field_start = comma + 1;
    }
    if (fields[1] < 0.0 || fields[2] < 0.0 || fields[3] < 0.0) {
      fail(ErrorCode::parse, "f-term: exponents must be nonnegative in '" +
                                 std::string(chunk) + "'");
    }
    sum.add({fields[0], fields[1], fields[2], fields[3]});
    if (stop == std::string_view::npos) break;
    start = stop + 1;
  }
  return sum;
}

std::string PolySum3::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i > 0) out.push_back(';');
    const auto& term = terms_[i];
    append_real(out, term.c);
    out.push_back(',');
    append_real(out, term.p);
    out.push_back(',');
    append_real(out, term.q);
    out.push_back(',');
    append_real(out, term.r);
  }
  return out;
}

PolySum3 operator+(PolySum3 lhs, const PolySum3& rhs) {
  for (const auto& term : rhs.terms_) lhs.add(term);
  return lhs;
}

PolySum3 operator*(double scale, PolySum3 sum) {
  for (auto& term : sum.terms_) term.c *= scale;
  return sum;
}

}  // namespace fracsym
