#include "angle_expr.hpp"

#include <charconv>
#include <cmath>

namespace bellbox::cli {

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

double parse_angle(std::string_view text) {
  if (text.empty()) throw AngleParseError("empty angle expression", 0);

  std::size_t pos = 0;
  double sign = 1.0;
  if (text[pos] == '-') {
    sign = -1.0;
    ++pos;
    if (pos == text.size()) throw AngleParseError("expected angle after '-'", pos);
  }

  const std::size_t pi_pos = text.find("pi", pos);
  if (pi_pos != std::string_view::npos) {
    std::uint64_t multiplier = 1;
    if (pi_pos > pos) {
      std::size_t int_end = pi_pos;
      if (text[int_end - 1] == '*') --int_end;
      if (int_end == pos) {
        throw AngleParseError("expected integer before 'pi'", pos);
      }
      const auto [ptr, ec] =
          std::from_chars(text.data() + pos, text.data() + int_end, multiplier);
      if (ec != std::errc() || ptr != text.data() + int_end) {
        throw AngleParseError("invalid integer multiplier", pos);
      }
    }
    pos = pi_pos + 2;
    std::uint64_t divisor = 1;
    if (pos < text.size()) {
      if (text[pos] != '/') {
        throw AngleParseError("expected '/' after 'pi'", pos);
      }
      ++pos;
      const auto [ptr, ec] = std::from_chars(text.data() + pos,
                                             text.data() + text.size(), divisor);
      if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw AngleParseError("invalid divisor", pos);
      }
      if (divisor < 1) throw AngleParseError("divisor must be >= 1", pos);
    }
    return sign * (static_cast<double>(multiplier) * kPi) /
           static_cast<double>(divisor);
  }

  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data() + pos, text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw AngleParseError("invalid decimal angle",
                          static_cast<std::size_t>(ptr - text.data()));
  }
  if (!std::isfinite(value)) {
    throw AngleParseError("angle must be finite", pos);
  }
  return sign * value;
}

}  // namespace bellbox::cli
