#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bellbox::cli {

class AngleParseError : public std::runtime_error {
 public:
  AngleParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " +
                           std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Parses an angle expression to radians. Grammar:
///   ['-'] ( DECIMAL | [INT ['*']] 'pi' ['/' INT] )
/// e.g. "0.3927", "pi", "pi/8", "3pi/8", "2*pi/3", "-pi/4". The pi fraction
/// is reduced with exact integer arithmetic before the float conversion.
double parse_angle(std::string_view text);

}  // namespace bellbox::cli
