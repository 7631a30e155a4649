#pragma once

#include <array>
#include <cstddef>

namespace bellbox {

/// The four joint detector outcomes: lamp A / lamp B each on (y) or off (n).
enum class Event : std::size_t { yy = 0, yn = 1, ny = 2, nn = 3 };

inline constexpr std::array<Event, 4> kAllEvents = {Event::yy, Event::yn,
                                                    Event::ny, Event::nn};

constexpr const char* to_string(Event e) {
  switch (e) {
    case Event::yy: return "yy";
    case Event::yn: return "yn";
    case Event::ny: return "ny";
    case Event::nn: return "nn";
  }
  return "?";
}

/// Probabilities of the four joint events for one experimental configuration.
/// Valid instances have every entry in [0,1] and entries summing to 1.
struct EventProbabilities {
  double w_yy = 0.0;
  double w_yn = 0.0;
  double w_ny = 0.0;
  double w_nn = 0.0;

  constexpr double operator[](Event e) const {
    switch (e) {
      case Event::yy: return w_yy;
      case Event::yn: return w_yn;
      case Event::ny: return w_ny;
      case Event::nn: return w_nn;
    }
    return 0.0;
  }

  constexpr double sum() const { return w_yy + w_yn + w_ny + w_nn; }
};

}  // namespace bellbox
