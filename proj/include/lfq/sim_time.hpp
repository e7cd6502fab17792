#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>

namespace lfq {

// Simulation time as integer microsecond ticks. Integer ticks keep the event
// order exact; seconds are derived for reporting only.
class SimTime {
 public:
  static constexpr int64_t kTicksPerSecond = 1'000'000;

  constexpr SimTime() = default;

  static constexpr SimTime from_ticks(int64_t t) { return SimTime(t); }
  static SimTime from_seconds(double s) {
    return SimTime(llround(s * static_cast<double>(kTicksPerSecond)));
  }
  static SimTime from_millis(double ms) { return SimTime(llround(ms * 1000.0)); }
  static constexpr SimTime max() {
    return SimTime(std::numeric_limits<int64_t>::max());
  }

  constexpr int64_t ticks() const { return ticks_; }
  constexpr double seconds() const {
    return static_cast<double>(ticks_) / static_cast<double>(kTicksPerSecond);
  }
  constexpr double millis() const { return static_cast<double>(ticks_) / 1000.0; }

  friend constexpr auto operator<=>(SimTime a, SimTime b) = default;
  friend constexpr SimTime operator+(SimTime a, SimTime b) {
    return SimTime(a.ticks_ + b.ticks_);
  }
  friend constexpr SimTime operator-(SimTime a, SimTime b) {
    return SimTime(a.ticks_ - b.ticks_);
  }

 private:
  constexpr explicit SimTime(int64_t t) : ticks_(t) {}
  int64_t ticks_ = 0;
};

}  // namespace lfq
