#pragma once

#include <array>
#include <cstdint>

#include "lfq/sim_time.hpp"

namespace lfq {

inline constexpr int kEwmaCount = 10;     // weights 2^-4 .. 2^-13
inline constexpr int kFeatureCount = 60;  // 6 base signals x 10 averages
inline constexpr int kFeatureOrderVersion = 1;

// Controller input at a sampling instant. Layout is base-signal-major with
// the weight index ascending inside each block:
//   [0..9]   queue length
//   [10..19] queue length standard deviation
//   [20..29] maximum buffer size (cap)
//   [30..39] incoming rate, packets per millisecond
//   [40..49] outgoing rate, packets per millisecond
//   [50..59] time since last loss, seconds
struct FeatureVector {
  std::array<double, kFeatureCount> values{};
  double operator[](size_t i) const { return values[i]; }
};

// Warm-up threshold for the rate features: the 2^-k average counts as usable
// once its delta signal has at least k samples (Literal) or 2^k (PowerOfTwo).
enum class RateWarmup { Literal, PowerOfTwo };

// Streaming exponentially weighted averages of the six base signals.
// Queue-derived signals and times are sampled on enqueue, departure deltas on
// dequeue; drops only move the loss clock. Units are chosen so every entry
// stays within a few orders of magnitude of the others: packets, packets per
// millisecond, seconds.
class EwmaBank {
 public:
  explicit EwmaBank(RateWarmup warmup = RateWarmup::Literal);

  void update_on_enqueue(SimTime now, int queue_len, int64_t cap);
  void update_on_dequeue(SimTime now);
  void update_on_drop(SimTime now);

  FeatureVector snapshot(SimTime now) const;

  uint64_t arrival_samples() const { return arrival_count_; }
  uint64_t departure_samples() const { return departure_count_; }
  SimTime last_drop_time() const { return last_drop_; }

 private:
  static std::array<double, kEwmaCount> make_weights();

  void sample(std::array<double, kEwmaCount>& means, double x);
  void sample_with_var(std::array<double, kEwmaCount>& means,
                       std::array<double, kEwmaCount>& vars, double x);
  bool warmed(uint64_t count, int idx) const;

  std::array<double, kEwmaCount> weights_;
  RateWarmup warmup_;

  std::array<double, kEwmaCount> queue_mean_{};
  std::array<double, kEwmaCount> queue_var_{};
  std::array<double, kEwmaCount> cap_mean_{};
  std::array<double, kEwmaCount> interarrival_mean_{};   // milliseconds
  std::array<double, kEwmaCount> interdeparture_mean_{}; // milliseconds
  std::array<double, kEwmaCount> since_loss_mean_{};     // seconds

  uint64_t arrival_count_ = 0;    // interarrival delta samples
  uint64_t departure_count_ = 0;  // interdeparture delta samples
  bool has_last_arrival_ = false;
  bool has_last_departure_ = false;
  SimTime last_arrival_{};
  SimTime last_departure_{};
  SimTime last_drop_{};  // flow start until the first drop
};

}  // namespace lfq
