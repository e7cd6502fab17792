#include "lfq/features.hpp"

#include <cmath>

namespace lfq {

std::array<double, kEwmaCount> EwmaBank::make_weights() {
  std::array<double, kEwmaCount> w{};
  double v = 1.0 / 16.0;  // 2^-4
  for (int i = 0; i < kEwmaCount; ++i) {
    w[i] = v;
    v *= 0.5;
  }
  return w;
}

EwmaBank::EwmaBank(RateWarmup warmup) : weights_(make_weights()), warmup_(warmup) {}

void EwmaBank::sample(std::array<double, kEwmaCount>& means, double x) {
  for (int i = 0; i < kEwmaCount; ++i) {
    means[i] += weights_[i] * (x - means[i]);
  }
}

void EwmaBank::sample_with_var(std::array<double, kEwmaCount>& means,
                               std::array<double, kEwmaCount>& vars, double x) {
  for (int i = 0; i < kEwmaCount; ++i) {
    const double w = weights_[i];
    const double delta = x - means[i];
    means[i] += w * delta;
    vars[i] = (1.0 - w) * (vars[i] + w * delta * delta);
  }
}

void EwmaBank::update_on_enqueue(SimTime now, int queue_len, int64_t cap) {
  sample_with_var(queue_mean_, queue_var_, static_cast<double>(queue_len));
  sample(cap_mean_, static_cast<double>(cap));
  if (has_last_arrival_) {
    sample(interarrival_mean_, (now - last_arrival_).millis());
    ++arrival_count_;
  }
  last_arrival_ = now;
  has_last_arrival_ = true;
  sample(since_loss_mean_, (now - last_drop_).seconds());
}

void EwmaBank::update_on_dequeue(SimTime now) {
  if (has_last_departure_) {
    sample(interdeparture_mean_, (now - last_departure_).millis());
    ++departure_count_;
  }
  last_departure_ = now;
  has_last_departure_ = true;
}

void EwmaBank::update_on_drop(SimTime now) { last_drop_ = now; }

bool EwmaBank::warmed(uint64_t count, int idx) const {
  const int k = 4 + idx;
  const uint64_t need =
      warmup_ == RateWarmup::Literal ? static_cast<uint64_t>(k) : (uint64_t{1} << k);
  return count >= need;
}

FeatureVector EwmaBank::snapshot(SimTime) const {
  FeatureVector f;
  for (int i = 0; i < kEwmaCount; ++i) {
    f.values[i] = queue_mean_[i];
    f.values[kEwmaCount + i] = std::sqrt(std::max(0.0, queue_var_[i]));
    f.values[2 * kEwmaCount + i] = cap_mean_[i];
    f.values[3 * kEwmaCount + i] =
        (warmed(arrival_count_, i) && interarrival_mean_[i] > 0.0)
            ? 1.0 / interarrival_mean_[i]
            : 0.0;
    f.values[4 * kEwmaCount + i] =
        (warmed(departure_count_, i) && interdeparture_mean_[i] > 0.0)
            ? 1.0 / interdeparture_mean_[i]
            : 0.0;
    f.values[5 * kEwmaCount + i] = since_loss_mean_[i];
  }
  return f;
}

}  // namespace lfq
