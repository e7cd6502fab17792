#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "lfq/packet.hpp"

namespace lfq {

enum class Cca { NewReno, Bic };

inline const char* to_string(Cca c) { return c == Cca::NewReno ? "reno" : "bic"; }

inline Cca cca_from_string(const std::string& s) {
  if (s == "reno" || s == "newreno" || s == "new-reno") return Cca::NewReno;
  if (s == "bic") return Cca::Bic;
  throw std::invalid_argument("unknown cca: " + s);
}

// One simulated episode: a single bulk flow over a directly connected
// bottleneck. `delay_ms` is the round-trip propagation delay.
struct FlowConfig {
  double bandwidth_mbps = 15.0;
  double delay_ms = 15.0;
  double duration_s = 5.0;
  Cca cca = Cca::NewReno;
  uint64_t seed = 1;
  double alpha = 0.01;
  int sample_interval = 10;  // controller runs every Nth packet arrival

  void validate() const {
    if (!(bandwidth_mbps > 0)) throw std::invalid_argument("bandwidth must be > 0");
    if (!(delay_ms > 0)) throw std::invalid_argument("delay must be > 0");
    if (!(duration_s > 0)) throw std::invalid_argument("duration must be > 0");
    if (sample_interval < 1) throw std::invalid_argument("sample_interval must be >= 1");
    if (alpha < 0) throw std::invalid_argument("alpha must be >= 0");
  }
};

// Bandwidth-delay product in packets for a round-trip delay in milliseconds.
inline double bdp_packets(double bandwidth_mbps, double delay_ms) {
  return bandwidth_mbps * 1e6 * delay_ms * 1e-3 / 8.0 / kPacketBytes;
}

}  // namespace lfq
