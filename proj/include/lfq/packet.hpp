#pragma once

#include <cstdint>

#include "lfq/sim_time.hpp"

namespace lfq {

// All traffic is fixed-size segments; queue metrics count packets.
inline constexpr int kPacketBytes = 1500;

struct Packet {
  uint64_t seq = 0;
  int size_bytes = kPacketBytes;
  SimTime enqueue_time{};
  uint32_t flow_id = 0;
};

}  // namespace lfq
