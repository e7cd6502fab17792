#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lfq/sim_time.hpp"

namespace lfq {

enum class EventKind : uint8_t {
  PacketArrival,     // payload: packet seq reaching the queue
  TransmitComplete,  // payload: packet seq leaving the bottleneck link
  AckDelivery,       // payload: cumulative ack seq reaching the sender
  FlowEnd,
  InferenceDue,
};

struct Event {
  SimTime fire_at{};
  EventKind kind = EventKind::FlowEnd;
  uint64_t payload = 0;
  uint64_t insertion_seq = 0;  // tiebreak: equal timestamps fire in insertion order
};

// Min-heap on (fire_at, insertion_seq). Plain value semantics so a forked
// simulation carries an independent copy of its pending events.
class EventQueue {
 public:
  void schedule(SimTime now, SimTime at, EventKind kind, uint64_t payload) {
    if (at < now) throw std::logic_error("EventQueue: scheduling in the past");
    heap_.push_back(Event{at, kind, payload, next_insertion_++});
    std::push_heap(heap_.begin(), heap_.end(), Later{});
  }

  bool empty() const { return heap_.empty(); }
  size_t size() const { return heap_.size(); }
  const Event& peek() const { return heap_.front(); }

  Event pop() {
    std::pop_heap(heap_.begin(), heap_.end(), Later{});
    Event e = heap_.back();
    heap_.pop_back();
    return e;
  }

 private:
  struct Later {
    bool operator()(const Event& a, const Event& b) const {
      if (a.fire_at != b.fire_at) return a.fire_at > b.fire_at;
      return a.insertion_seq > b.insertion_seq;
    }
  };
  std::vector<Event> heap_;
  uint64_t next_insertion_ = 0;
};

}  // namespace lfq
