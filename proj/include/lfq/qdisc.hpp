#pragma once

#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include "lfq/packet.hpp"
#include "lfq/sim_time.hpp"

namespace lfq {

enum class QdiscKind { LfqDynamic, Fifo, FqCodel };

// CoDel constants are fixed so baseline comparisons stay meaningful.
inline constexpr SimTime kCodelTarget = SimTime::from_ticks(5'000);     // 5 ms
inline constexpr SimTime kCodelInterval = SimTime::from_ticks(100'000); // 100 ms

struct QdiscConfig {
  QdiscKind kind = QdiscKind::Fifo;
  int64_t fifo_cap = 100;

  static QdiscConfig lfq() { return {QdiscKind::LfqDynamic, 1}; }
  static QdiscConfig fifo(int64_t cap) { return {QdiscKind::Fifo, cap}; }
  static QdiscConfig fq_codel() { return {QdiscKind::FqCodel, 0}; }

  // Accepts "lfq", "fifo:<cap>", "fq-codel".
  static QdiscConfig parse(const std::string& s);
  std::string name() const;
};

enum class EnqueueResult { Accepted, Dropped };

struct CodelState {
  SimTime first_above_time{};  // ticks()==0 means unset, per the reference law
  SimTime drop_next{};
  uint32_t drop_count = 0;
  bool dropping = false;
};

// The single bottleneck buffer: a tail-drop FIFO whose cap is either fixed
// (Fifo), driven by the controller (LfqDynamic), or absent with the CoDel
// control law applied at dequeue (FqCodel).
class Queue {
 public:
  static constexpr int64_t kNoCap = std::numeric_limits<int64_t>::max();

  explicit Queue(const QdiscConfig& cfg)
      : kind_(cfg.kind),
        cap_(cfg.kind == QdiscKind::FqCodel ? kNoCap : cfg.fifo_cap) {
    if (kind_ != QdiscKind::FqCodel && cap_ < 1)
      throw std::invalid_argument("queue cap must be >= 1");
  }

  EnqueueResult enqueue(Packet p, SimTime now) {
    if (static_cast<int64_t>(pkts_.size()) < cap_) {
      p.enqueue_time = now;
      pkts_.push_back(p);
      return EnqueueResult::Accepted;
    }
    ++drops_;
    last_drop_ = now;
    return EnqueueResult::Dropped;
  }

  // Pops the next packet to transmit. In CoDel mode the control law may drop
  // from the head first; DropFn is invoked for each dropped packet after it
  // has left the queue.
  template <typename DropFn>
  std::optional<Packet> dequeue(SimTime now, DropFn&& on_drop) {
    if (kind_ != QdiscKind::FqCodel) {
      if (pkts_.empty()) return std::nullopt;
      Packet p = pkts_.front();
      pkts_.pop_front();
      return p;
    }
    return codel_dequeue(now, on_drop);
  }

  // A cap reduction never evicts queued packets; it only blocks new enqueues.
  void set_cap(int64_t new_cap) {
    if (kind_ == QdiscKind::FqCodel)
      throw std::logic_error("set_cap: CoDel queue has no cap");
    if (new_cap < 1) throw std::logic_error("set_cap: cap must be >= 1");
    cap_ = new_cap;
  }

  QdiscKind kind() const { return kind_; }
  int64_t len() const { return static_cast<int64_t>(pkts_.size()); }
  int64_t cap() const { return cap_; }
  bool has_cap() const { return cap_ != kNoCap; }
  uint64_t drops() const { return drops_; }
  SimTime last_drop_time() const { return last_drop_; }
  const CodelState& codel_state() const { return codel_; }

 private:
  struct DodequeueResult {
    std::optional<Packet> p;
    bool ok_to_drop = false;
  };

  DodequeueResult dodequeue(SimTime now) {
    DodequeueResult r;
    if (pkts_.empty()) {
      codel_.first_above_time = SimTime{};
      return r;
    }
    const bool small_queue = len() < 2;
    r.p = pkts_.front();
    pkts_.pop_front();
    const SimTime sojourn = now - r.p->enqueue_time;
    if (sojourn < kCodelTarget || small_queue) {
      codel_.first_above_time = SimTime{};
    } else if (codel_.first_above_time.ticks() == 0) {
      codel_.first_above_time = now + kCodelInterval;
    } else if (now >= codel_.first_above_time) {
      r.ok_to_drop = true;
    }
    return r;
  }

  static SimTime control_law(SimTime t, uint32_t count) {
    return t + SimTime::from_ticks(llround(
                   static_cast<double>(kCodelInterval.ticks()) /
                   std::sqrt(static_cast<double>(count))));
  }

  template <typename DropFn>
  std::optional<Packet> codel_dequeue(SimTime now, DropFn&& on_drop) {
    DodequeueResult r = dodequeue(now);
    if (!r.p.has_value()) {
      codel_.dropping = false;
      return std::nullopt;
    }
    if (codel_.dropping) {
      if (!r.ok_to_drop) {
        codel_.dropping = false;
      } else {
        while (codel_.dropping && now >= codel_.drop_next) {
          ++drops_;
          last_drop_ = now;
          ++codel_.drop_count;
          on_drop(*r.p);
          r = dodequeue(now);
          if (!r.p.has_value()) {
            codel_.dropping = false;
            return std::nullopt;
          }
          if (!r.ok_to_drop) {
            codel_.dropping = false;
          } else {
            codel_.drop_next = control_law(codel_.drop_next, codel_.drop_count);
          }
        }
      }
    } else if (r.ok_to_drop) {
      ++drops_;
      last_drop_ = now;
      on_drop(*r.p);
      r = dodequeue(now);
      codel_.dropping = true;
      // Resume at a higher drop rate if we left the dropping state recently.
      const bool recent = (now - codel_.drop_next < kCodelInterval) ||
                          (now - codel_.first_above_time >= kCodelInterval);
      codel_.drop_count = (recent && codel_.drop_count > 2) ? codel_.drop_count - 2 : 1;
      codel_.drop_next = control_law(now, codel_.drop_count);
      if (!r.p.has_value()) {
        codel_.dropping = false;
        return std::nullopt;
      }
    }
    return r.p;
  }

  QdiscKind kind_;
  int64_t cap_;
  std::deque<Packet> pkts_;
  uint64_t drops_ = 0;
  SimTime last_drop_{};
  CodelState codel_;
};

}  // namespace lfq
