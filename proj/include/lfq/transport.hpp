#pragma once

#include <cstdint>
#include <optional>
#include <set>

#include "lfq/flow_config.hpp"

namespace lfq {

enum class TcpPhase { SlowStart, CongestionAvoidance, FastRecovery };

struct BicParams {
  double beta = 0.7;   // multiplicative decrease factor
  double s_max = 32.0; // max binary-search / additive step per RTT, packets
};

// Packet-level single-flow sender, just enough machinery to reproduce the
// sawtooth dynamics of loss-based congestion control:
//  - slow start (+1 per new ack) until ssthresh,
//  - New Reno congestion avoidance (+1/cwnd per new ack),
//  - BIC congestion avoidance (binary-search increase toward w_max, additive
//    s_max per RTT beyond it),
//  - loss detection by three duplicate acks with a simplified fast recovery:
//    the missing segment is retransmitted once and recovery ends when it is
//    acked. Duplicate acks during recovery inflate the window by one packet
//    so the ack clock keeps running; exit deflates back to ssthresh.
// No retransmission timer lives here; the engine re-injects the lowest
// unacked segment if the pipe ever drains completely.
class Sender {
 public:
  explicit Sender(Cca cca, double initial_cwnd = 10.0,
                  BicParams bic = BicParams{});

  struct AckResult {
    std::optional<uint64_t> retransmit;  // segment to retransmit now
  };

  // Processes one delivered cumulative ack. `acked_seq` never exceeds what
  // was sent and never regresses (FIFO delivery over fixed delay).
  AckResult on_ack(uint64_t acked_seq);

  // Multiplicative decrease on loss detection; exact factors 0.5 / 0.7.
  void on_loss_detected();

  bool can_send() const {
    return static_cast<double>(outstanding()) < cwnd_ + 1e-9 &&
           outstanding() < static_cast<uint64_t>(cwnd_) + 1;
  }
  uint64_t emit() { return next_seq_++; }

  double cwnd() const { return cwnd_; }
  double ssthresh() const { return ssthresh_; }
  TcpPhase phase() const { return phase_; }
  Cca cca() const { return cca_; }
  uint64_t next_seq() const { return next_seq_; }
  uint64_t high_ack() const { return high_ack_; }
  uint64_t outstanding() const { return next_seq_ - 1 - high_ack_; }
  int dup_acks() const { return dup_acks_; }
  double bic_w_max() const { return bic_w_max_; }
  double bic_w_min() const { return bic_w_min_; }

  // One RTT worth of BIC growth from the current window; exposed for tests
  // of the binary-search rule.
  double bic_rtt_target() const;

 private:
  void start_bic_round();

  Cca cca_;
  BicParams bic_;
  double cwnd_;
  double ssthresh_;
  TcpPhase phase_ = TcpPhase::SlowStart;
  uint64_t next_seq_ = 1;
  uint64_t high_ack_ = 0;
  int dup_acks_ = 0;
  bool retransmitted_this_recovery_ = false;

  double bic_w_max_ = 0.0;
  double bic_w_min_ = 0.0;
  double bic_inc_per_ack_ = 0.0;
  uint64_t bic_round_end_ = 0;
};

// Cumulative-ack receiver: acks every packet, duplicate acks on gaps.
class Receiver {
 public:
  struct AckInfo {
    uint64_t cum_ack = 0;
    bool new_data = false;  // first time this sequence number was seen
  };

  AckInfo on_packet(uint64_t seq);

  uint64_t cum_ack() const { return cum_; }
  uint64_t unique_packets() const { return unique_; }

 private:
  uint64_t cum_ = 0;
  uint64_t unique_ = 0;
  std::set<uint64_t> out_of_order_;
};

}  // namespace lfq
