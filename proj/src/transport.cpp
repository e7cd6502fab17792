#include "lfq/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lfq {

Sender::Sender(Cca cca, double initial_cwnd, BicParams bic)
    : cca_(cca),
      bic_(bic),
      cwnd_(initial_cwnd),
      ssthresh_(std::numeric_limits<double>::infinity()) {}

double Sender::bic_rtt_target() const {
  if (cwnd_ >= bic_w_max_) return cwnd_ + bic_.s_max;
  const double midpoint = (bic_w_min_ + bic_w_max_) / 2.0;
  return std::min(cwnd_ + bic_.s_max, std::max(cwnd_ + 1.0, midpoint));
}

void Sender::start_bic_round() {
  bic_w_min_ = cwnd_;
  const double target = bic_rtt_target();
  bic_inc_per_ack_ = (target - cwnd_) / std::max(1.0, cwnd_);
  // The round ends once everything outstanding right now is acknowledged.
  bic_round_end_ = next_seq_ - 1;
}

Sender::AckResult Sender::on_ack(uint64_t acked_seq) {
  AckResult result;
  if (acked_seq > high_ack_) {
    high_ack_ = acked_seq;
    if (phase_ == TcpPhase::FastRecovery) {
      // Any cumulative advance covers the retransmitted segment.
      cwnd_ = ssthresh_;
      phase_ = TcpPhase::CongestionAvoidance;
      dup_acks_ = 0;
      retransmitted_this_recovery_ = false;
      if (cca_ == Cca::Bic) start_bic_round();
      return result;
    }
    dup_acks_ = 0;
    if (phase_ == TcpPhase::SlowStart) {
      cwnd_ += 1.0;
      if (cwnd_ >= ssthresh_) {
        phase_ = TcpPhase::CongestionAvoidance;
        if (cca_ == Cca::Bic) start_bic_round();
      }
    } else {  // CongestionAvoidance
      if (cca_ == Cca::NewReno) {
        cwnd_ += 1.0 / cwnd_;
      } else {
        if (high_ack_ >= bic_round_end_) start_bic_round();
        cwnd_ += bic_inc_per_ack_;
      }
    }
    return result;
  }

  // Duplicate ack.
  if (phase_ == TcpPhase::FastRecovery) {
    cwnd_ += 1.0;  // window inflation keeps the ack clock running
    return result;
  }
  if (++dup_acks_ == 3) {
    on_loss_detected();
    retransmitted_this_recovery_ = true;
    result.retransmit = high_ack_ + 1;
  }
  return result;
}

void Sender::on_loss_detected() {
  const double prior = cwnd_;
  if (cca_ == Cca::NewReno) {
    cwnd_ = std::max(1.0, prior * 0.5);
  } else {
    bic_w_max_ = prior;
    cwnd_ = std::max(1.0, prior * bic_.beta);
    bic_w_min_ = cwnd_;
  }
  ssthresh_ = cwnd_;
  phase_ = TcpPhase::FastRecovery;
  dup_acks_ = 0;
}

Receiver::AckInfo Receiver::on_packet(uint64_t seq) {
  AckInfo info;
  if (seq > cum_ && out_of_order_.find(seq) == out_of_order_.end()) {
    info.new_data = true;
    ++unique_;
  }
  if (seq == cum_ + 1) {
    ++cum_;
    auto it = out_of_order_.begin();
    while (it != out_of_order_.end() && *it == cum_ + 1) {
      ++cum_;
      it = out_of_order_.erase(it);
    }
  } else if (seq > cum_) {
    out_of_order_.insert(seq);
  }
  info.cum_ack = cum_;
  return info;
}

}  // namespace lfq
