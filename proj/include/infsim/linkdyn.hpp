#pragma once

#include <cstddef>
#include <deque>
#include <vector>

#include "infsim/rng.hpp"
#include "infsim/scenario.hpp"

namespace infsim {

struct Packet {
  double generation_time_s = 0.0;
};

// Sensor output buffer. Packets are held in generation order; there is no
// capacity limit.
class SensorQueue {
 public:
  void push(Packet p);  // generation times must be non-decreasing
  std::size_t size() const { return packets_.size(); }
  bool empty() const { return packets_.empty(); }
  const Packet& front() const { return packets_.front(); }
  const Packet& back() const { return packets_.back(); }

  // Removes min(size, floor(rate)) packets and returns them; the fractional
  // remainder of the rate is discarded (no cross-slot carryover). FIFO takes
  // the oldest packets first, LIFO the freshest.
  std::vector<Packet> pop_delivered(double rate_pkts,
                                    ServiceOrder order = ServiceOrder::fifo);

 private:
  std::deque<Packet> packets_;
};

// floor(A) packets plus one more with probability frac(A), all stamped at the
// slot start t*tau. The Bernoulli draw is skipped entirely for integer rates.
std::vector<Packet> generate_arrivals(double arrival_rate_pkts, int slot,
                                      double slot_duration_s,
                                      RandomStream& rng);

std::vector<Packet> deliver_and_update(SensorQueue& queue, double rate_pkts,
                                       ServiceOrder order = ServiceOrder::fifo);

struct AoiState {
  double aoi_s = 0.0;
  double last_delivered_generation_s = 0.0;
};

// Slot-boundary age bookkeeping: a delivery resets the age to
// (t+1)*tau - freshest delivered generation, otherwise the age grows by tau.
// Throws std::logic_error on a future-stamped delivery.
AoiState update_aoi(const AoiState& state, const std::vector<Packet>& delivered,
                    int slot, double slot_duration_s);

}  // namespace infsim
