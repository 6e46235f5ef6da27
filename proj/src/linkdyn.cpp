#include "infsim/linkdyn.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace infsim {

void SensorQueue::push(Packet p) {
  if (!packets_.empty() && p.generation_time_s < packets_.back().generation_time_s) {
    throw std::logic_error("SensorQueue: generation times must be non-decreasing");
  }
  packets_.push_back(p);
}

std::vector<Packet> SensorQueue::pop_delivered(double rate_pkts,
                                               ServiceOrder order) {
  const auto capacity = static_cast<std::size_t>(std::max(0.0, std::floor(rate_pkts)));
  const std::size_t count = std::min(packets_.size(), capacity);
  std::vector<Packet> delivered;
  delivered.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (order == ServiceOrder::fifo) {
      delivered.push_back(packets_.front());
      packets_.pop_front();
    } else {
      delivered.push_back(packets_.back());
      packets_.pop_back();
    }
  }
  return delivered;
}

std::vector<Packet> generate_arrivals(double arrival_rate_pkts, int slot,
                                      double slot_duration_s,
                                      RandomStream& rng) {
  if (arrival_rate_pkts < 0.0) {
    throw std::invalid_argument("generate_arrivals: rate must be >= 0");
  }
  const double whole = std::floor(arrival_rate_pkts);
  const double frac = arrival_rate_pkts - whole;
  auto count = static_cast<std::size_t>(whole);
  if (frac > 0.0 && rng.uniform01() < frac) ++count;

  const double stamp = slot_duration_s * slot;
  return std::vector<Packet>(count, Packet{stamp});
}

std::vector<Packet> deliver_and_update(SensorQueue& queue, double rate_pkts,
                                       ServiceOrder order) {
  if (rate_pkts < 0.0) {
    throw std::invalid_argument("deliver_and_update: rate must be >= 0");
  }
  return queue.pop_delivered(rate_pkts, order);
}

AoiState update_aoi(const AoiState& state, const std::vector<Packet>& delivered,
                    int slot, double slot_duration_s) {
  AoiState next = state;
  if (delivered.empty()) {
    next.aoi_s = state.aoi_s + slot_duration_s;
    return next;
  }
  double freshest = delivered.front().generation_time_s;
  for (const Packet& p : delivered) {
    freshest = std::max(freshest, p.generation_time_s);
  }
  if (freshest > slot_duration_s * slot) {
    throw std::logic_error("update_aoi: delivered packet stamped in the future");
  }
  next.last_delivered_generation_s = freshest;
  next.aoi_s = slot_duration_s * (slot + 1) - freshest;
  return next;
}

}  // namespace infsim
