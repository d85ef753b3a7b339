#include "dynlabel/simnet/metrics.hpp"

#include <algorithm>

namespace dynlabel::simnet {

void SizeTracker::set(NodeId v, std::uint64_t bits) {
  erase(v);
  if (v.index() >= value_.size()) {
    value_.resize(v.index() + 1, 0);
    present_.resize(v.index() + 1, false);
  }
  value_[v.index()] = bits;
  present_[v.index()] = true;
  ++histogram_[bits];
  peak_ = std::max(peak_, bits);
}

void SizeTracker::erase(NodeId v) {
  if (v.index() >= present_.size() || !present_[v.index()]) return;
  auto it = histogram_.find(value_[v.index()]);
  if (--it->second == 0) histogram_.erase(it);
  present_[v.index()] = false;
}

std::uint64_t SizeTracker::value(NodeId v) const {
  return v.index() < present_.size() && present_[v.index()] ? value_[v.index()] : 0;
}

void MetricsLedger::record_reset(std::uint32_t level) {
  if (resets_per_level.size() < level) resets_per_level.resize(level, 0);
  ++resets_per_level[level - 1];
}

void write_metrics_csv(std::ostream& out, const std::vector<EventRecord>& events) {
  out << "event,n,messages,maxLabelBits,maxMemBits\n";
  for (const EventRecord& e : events) {
    out << e.event << ',' << e.n << ',' << e.messages << ',' << e.max_label_bits << ',' << e.max_memory_bits
        << '\n';
  }
}

}  // namespace dynlabel::simnet
