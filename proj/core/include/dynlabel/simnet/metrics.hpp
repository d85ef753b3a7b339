#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "dynlabel/types.hpp"

namespace dynlabel::simnet {

/// Per-node sizes with the current maximum over live entries and the all-time peak.
class SizeTracker {
 public:
  void set(NodeId v, std::uint64_t bits);
  void erase(NodeId v);
  std::uint64_t current_max() const { return histogram_.empty() ? 0 : histogram_.rbegin()->first; }
  std::uint64_t peak() const { return peak_; }
  std::uint64_t value(NodeId v) const;

 private:
  std::vector<std::uint64_t> value_;
  std::vector<bool> present_;
  std::map<std::uint64_t, std::uint64_t> histogram_;
  std::uint64_t peak_ = 0;
};

struct EventRecord {
  std::uint64_t event = 0;
  std::uint64_t n = 0;
  std::uint64_t messages = 0;
  std::uint64_t max_label_bits = 0;
  std::uint64_t max_memory_bits = 0;
};

struct RestartRecord {
  std::uint64_t event = 0;
  std::uint64_t n0 = 0;
  std::uint64_t additions = 0;
  std::uint64_t deletions = 0;
};

struct MetricsLedger {
  std::uint64_t messages_sent = 0;
  std::uint64_t max_label_bits = 0;
  std::uint64_t max_memory_bits = 0;
  std::vector<std::uint64_t> resets_per_level;  // index l-1
  std::uint64_t phases = 0;
  std::vector<RestartRecord> restarts;
  std::vector<EventRecord> events;

  void record_reset(std::uint32_t level);
};

/// `event,n,messages,maxLabelBits,maxMemBits`
void write_metrics_csv(std::ostream& out, const std::vector<EventRecord>& events);

}  // namespace dynlabel::simnet
