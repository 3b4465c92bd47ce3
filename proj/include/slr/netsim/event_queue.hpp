#pragma once

#include <cstdint>
#include <queue>
#include <utility>
#include <vector>

namespace slr::netsim {

// Simulation time in integer picoseconds.
using TimePs = std::int64_t;

// Min-heap keyed on (time, priority, insertion order). Events with equal time
// and priority pop in the order they were pushed.
template <typename Event>
class EventQueue {
 public:
  struct Entry {
    TimePs time;
    int priority;
    std::uint64_t seq;
    Event event;
  };

  void push(TimePs time, int priority, Event event) {
    heap_.push(Entry{time, priority, next_seq_++, std::move(event)});
  }

  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }
  TimePs next_time() const { return heap_.top().time; }

  Entry pop() {
    Entry e = heap_.top();
    heap_.pop();
    return e;
  }

 private:
  struct Later {
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.time != b.time) return a.time > b.time;
      if (a.priority != b.priority) return a.priority > b.priority;
      return a.seq > b.seq;
    }
  };

  std::priority_queue<Entry, std::vector<Entry>, Later> heap_;
  std::uint64_t next_seq_ = 0;
};

}  // namespace slr::netsim
