#pragma once

#include <atomic>

namespace croots {

/// Run counters shared across the call tree.  All operations accept a
/// nullable pointer; members are atomic so concurrent callers can share one.
struct Telemetry {
  std::atomic<long long> subdivision_exclusion_tests{0};  // the paper's n
  std::atomic<long long> exclusion_tests{0};              // every ET invocation
  std::atomic<long long> power_sum_calls{0};
  std::atomic<long long> oracle_evaluations{0};
  std::atomic<long> max_precision_bits{0};

  void note_precision(long bits) {
    long cur = max_precision_bits.load(std::memory_order_relaxed);
    while (bits > cur &&
           !max_precision_bits.compare_exchange_weak(cur, bits, std::memory_order_relaxed)) {
    }
  }
};

}  // namespace croots
