#pragma once

#include <cstdint>
#include <functional>

namespace polarga {

// Splits [begin, end) into at most `threads` contiguous subranges and runs
// `body(sub_begin, sub_end, slot)` on each, where `slot` is the subrange
// index. Partitioning depends only on the range and thread count, so callers
// that reduce per-slot results in slot order get thread-count-independent
// totals as long as the per-index work is itself deterministic.
void parallel_for_ranges(int64_t begin, int64_t end, int threads,
                         const std::function<void(int64_t, int64_t, int)>& body);

// Number of workers actually used for a range (also the number of slots).
int parallel_slot_count(int64_t range, int threads);

// Resolves a user-facing thread-count argument (0 = auto).
int resolve_threads(int requested);

}  // namespace polarga
