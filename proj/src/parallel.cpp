#include "polarga/parallel.hpp"

#include <algorithm>
#include <thread>
#include <vector>

namespace polarga {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

int parallel_slot_count(int64_t range, int threads) {
    if (range <= 0) return 0;
    return static_cast<int>(std::min<int64_t>(range, std::max(threads, 1)));
}

void parallel_for_ranges(int64_t begin, int64_t end, int threads,
                         const std::function<void(int64_t, int64_t, int)>& body) {
    const int64_t range = end - begin;
    const int slots = parallel_slot_count(range, threads);
    if (slots <= 0) return;
    if (slots == 1) {
        body(begin, end, 0);
        return;
    }
    const int64_t chunk = range / slots;
    const int64_t rem = range % slots;
    std::vector<std::thread> workers;
    workers.reserve(static_cast<size_t>(slots));
    int64_t cursor = begin;
    for (int s = 0; s < slots; ++s) {
        const int64_t len = chunk + (s < rem ? 1 : 0);
        const int64_t lo = cursor;
        const int64_t hi = cursor + len;
        cursor = hi;
        workers.emplace_back([&body, lo, hi, s] { body(lo, hi, s); });
    }
    for (auto& w : workers) w.join();
}

}  // namespace polarga
