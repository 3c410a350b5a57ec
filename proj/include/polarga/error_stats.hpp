#pragma once

#include <cstdint>

namespace polarga {

// Monte-Carlo error counts for one measurement point.
struct ErrorStats {
    uint64_t frames = 0;
    uint64_t bit_errors = 0;
    uint64_t block_errors = 0;
    uint32_t info_bits_per_frame = 0;

    double ber() const {
        return frames == 0 ? 0.0
                           : static_cast<double>(bit_errors) /
                                 (static_cast<double>(frames) * info_bits_per_frame);
    }
    double bler() const {
        return frames == 0 ? 0.0 : static_cast<double>(block_errors) / static_cast<double>(frames);
    }

    void merge(const ErrorStats& other) {
        frames += other.frames;
        bit_errors += other.bit_errors;
        block_errors += other.block_errors;
        info_bits_per_frame = other.info_bits_per_frame;
    }
};

}  // namespace polarga
