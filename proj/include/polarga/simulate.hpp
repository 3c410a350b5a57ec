#pragma once

#include <string>

#include "polarga/decoder.hpp"
#include "polarga/error_stats.hpp"
#include "polarga/reliability.hpp"

namespace polarga {

// Encodes, transmits and decodes single frames for one (code, decoder, SNR)
// combination. Owns the decoder instance, so one simulator serves one thread.
//
// Per-frame randomness comes from a counter-derived stream: the payload bits
// are drawn first (k - r bits), then the N noise variates. Two simulators fed
// the same frame seed therefore see identical noise even when their codes
// differ in the information mask, which is what generation-level
// common-random-number evaluation relies on.
class FrameSimulator {
  public:
    FrameSimulator(const PolarCode& code, const DecoderSpec& spec, double snr_db);

    // Simulates one frame; counts errors over the user bits only.
    ErrorStats run_frame(uint64_t frame_seed);

    int user_bits() const { return user_bits_; }
    const ChannelParams& channel() const { return params_; }

  private:
    PolarCode code_;
    DecoderSpec spec_;
    ChannelParams params_;
    std::unique_ptr<Decoder> decoder_;
    std::vector<int> info_positions_;
    int user_bits_ = 0;  // k - r
    BitVec payload_, word_, u_;
};

// E_b/N_0 accounts for CRC overhead: rate = (k - r) / N.
double effective_code_rate(const PolarCode& code, const DecoderSpec& spec);

struct StopRule {
    uint64_t min_block_errors = 500;
    uint64_t max_frames = 10'000'000;
};

struct SweepPoint {
    double snr_db = 0.0;
    ErrorStats stats;
};

struct SweepResult {
    std::vector<SweepPoint> points;
    std::string decoder_tag;
    uint64_t code_digest = 0;
};

// Per SNR point, simulates frames until >= min_block_errors block errors or
// >= max_frames frames, whichever comes first (checked at fixed-size chunk
// boundaries so the result is independent of the thread count). Frame i of
// SNR point s uses the stream seed hash(master_seed, s, i).
SweepResult monte_carlo_sweep(const PolarCode& code, const DecoderSpec& spec,
                              const std::vector<double>& snr_list_db, const StopRule& stop,
                              uint64_t master_seed, int threads = 1);

// Measures the same frames for several codes at one SNR point (common random
// numbers), until every code has >= min_block_errors block errors or
// max_frames is reached.
std::vector<ErrorStats> measure_common_noise(const std::vector<PolarCode>& codes,
                                             const DecoderSpec& spec, double snr_db,
                                             const StopRule& stop, uint64_t master_seed,
                                             int threads = 1);

// Frozen-position chart: positions sorted by decreasing profile value (ties
// by index), frozen flags emitted row-major into an (N/columns) x columns
// matrix; 1 = frozen. `columns` must divide N.
std::vector<std::vector<uint8_t>> frozen_chart(const PolarCode& code,
                                               const ReliabilityProfile& profile, int columns);

}  // namespace polarga
