#include "polarga/simulate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "polarga/code_file.hpp"
#include "polarga/crc.hpp"
#include "polarga/parallel.hpp"
#include "polarga/rng.hpp"

namespace polarga {

double effective_code_rate(const PolarCode& code, const DecoderSpec& spec) {
    const int r = spec.kind == DecoderSpec::Kind::SclCrc ? spec.crc_bits : 0;
    const int user_bits = code.dimension - r;
    if (user_bits < 1)
        throw std::invalid_argument("effective_code_rate: CRC leaves no user bits");
    return static_cast<double>(user_bits) / code.block_length;
}

FrameSimulator::FrameSimulator(const PolarCode& code, const DecoderSpec& spec, double snr_db)
    : code_(code),
      spec_(spec),
      params_(ChannelParams::from_ebn0(snr_db, effective_code_rate(code, spec))),
      decoder_(make_decoder(code, spec)),
      info_positions_(code.info_positions()) {
    const int r = spec.kind == DecoderSpec::Kind::SclCrc ? spec.crc_bits : 0;
    user_bits_ = code.dimension - r;
    payload_.resize(static_cast<size_t>(user_bits_));
    u_.assign(static_cast<size_t>(code.block_length), 0);
}

ErrorStats FrameSimulator::run_frame(uint64_t frame_seed) {
    RandomStream stream(frame_seed);
    for (auto& b : payload_) b = static_cast<uint8_t>(stream.bit());
    if (spec_.kind == DecoderSpec::Kind::SclCrc)
        word_ = crc_attach(payload_, spec_.scl_config().crc_poly);
    else
        word_ = payload_;

    std::fill(u_.begin(), u_.end(), 0);
    for (size_t w = 0; w < word_.size(); ++w) u_[info_positions_[w]] = word_[w];

    const BitVec x = polar_encode(code_, u_);
    const std::vector<double> y = transmit(modulate(x), params_, stream);
    const DecodeResult decoded = decoder_->decode(compute_llrs(y, params_));

    ErrorStats stats;
    stats.frames = 1;
    stats.info_bits_per_frame = static_cast<uint32_t>(user_bits_);
    for (int w = 0; w < user_bits_; ++w)
        if (decoded.u_hat[info_positions_[w]] != payload_[w]) ++stats.bit_errors;
    if (stats.bit_errors > 0) stats.block_errors = 1;
    return stats;
}

namespace {

// Stop-rule granularity. Fixed so that the frame count at which a sweep stops
// does not depend on the thread count.
constexpr uint64_t kFrameChunk = 2048;

}  // namespace

SweepResult monte_carlo_sweep(const PolarCode& code, const DecoderSpec& spec,
                              const std::vector<double>& snr_list_db, const StopRule& stop,
                              uint64_t master_seed, int threads) {
    if (snr_list_db.empty()) throw std::invalid_argument("monte_carlo_sweep: empty SNR list");
    for (size_t i = 1; i < snr_list_db.size(); ++i)
        if (!(snr_list_db[i] > snr_list_db[i - 1]))
            throw std::invalid_argument("monte_carlo_sweep: SNR points must be strictly increasing");

    SweepResult result;
    result.decoder_tag = spec.to_string();
    result.code_digest = code_digest(code);

    for (size_t snr_index = 0; snr_index < snr_list_db.size(); ++snr_index) {
        const double snr_db = snr_list_db[snr_index];
        ErrorStats total;
        uint64_t next_frame = 0;
        while (total.block_errors < stop.min_block_errors && next_frame < stop.max_frames) {
            const uint64_t count = std::min(kFrameChunk, stop.max_frames - next_frame);
            const int slots =
                std::max(1, parallel_slot_count(static_cast<int64_t>(count), threads));
            std::vector<ErrorStats> partial(static_cast<size_t>(slots));
            parallel_for_ranges(
                static_cast<int64_t>(next_frame), static_cast<int64_t>(next_frame + count),
                threads, [&](int64_t lo, int64_t hi, int slot) {
                    FrameSimulator sim(code, spec, snr_db);
                    for (int64_t f = lo; f < hi; ++f) {
                        const uint64_t seed = seed_hash(
                            {master_seed, static_cast<uint64_t>(snr_index), static_cast<uint64_t>(f)});
                        partial[static_cast<size_t>(slot)].merge(sim.run_frame(seed));
                    }
                });
            for (const auto& p : partial) total.merge(p);
            next_frame += count;
        }
        result.points.push_back({snr_db, total});
    }
    return result;
}

std::vector<ErrorStats> measure_common_noise(const std::vector<PolarCode>& codes,
                                             const DecoderSpec& spec, double snr_db,
                                             const StopRule& stop, uint64_t master_seed,
                                             int threads) {
    if (codes.empty()) throw std::invalid_argument("measure_common_noise: no codes");
    const size_t lanes = codes.size();
    std::vector<ErrorStats> totals(lanes);
    uint64_t next_frame = 0;
    auto min_block_errors = [&totals] {
        uint64_t m = UINT64_MAX;
        for (const auto& s : totals) m = std::min(m, s.block_errors);
        return m;
    };
    while (min_block_errors() < stop.min_block_errors && next_frame < stop.max_frames) {
        const uint64_t count = std::min(kFrameChunk, stop.max_frames - next_frame);
        const int slots = std::max(1, parallel_slot_count(static_cast<int64_t>(count), threads));
        std::vector<std::vector<ErrorStats>> partial(static_cast<size_t>(slots),
                                                     std::vector<ErrorStats>(lanes));
        parallel_for_ranges(
            static_cast<int64_t>(next_frame), static_cast<int64_t>(next_frame + count), threads,
            [&](int64_t lo, int64_t hi, int slot) {
                std::vector<std::unique_ptr<FrameSimulator>> sims;
                sims.reserve(lanes);
                for (const auto& c : codes)
                    sims.push_back(std::make_unique<FrameSimulator>(c, spec, snr_db));
                auto& acc = partial[static_cast<size_t>(slot)];
                for (int64_t f = lo; f < hi; ++f) {
                    const uint64_t seed = seed_hash({master_seed, 0, static_cast<uint64_t>(f)});
                    for (size_t lane = 0; lane < lanes; ++lane)
                        acc[lane].merge(sims[lane]->run_frame(seed));
                }
            });
        for (const auto& slot_stats : partial)
            for (size_t lane = 0; lane < lanes; ++lane) totals[lane].merge(slot_stats[lane]);
        next_frame += count;
    }
    return totals;
}

std::vector<std::vector<uint8_t>> frozen_chart(const PolarCode& code,
                                               const ReliabilityProfile& profile, int columns) {
    const int len = code.block_length;
    if (static_cast<int>(profile.values.size()) != len)
        throw std::invalid_argument("frozen_chart: profile length does not match the code");
    if (columns < 1 || len % columns != 0)
        throw std::invalid_argument("frozen_chart: columns must divide the block length");
    std::vector<int> order(static_cast<size_t>(len));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int lhs, int rhs) {
        return profile.values[lhs] > profile.values[rhs];
    });
    const int rows = len / columns;
    std::vector<std::vector<uint8_t>> chart(static_cast<size_t>(rows),
                                            std::vector<uint8_t>(static_cast<size_t>(columns), 0));
    for (int idx = 0; idx < len; ++idx) {
        const uint8_t frozen = code.a[order[idx]] ? 0 : 1;
        chart[idx / columns][idx % columns] = frozen;
    }
    return chart;
}

}  // namespace polarga
