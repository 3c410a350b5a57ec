#pragma once

#include "polarga/polar_code.hpp"
#include "polarga/rng.hpp"

namespace polarga {

// Binary-input AWGN channel at a given E_b/N_0. The rate term converts
// energy per information bit into energy per BPSK symbol:
// sigma^2 = 1 / (2 * R_c * 10^(ebn0_db/10)).
struct ChannelParams {
    double ebn0_db = 0.0;
    double code_rate = 0.5;
    double sigma = 0.0;

    static ChannelParams from_ebn0(double ebn0_db, double code_rate);
    double noise_variance() const { return sigma * sigma; }
};

// Channel log-likelihood ratios log P(y|x=0)/P(y|x=1) for one received word,
// in natural codeword order.
struct LlrFrame {
    std::vector<double> llrs;
};

// BPSK: bit 0 -> +1.0, bit 1 -> -1.0.
std::vector<double> modulate(const BitVec& x);

// Adds i.i.d. N(0, sigma^2) noise; reproducible from the stream state.
std::vector<double> transmit(const std::vector<double>& symbols, const ChannelParams& params,
                             RandomStream& noise_stream);

// llrs[i] = 2 * received[i] / sigma^2.
LlrFrame compute_llrs(const std::vector<double>& received, const ChannelParams& params);

}  // namespace polarga
