#include "polarga/bp_decoder.hpp"

#include <stdexcept>

#include "polarga/llr_math.hpp"

namespace polarga {

BpDecoder::BpDecoder(PolarCode code, BpConfig cfg) : code_(std::move(code)), cfg_(cfg) {
    if (cfg_.max_iterations < 1)
        throw std::invalid_argument("BpDecoder: max_iterations must be >= 1");
    const size_t len = static_cast<size_t>(code_.block_length);
    left_.assign(static_cast<size_t>(code_.n) + 1, std::vector<double>(len, 0.0));
    right_.assign(static_cast<size_t>(code_.n) + 1, std::vector<double>(len, 0.0));
    u_hat_.assign(len, 0);
    x_hat_graph_.assign(len, 0);
}

DecodeResult BpDecoder::decode(const LlrFrame& frame) {
    const int len = code_.block_length;
    if (static_cast<int>(frame.llrs.size()) != len)
        throw std::invalid_argument("BpDecoder: frame length does not match block length");
    const int stages = code_.n;

    // Right-boundary priors on u, left boundary = channel LLRs (graph order).
    for (int i = 0; i < len; ++i) right_[0][i] = code_.a[i] ? 0.0 : kLlrCap;
    for (int m = 0; m < len; ++m)
        left_[stages][m] = clamp_llr(frame.llrs[bit_reverse(m, code_.n)], kLlrCap);
    for (int s = 1; s <= stages; ++s) std::fill(right_[s].begin(), right_[s].end(), 0.0);
    for (int s = 0; s < stages; ++s) std::fill(left_[s].begin(), left_[s].end(), 0.0);

    DecodeResult result;
    int iterations = 0;
    bool converged = false;
    while (iterations < cfg_.max_iterations && !converged) {
        ++iterations;
        // Left pass: stage s connects layer s (u side) to layer s+1 (x side);
        // positions p and p+inc pair up, layer_{s+1}[p] = layer_s[p] ^ layer_s[p+inc].
        for (int s = stages - 1; s >= 0; --s) {
            const int inc = 1 << s;
            const auto& lin = left_[s + 1];
            const auto& rin = right_[s];
            auto& lout = left_[s];
            for (int base = 0; base < len; base += 2 * inc) {
                for (int j = 0; j < inc; ++j) {
                    const int p = base + j;
                    const int q = p + inc;
                    lout[p] = clamp_llr(boxplus(lin[p], lin[q] + rin[q]), kLlrCap);
                    lout[q] = clamp_llr(lin[q] + boxplus(lin[p], rin[p]), kLlrCap);
                }
            }
        }
        // Right pass.
        for (int s = 0; s < stages; ++s) {
            const int inc = 1 << s;
            const auto& lin = left_[s + 1];
            const auto& rin = right_[s];
            auto& rout = right_[s + 1];
            for (int base = 0; base < len; base += 2 * inc) {
                for (int j = 0; j < inc; ++j) {
                    const int p = base + j;
                    const int q = p + inc;
                    rout[p] = clamp_llr(boxplus(rin[p], lin[q] + rin[q]), kLlrCap);
                    rout[q] = clamp_llr(rin[q] + boxplus(rin[p], lin[p]), kLlrCap);
                }
            }
        }

        for (int i = 0; i < len; ++i)
            u_hat_[i] = code_.a[i] ? (left_[0][i] + right_[0][i] < 0.0 ? 1 : 0) : 0;
        for (int m = 0; m < len; ++m)
            x_hat_graph_[m] = left_[stages][m] + right_[stages][m] < 0.0 ? 1 : 0;
        if (cfg_.early_stop) converged = polar_transform_natural(u_hat_) == x_hat_graph_;
    }

    result.u_hat = u_hat_;
    result.x_hat.resize(static_cast<size_t>(len));
    for (int j = 0; j < len; ++j) result.x_hat[j] = x_hat_graph_[bit_reverse(j, code_.n)];
    result.iterations_used = iterations;
    result.early_stopped = converged;
    return result;
}

}  // namespace polarga
