#include "polarga/sc_decoder.hpp"

#include <stdexcept>

#include "polarga/llr_math.hpp"

namespace polarga {

ScDecoder::ScDecoder(PolarCode code) : code_(std::move(code)) {
    const size_t len = static_cast<size_t>(code_.block_length);
    alpha_.assign(static_cast<size_t>(code_.n) + 1, std::vector<double>(len, 0.0));
    beta_.assign(static_cast<size_t>(code_.n) + 1, std::vector<uint8_t>(len, 0));
    u_hat_.assign(len, 0);
}

void ScDecoder::decode_segment(int depth, int pos, int len) {
    if (len == 1) {
        uint8_t bit = 0;
        if (code_.a[pos]) bit = alpha_[depth][pos] < 0.0 ? 1 : 0;
        u_hat_[pos] = bit;
        beta_[depth][pos] = bit;
        return;
    }
    const int half = len / 2;
    const auto& in = alpha_[depth];
    auto& out = alpha_[depth + 1];

    for (int i = 0; i < half; ++i)
        out[pos + i] = boxplus(in[pos + i], in[pos + half + i]);
    decode_segment(depth + 1, pos, half);

    const auto& left = beta_[depth + 1];
    for (int i = 0; i < half; ++i)
        out[pos + half + i] = (left[pos + i] ? -in[pos + i] : in[pos + i]) + in[pos + half + i];
    decode_segment(depth + 1, pos + half, half);

    const auto& right = beta_[depth + 1];
    auto& sums = beta_[depth];
    for (int i = 0; i < half; ++i) {
        sums[pos + i] = left[pos + i] ^ right[pos + half + i];
        sums[pos + half + i] = right[pos + half + i];
    }
}

DecodeResult ScDecoder::decode(const LlrFrame& frame) {
    if (static_cast<int>(frame.llrs.size()) != code_.block_length)
        throw std::invalid_argument("ScDecoder: frame length does not match block length");
    for (int m = 0; m < code_.block_length; ++m)
        alpha_[0][m] = frame.llrs[bit_reverse(m, code_.n)];
    decode_segment(0, 0, code_.block_length);

    DecodeResult result;
    result.u_hat = u_hat_;
    result.x_hat.resize(static_cast<size_t>(code_.block_length));
    for (int j = 0; j < code_.block_length; ++j)
        result.x_hat[j] = beta_[0][bit_reverse(j, code_.n)];
    return result;
}

}  // namespace polarga
