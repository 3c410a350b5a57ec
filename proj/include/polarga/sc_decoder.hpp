#pragma once

#include "polarga/decoder.hpp"

namespace polarga {

// Successive cancellation. Bits are decided in natural u-order; channel LLRs
// enter in codeword order and are internally permuted by bit-reversal into
// the graph order of F^{(x)n}. Ties (LLR exactly 0) decide 0.
class ScDecoder : public Decoder {
  public:
    explicit ScDecoder(PolarCode code);
    DecodeResult decode(const LlrFrame& frame) override;

  private:
    void decode_segment(int depth, int pos, int len);

    PolarCode code_;
    // Per-depth scratch, segment [pos, pos+len) of depth d lives in
    // alpha_[d][pos..pos+len) / beta_[d][pos..pos+len).
    std::vector<std::vector<double>> alpha_;
    std::vector<std::vector<uint8_t>> beta_;
    BitVec u_hat_;
};

}  // namespace polarga
