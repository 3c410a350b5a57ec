#pragma once

#include "polarga/decoder.hpp"

namespace polarga {

// Flooding belief propagation on the n-stage encoding graph of F^{(x)n}.
// Layer 0 is the u side (priors: +cap at frozen positions, 0 at information
// positions), layer n the codeword side (channel LLRs in graph order). One
// iteration is a full left-propagating pass followed by a full
// right-propagating pass, with exact boxplus check updates and all messages
// clamped to +-cap. With early_stop enabled, decoding terminates once the
// hard decisions satisfy the G-matrix rule encode(u_hat) == x_hat.
class BpDecoder : public Decoder {
  public:
    BpDecoder(PolarCode code, BpConfig cfg);
    DecodeResult decode(const LlrFrame& frame) override;

    static constexpr double kLlrCap = 50.0;

  private:
    PolarCode code_;
    BpConfig cfg_;
    // messages[layer][position], layers 0..n
    std::vector<std::vector<double>> left_;   // flowing toward u
    std::vector<std::vector<double>> right_;  // flowing toward x
    BitVec u_hat_;
    BitVec x_hat_graph_;
};

}  // namespace polarga
