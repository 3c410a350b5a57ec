#pragma once

#include <memory>
#include <string>

#include "polarga/channel.hpp"
#include "polarga/polar_code.hpp"

namespace polarga {

struct SclConfig {
    int list_size = 1;
    int crc_bits = 0;
    BitVec crc_poly;  // degree crc_bits, empty when crc_bits == 0
};

struct BpConfig {
    int max_iterations = 200;
    bool early_stop = true;  // G-matrix rule
};

struct DecodeResult {
    BitVec u_hat;              // information estimate, frozen positions 0
    BitVec x_hat;              // codeword estimate
    int iterations_used = 0;   // BP only
    bool early_stopped = false;  // BP only
};

// A decoder instance owns scratch buffers: do not call decode() on the same
// instance from two threads. Distinct instances are independent and cheap to
// construct from (code, config).
class Decoder {
  public:
    virtual ~Decoder() = default;
    virtual DecodeResult decode(const LlrFrame& frame) = 0;
};

// Parsed decoder selection: "SC", "SCL(L)", "SCL+CRC-r(L)" or "BP(N_it_max)".
struct DecoderSpec {
    enum class Kind { Sc, Scl, SclCrc, Bp };
    Kind kind = Kind::Sc;
    int list_size = 1;
    int crc_bits = 0;
    int max_iterations = 200;

    static DecoderSpec parse(const std::string& text);
    std::string to_string() const;
    SclConfig scl_config() const;
    BpConfig bp_config() const;
};

std::unique_ptr<Decoder> make_decoder(const PolarCode& code, const DecoderSpec& spec);

}  // namespace polarga
