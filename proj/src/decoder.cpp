#include "polarga/decoder.hpp"

#include <stdexcept>

#include "polarga/bp_decoder.hpp"
#include "polarga/crc.hpp"
#include "polarga/sc_decoder.hpp"
#include "polarga/scl_decoder.hpp"

namespace polarga {

namespace {

int parse_paren_int(const std::string& text, size_t open, const char* what) {
    if (open == std::string::npos || text.back() != ')')
        throw std::invalid_argument(std::string("DecoderSpec: expected ") + what + "(<int>)");
    const std::string inner = text.substr(open + 1, text.size() - open - 2);
    size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(inner, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("DecoderSpec: bad integer in '" + text + "'");
    }
    if (used != inner.size() || value < 1)
        throw std::invalid_argument("DecoderSpec: bad integer in '" + text + "'");
    return value;
}

}  // namespace

DecoderSpec DecoderSpec::parse(const std::string& text) {
    DecoderSpec spec;
    if (text == "SC") {
        spec.kind = Kind::Sc;
        return spec;
    }
    if (text.rfind("SCL+CRC-", 0) == 0) {
        spec.kind = Kind::SclCrc;
        const size_t open = text.find('(');
        if (open == std::string::npos)
            throw std::invalid_argument("DecoderSpec: expected SCL+CRC-r(L)");
        const std::string r_text = text.substr(8, open - 8);
        try {
            spec.crc_bits = std::stoi(r_text);
        } catch (const std::exception&) {
            throw std::invalid_argument("DecoderSpec: bad CRC size in '" + text + "'");
        }
        if (spec.crc_bits != 8 && spec.crc_bits != 16)
            throw std::invalid_argument("DecoderSpec: supported CRC sizes are 8 and 16");
        spec.list_size = parse_paren_int(text, open, "SCL+CRC-r");
        return spec;
    }
    if (text.rfind("SCL", 0) == 0) {
        spec.kind = Kind::Scl;
        spec.list_size = parse_paren_int(text, text.find('('), "SCL");
        return spec;
    }
    if (text.rfind("BP", 0) == 0) {
        spec.kind = Kind::Bp;
        spec.max_iterations = parse_paren_int(text, text.find('('), "BP");
        return spec;
    }
    throw std::invalid_argument("DecoderSpec: unknown decoder '" + text +
                                "' (expected SC, SCL(L), SCL+CRC-r(L) or BP(N))");
}

std::string DecoderSpec::to_string() const {
    switch (kind) {
        case Kind::Sc:
            return "SC";
        case Kind::Scl:
            return "SCL(" + std::to_string(list_size) + ")";
        case Kind::SclCrc:
            return "SCL+CRC-" + std::to_string(crc_bits) + "(" + std::to_string(list_size) + ")";
        case Kind::Bp:
            return "BP(" + std::to_string(max_iterations) + ")";
    }
    return "SC";
}

SclConfig DecoderSpec::scl_config() const {
    SclConfig cfg;
    cfg.list_size = list_size;
    if (kind == Kind::SclCrc) {
        cfg.crc_bits = crc_bits;
        cfg.crc_poly = crc_bits == 8 ? crc8_poly() : crc16_ccitt_poly();
    }
    return cfg;
}

BpConfig DecoderSpec::bp_config() const {
    BpConfig cfg;
    cfg.max_iterations = max_iterations;
    cfg.early_stop = true;
    return cfg;
}

std::unique_ptr<Decoder> make_decoder(const PolarCode& code, const DecoderSpec& spec) {
    switch (spec.kind) {
        case DecoderSpec::Kind::Sc:
            return std::make_unique<ScDecoder>(code);
        case DecoderSpec::Kind::Scl:
        case DecoderSpec::Kind::SclCrc:
            return std::make_unique<SclDecoder>(code, spec.scl_config());
        case DecoderSpec::Kind::Bp:
            return std::make_unique<BpDecoder>(code, spec.bp_config());
    }
    throw std::logic_error("make_decoder: unreachable");
}

}  // namespace polarga
