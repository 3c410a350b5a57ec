#include "polarga/crc.hpp"

#include <stdexcept>

namespace polarga {

BitVec crc16_ccitt_poly() {
    BitVec poly(17, 0);
    poly[0] = 1;   // x^16
    poly[4] = 1;   // x^12
    poly[11] = 1;  // x^5
    poly[16] = 1;  // 1
    return poly;
}

BitVec crc8_poly() {
    BitVec poly(9, 0);
    poly[0] = 1;  // x^8
    poly[6] = 1;  // x^2
    poly[7] = 1;  // x
    poly[8] = 1;  // 1
    return poly;
}

namespace {

void validate_poly(const BitVec& poly) {
    if (poly.size() < 2 || poly.front() != 1 || poly.back() != 1)
        throw std::invalid_argument("crc: degenerate polynomial (need degree >= 1 with x^r and x^0 terms)");
}

// Remainder of word * x^r mod poly when shift_in_zeros, else of word itself.
BitVec remainder_msb_first(const BitVec& word, const BitVec& poly, bool shift_in_zeros) {
    const size_t r = poly.size() - 1;
    BitVec reg(word);
    if (shift_in_zeros) reg.insert(reg.end(), r, 0);
    for (size_t i = 0; i + r < reg.size(); ++i) {
        if (!reg[i]) continue;
        for (size_t j = 0; j <= r; ++j) reg[i + j] ^= poly[j];
    }
    return BitVec(reg.end() - static_cast<long>(r), reg.end());
}

}  // namespace

int crc_degree(const BitVec& poly) {
    validate_poly(poly);
    return static_cast<int>(poly.size()) - 1;
}

BitVec crc_attach(const BitVec& payload, const BitVec& poly) {
    validate_poly(poly);
    BitVec out = payload;
    const BitVec rem = remainder_msb_first(payload, poly, true);
    out.insert(out.end(), rem.begin(), rem.end());
    return out;
}

bool crc_check(const BitVec& word, const BitVec& poly) {
    validate_poly(poly);
    if (word.size() < poly.size() - 1)
        throw std::invalid_argument("crc_check: word shorter than the CRC field");
    const BitVec rem = remainder_msb_first(word, poly, false);
    for (uint8_t b : rem)
        if (b) return false;
    return true;
}

}  // namespace polarga
