#pragma once

#include "polarga/polar_code.hpp"

namespace polarga {

// Generator polynomials are bit vectors of length degree+1, MSB first.
// x^16 + x^12 + x^5 + 1 (CCITT), initial register all-zero, no reflection,
// no final XOR.
BitVec crc16_ccitt_poly();

// x^8 + x^2 + x + 1.
BitVec crc8_poly();

int crc_degree(const BitVec& poly);

// Appends the degree(poly)-bit remainder of payload * 2^r mod poly
// (MSB-first polynomial division). Output length = payload size + r.
BitVec crc_attach(const BitVec& payload, const BitVec& poly);

// Remainder-zero test under the same division convention.
bool crc_check(const BitVec& word, const BitVec& poly);

}  // namespace polarga
