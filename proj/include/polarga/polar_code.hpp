#pragma once

#include <cstdint>
#include <vector>

namespace polarga {

// Bits are stored one per byte, values 0/1.
using BitVec = std::vector<uint8_t>;

// Reverses the n-bit binary expansion of index. Involutive.
int bit_reverse(int index, int n);

// A polar code of length N = 2^n with k non-frozen positions.
//
// The information mask `a` uses natural u-ordering with 0-based indices
// internally; every user-facing format (code files, printed index sets)
// is 1-based. a[i] == 1 means u position i carries information, a[i] == 0
// means it is frozen to zero.
struct PolarCode {
    int n = 0;
    int block_length = 0;  // N = 2^n
    int dimension = 0;     // k = number of ones in a
    BitVec a;              // length N

    // Validates N = 2^n and counts k. Throws std::invalid_argument.
    static PolarCode from_a_vector(BitVec a_vector);

    // Builds the mask from 1-based information-set indices.
    static PolarCode from_info_set(int n, const std::vector<int>& info_set_1based);

    // 0-based non-frozen positions, ascending.
    std::vector<int> info_positions() const;

    // 1-based information set, ascending.
    std::vector<int> info_set_1based() const;
};

// x = u * G_N over GF(2) with G_N = B_N * F^{(x)n}. The bit-reversal B_N is
// applied as an index permutation on u, followed by the in-place butterfly
// of F^{(x)n}; O(N log N), bit-exact equal to the explicit matrix product.
BitVec polar_encode(const PolarCode& code, const BitVec& u);

// Same butterfly without the bit-reversal step, i.e. w = u * F^{(x)n}.
// This is the transform in "graph order": w[m] equals codeword bit
// x[bit_reverse(m)]. Decoders and the encoding factor graph work in this
// order so that u stays in natural order.
BitVec polar_transform_natural(const BitVec& u);

// Hamming weight of row `row_1based` of G_N; equals 2^popcount(row-1).
int row_weight(int block_length, int row_1based);

// Minimum row weight of G_N over the non-frozen rows. Reported as the
// code's minimum distance (the row-weight rule). Throws if k == 0.
int dmin_upper(const PolarCode& code);

// Exhaustive minimum nonzero-codeword weight over all 2^k - 1 messages.
// Verification oracle only; refuses k > 20.
int dmin_bruteforce(const PolarCode& code);

}  // namespace polarga
