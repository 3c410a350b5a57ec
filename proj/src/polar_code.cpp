#include "polarga/polar_code.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace polarga {

int bit_reverse(int index, int n) {
    if (n < 0 || n > 30 || index < 0 || index >= (1 << n))
        throw std::invalid_argument("bit_reverse: index out of range for n=" + std::to_string(n));
    int out = 0;
    for (int b = 0; b < n; ++b)
        if (index & (1 << b)) out |= 1 << (n - 1 - b);
    return out;
}

PolarCode PolarCode::from_a_vector(BitVec a_vector) {
    const size_t len = a_vector.size();
    if (len < 2 || (len & (len - 1)) != 0)
        throw std::invalid_argument("PolarCode: block length must be a power of two >= 2");
    PolarCode code;
    code.block_length = static_cast<int>(len);
    code.n = std::countr_zero(len);
    code.dimension = 0;
    for (uint8_t b : a_vector) {
        if (b > 1) throw std::invalid_argument("PolarCode: a_vector entries must be 0 or 1");
        code.dimension += b;
    }
    code.a = std::move(a_vector);
    return code;
}

PolarCode PolarCode::from_info_set(int n, const std::vector<int>& info_set_1based) {
    if (n < 1 || n > 30) throw std::invalid_argument("PolarCode: n out of range");
    BitVec a(static_cast<size_t>(1) << n, 0);
    for (int idx : info_set_1based) {
        if (idx < 1 || idx > static_cast<int>(a.size()))
            throw std::invalid_argument("PolarCode: information index out of range: " + std::to_string(idx));
        if (a[idx - 1]) throw std::invalid_argument("PolarCode: duplicate information index");
        a[idx - 1] = 1;
    }
    return from_a_vector(std::move(a));
}

std::vector<int> PolarCode::info_positions() const {
    std::vector<int> pos;
    pos.reserve(static_cast<size_t>(dimension));
    for (int i = 0; i < block_length; ++i)
        if (a[i]) pos.push_back(i);
    return pos;
}

std::vector<int> PolarCode::info_set_1based() const {
    std::vector<int> pos = info_positions();
    for (int& p : pos) ++p;
    return pos;
}

BitVec polar_transform_natural(const BitVec& u) {
    BitVec w = u;
    const size_t len = w.size();
    for (size_t inc = 1; inc < len; inc <<= 1)
        for (size_t base = 0; base < len; base += 2 * inc)
            for (size_t j = 0; j < inc; ++j)
                w[base + j] ^= w[base + j + inc];
    return w;
}

BitVec polar_encode(const PolarCode& code, const BitVec& u) {
    if (static_cast<int>(u.size()) != code.block_length)
        throw std::invalid_argument("polar_encode: input length does not match block length");
    BitVec v(u.size());
    for (int j = 0; j < code.block_length; ++j)
        v[j] = u[bit_reverse(j, code.n)];
    return polar_transform_natural(v);
}

int row_weight(int block_length, int row_1based) {
    if (block_length < 2 || (block_length & (block_length - 1)) != 0)
        throw std::invalid_argument("row_weight: block length must be a power of two");
    if (row_1based < 1 || row_1based > block_length)
        throw std::invalid_argument("row_weight: row index out of range");
    return 1 << std::popcount(static_cast<unsigned>(row_1based - 1));
}

int dmin_upper(const PolarCode& code) {
    if (code.dimension == 0)
        throw std::invalid_argument("dmin_upper: code has an empty information set");
    int best = code.block_length + 1;
    for (int i = 0; i < code.block_length; ++i)
        if (code.a[i]) best = std::min(best, row_weight(code.block_length, i + 1));
    return best;
}

int dmin_bruteforce(const PolarCode& code) {
    if (code.dimension == 0)
        throw std::invalid_argument("dmin_bruteforce: code has an empty information set");
    if (code.dimension > 20)
        throw std::invalid_argument("dmin_bruteforce: k > 20, enumeration refused");

    // Gray-code walk over all nonzero messages: one row XOR per step.
    const std::vector<int> rows = code.info_positions();
    const size_t words = (static_cast<size_t>(code.block_length) + 63) / 64;
    std::vector<uint64_t> cw(words, 0);
    std::vector<std::vector<uint64_t>> packed_rows(rows.size(), std::vector<uint64_t>(words, 0));
    for (size_t r = 0; r < rows.size(); ++r) {
        BitVec u(static_cast<size_t>(code.block_length), 0);
        u[rows[r]] = 1;
        BitVec x = polar_encode(code, u);
        for (int j = 0; j < code.block_length; ++j)
            if (x[j]) packed_rows[r][static_cast<size_t>(j) >> 6] |= 1ull << (j & 63);
    }

    int best = code.block_length + 1;
    const uint64_t total = 1ull << code.dimension;
    for (uint64_t t = 1; t < total; ++t) {
        const int flip = std::countr_zero(t);
        for (size_t w = 0; w < words; ++w) cw[w] ^= packed_rows[static_cast<size_t>(flip)][w];
        int weight = 0;
        for (uint64_t w : cw) weight += std::popcount(w);
        best = std::min(best, weight);
    }
    return best;
}

}  // namespace polarga
