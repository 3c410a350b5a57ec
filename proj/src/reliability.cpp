#include "polarga/reliability.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace polarga {

ReliabilityProfile bhattacharyya_bec(int n, double epsilon) {
    if (n < 1 || n > 30) throw std::invalid_argument("bhattacharyya_bec: n out of range");
    if (!(epsilon >= 0.0 && epsilon <= 1.0))
        throw std::invalid_argument("bhattacharyya_bec: epsilon must lie in [0,1]");
    const int len = 1 << n;
    std::vector<double> z(static_cast<size_t>(len), epsilon);
    // Stage recursion in natural stage order; entry m ends up with the
    // transform sequence given by the bits of m, LSB first.
    for (int inc = 1; inc < len; inc <<= 1) {
        for (int base = 0; base < len; base += 2 * inc) {
            for (int j = 0; j < inc; ++j) {
                const double zz = z[base + j];  // both entries of the pair start equal
                z[base + j] = zz * (2.0 - zz);
                z[base + j + inc] = zz * zz;
            }
        }
    }
    // Bit-reversal maps this to natural u-order (bits of i, MSB first).
    ReliabilityProfile profile;
    profile.values.resize(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i) profile.values[i] = z[bit_reverse(i, n)];
    return profile;
}

namespace {

std::vector<int> positions_sorted_by_reliability(const std::vector<double>& values) {
    std::vector<int> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int lhs, int rhs) { return values[lhs] < values[rhs]; });
    return order;
}

}  // namespace

PolarCode info_set_from_profile(const ReliabilityProfile& profile, int k) {
    const int len = static_cast<int>(profile.values.size());
    if (k < 1 || k > len)
        throw std::invalid_argument("info_set_from_profile: k out of range");
    const std::vector<int> order = positions_sorted_by_reliability(profile.values);
    BitVec a(static_cast<size_t>(len), 0);
    for (int i = 0; i < k; ++i) a[order[i]] = 1;
    return PolarCode::from_a_vector(std::move(a));
}

PolarCode rm_info_set(int n, int k) {
    if (n < 1 || n > 30) throw std::invalid_argument("rm_info_set: n out of range");
    const int len = 1 << n;
    if (k < 1 || k > len) throw std::invalid_argument("rm_info_set: k out of range");
    std::vector<int> order(static_cast<size_t>(len));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [len](int lhs, int rhs) {
        const int wl = row_weight(len, lhs + 1);
        const int wr = row_weight(len, rhs + 1);
        if (wl != wr) return wl > wr;
        return lhs > rhs;
    });
    BitVec a(static_cast<size_t>(len), 0);
    for (int i = 0; i < k; ++i) a[order[i]] = 1;
    return PolarCode::from_a_vector(std::move(a));
}

PolarCode rm_polar_hybrid(int n, int k, const ReliabilityProfile& profile, int min_weight) {
    const int len = 1 << n;
    if (static_cast<int>(profile.values.size()) != len)
        throw std::invalid_argument("rm_polar_hybrid: profile length does not match 2^n");
    if (k < 1 || k > len) throw std::invalid_argument("rm_polar_hybrid: k out of range");
    std::vector<int> eligible;
    for (int i = 0; i < len; ++i)
        if (row_weight(len, i + 1) >= min_weight) eligible.push_back(i);
    if (static_cast<int>(eligible.size()) < k)
        throw std::invalid_argument(
            "rm_polar_hybrid: only " + std::to_string(eligible.size()) + " rows have weight >= " +
            std::to_string(min_weight) + " but k = " + std::to_string(k) +
            "; lower min_weight");
    std::stable_sort(eligible.begin(), eligible.end(), [&](int lhs, int rhs) {
        return profile.values[lhs] < profile.values[rhs];
    });
    BitVec a(static_cast<size_t>(len), 0);
    for (int i = 0; i < k; ++i) a[eligible[i]] = 1;
    return PolarCode::from_a_vector(std::move(a));
}

int default_hybrid_min_weight(int n, int k, const ReliabilityProfile& profile) {
    const int len = 1 << n;
    const PolarCode plain = info_set_from_profile(profile, k);
    int mw = 1;
    while (mw <= dmin_upper(plain)) mw <<= 1;
    auto eligible_count = [len](int w) {
        int count = 0;
        for (int i = 0; i < len; ++i)
            if (row_weight(len, i + 1) >= w) ++count;
        return count;
    };
    while (mw > 1 && eligible_count(mw) < k) mw >>= 1;
    return mw;
}

}  // namespace polarga
