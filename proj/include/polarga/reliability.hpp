#pragma once

#include "polarga/polar_code.hpp"

namespace polarga {

// Per-bit-channel reliability values, lower = more reliable. Indexed in the
// same natural order that polar_encode assigns to u: values[i] describes
// bit-channel i of u under G_N = B_N * F^{(x)n}.
struct ReliabilityProfile {
    enum class Ordering { NaturalU };
    Ordering ordering_convention = Ordering::NaturalU;
    std::vector<double> values;
};

// Exact Bhattacharyya parameters of the N = 2^n synthesized bit-channels of
// a BEC with erasure probability epsilon: the recursion Z -> 2Z - Z^2
// (upper/minus) and Z -> Z^2 (lower/plus), with the stage output permuted by
// bit-reversal into natural u-order.
ReliabilityProfile bhattacharyya_bec(int n, double epsilon);

// Selects the k most reliable positions (smallest value, ties to the smaller
// index) as the information set.
PolarCode info_set_from_profile(const ReliabilityProfile& profile, int k);

// Reed-Muller rule: the k rows of G_N with the largest Hamming weight, ties
// broken toward the larger index (higher index = more reliable under
// polarization among equal-weight rows).
PolarCode rm_info_set(int n, int k);

// Hybrid construction: restrict to rows with weight >= min_weight, then pick
// the k most reliable eligible positions per the profile. Throws when fewer
// than k rows are eligible (lower min_weight in that case).
PolarCode rm_polar_hybrid(int n, int k, const ReliabilityProfile& profile, int min_weight);

// Default min_weight rule for hybrid seeds: the smallest power of two
// strictly greater than dmin_upper of the plain profile-based construction,
// halved until at least k rows remain eligible.
int default_hybrid_min_weight(int n, int k, const ReliabilityProfile& profile);

}  // namespace polarga
