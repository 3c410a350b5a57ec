#pragma once

#include <algorithm>
#include <cmath>

namespace polarga {

// ln(1 + e^-t) for t >= 0; zero beyond the point where the correction drops
// under double precision of the surrounding sums.
inline double ln1p_exp_neg(double t) { return t > 37.0 ? 0.0 : std::log1p(std::exp(-t)); }

// ln(1 + e^x), evaluated without overflow.
inline double softplus(double x) { return std::max(x, 0.0) + ln1p_exp_neg(std::fabs(x)); }

// Exact boxplus 2*atanh(tanh(a/2)*tanh(b/2)) in the Jacobian form
//   sign(a)sign(b)*min(|a|,|b|) + ln(1+e^-|a+b|) - ln(1+e^-|a-b|),
// which stays finite for any inputs. Differs from the hard min-sum value by
// at most ln 2.
inline double boxplus(double a, double b) {
    const double m = std::min(std::fabs(a), std::fabs(b));
    const double hard = ((a < 0.0) != (b < 0.0)) ? -m : m;
    return hard + ln1p_exp_neg(std::fabs(a + b)) - ln1p_exp_neg(std::fabs(a - b));
}

inline double clamp_llr(double x, double cap) { return std::clamp(x, -cap, cap); }

}  // namespace polarga
