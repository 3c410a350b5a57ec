#include "polarga/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace polarga {

ChannelParams ChannelParams::from_ebn0(double ebn0_db, double code_rate) {
    if (!(code_rate > 0.0 && code_rate <= 1.0))
        throw std::invalid_argument("ChannelParams: code rate must lie in (0,1]");
    ChannelParams p;
    p.ebn0_db = ebn0_db;
    p.code_rate = code_rate;
    p.sigma = std::sqrt(1.0 / (2.0 * code_rate * std::pow(10.0, ebn0_db / 10.0)));
    return p;
}

std::vector<double> modulate(const BitVec& x) {
    std::vector<double> s(x.size());
    for (size_t i = 0; i < x.size(); ++i) s[i] = x[i] ? -1.0 : 1.0;
    return s;
}

std::vector<double> transmit(const std::vector<double>& symbols, const ChannelParams& params,
                             RandomStream& noise_stream) {
    if (!(params.sigma >= 0.0)) throw std::invalid_argument("transmit: sigma must be non-negative");
    std::vector<double> y(symbols.size());
    for (size_t i = 0; i < symbols.size(); ++i)
        y[i] = symbols[i] + params.sigma * noise_stream.gaussian();
    return y;
}

LlrFrame compute_llrs(const std::vector<double>& received, const ChannelParams& params) {
    if (!(params.sigma > 0.0)) throw std::invalid_argument("compute_llrs: sigma must be positive");
    const double scale = 2.0 / params.noise_variance();
    LlrFrame frame;
    frame.llrs.resize(received.size());
    for (size_t i = 0; i < received.size(); ++i) frame.llrs[i] = scale * received[i];
    return frame;
}

}  // namespace polarga
