#include "flow.hpp"

#include <cmath>

namespace pipeflow {

ProfileValue poiseuille(const FlowParams& params, double r) {
    params.validate();
    require(r >= 0.0 && r <= 1.0, ErrorKind::Domain, "radius must lie in [0,1], got ", r);
    const double a = params.slip;
    const double scale = params.flux / kPi;
    ProfileValue out;
    out.value = (4.0 + 2.0 * a) / (4.0 + a) * (1.0 - 2.0 * a / (4.0 + 2.0 * a) * r * r) * scale;
    out.derivative = -4.0 * a * r / (4.0 + a) * scale;
    return out;
}

double wall_speed(const FlowParams& params) { return 4.0 * params.flux / (kPi * (4.0 + params.slip)); }

std::string regime_name(RegimeTag tag) {
    switch (tag) {
        case RegimeTag::ZeroMode: return "zero-mode";
        case RegimeTag::SmallFlux: return "small-flux";
        case RegimeTag::HighFrequency: return "high-frequency";
        case RegimeTag::SmallSlip: return "small-slip";
        case RegimeTag::LargeSlip: return "large-slip";
        case RegimeTag::IntermediateSlip: return "intermediate-slip";
    }
    return "unknown";
}

RegimeTag classify_regime(const FlowParams& params, int n, const RegimeParams& rp) {
    params.validate();
    rp.validate();
    if (n == 0) return RegimeTag::ZeroMode;
    if (params.flux < rp.flux_threshold) return RegimeTag::SmallFlux;
    const double an = std::abs(static_cast<double>(n));
    if (an >= rp.eps1 * std::sqrt(params.flux)) return RegimeTag::HighFrequency;
    const double scale = std::cbrt(params.flux * an);
    const double s = 4.0 + params.slip;
    if (s <= rp.delta * scale) return RegimeTag::SmallSlip;
    if (s >= scale / rp.delta) return RegimeTag::LargeSlip;
    return RegimeTag::IntermediateSlip;
}

RegimeTag classify_regime(const FlowParams& params, int n, double eps1, double delta,
                          double flux_threshold) {
    return classify_regime(params, n, RegimeParams{eps1, delta, flux_threshold});
}

}  // namespace pipeflow
