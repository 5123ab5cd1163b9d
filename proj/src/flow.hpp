#pragma once

#include <string>

#include "errors.hpp"

namespace pipeflow {

constexpr double kPi = 3.14159265358979323846;
constexpr double kAxialPeriod = 2.0 * kPi;

// Background flow parameters: volumetric flux and Navier slip coefficient.
// The axial period is fixed at 2*pi.
struct FlowParams {
    double flux = 0.0;
    double slip = 0.0;
    double period = kAxialPeriod;

    void validate() const {
        require(flux > 0.0, ErrorKind::Config, "flux must be positive, got ", flux);
        require(slip >= 0.0, ErrorKind::Config, "slip coefficient must be nonnegative, got ", slip);
        require(period == kAxialPeriod, ErrorKind::Config, "axial period is fixed at 2*pi");
    }
};

struct ProfileValue {
    double value = 0.0;
    double derivative = 0.0;
};

// Background axial profile U(r) = (4+2a)/(4+a) * (1 - 2a/(4+2a) r^2) * flux/pi
// and its exact r-derivative -4 a flux r / (pi (4+a)).
ProfileValue poiseuille(const FlowParams& params, double r);

// Coefficient of the transport term near the wall: U(1) = 4 flux / (pi (4+a)).
double wall_speed(const FlowParams& params);

enum class RegimeTag {
    ZeroMode,
    SmallFlux,
    HighFrequency,
    SmallSlip,         // 4+a <= delta (flux |n|)^{1/3}, exponential wall layer
    LargeSlip,         // 4+a >= (flux |n|)^{1/3}/delta, Airy wall layer
    IntermediateSlip,  // between the two, no layer decomposition
};

std::string regime_name(RegimeTag tag);

struct RegimeParams {
    double eps1 = 0.1;
    double delta = 0.1;
    double flux_threshold = 100.0;  // below this the small-flux estimates apply

    void validate() const {
        require(eps1 > 0.0 && eps1 < 1.0, ErrorKind::Config, "eps1 must lie in (0,1), got ", eps1);
        require(delta > 0.0 && delta < 1.0, ErrorKind::Config, "delta must lie in (0,1), got ",
                delta);
        require(flux_threshold > 0.0, ErrorKind::Config, "flux threshold must be positive");
    }
};

// Deterministic classification of a mode index against the flux/slip regimes.
// Ties resolve into the closed (SmallSlip/LargeSlip) branches.
RegimeTag classify_regime(const FlowParams& params, int n, const RegimeParams& rp);
RegimeTag classify_regime(const FlowParams& params, int n, double eps1, double delta,
                          double flux_threshold = 100.0);

}  // namespace pipeflow
