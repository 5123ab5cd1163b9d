#pragma once

#include <memory>

#include "flow.hpp"
#include "grid.hpp"
#include "poly.hpp"

namespace pipeflow {

enum class WallBc {
    Navier,  // wall vorticity proportional to slip velocity, coefficient alpha
    Slip,    // wall vorticity zero
};

// One Fourier mode of the stream function with derived velocity samples.
// psi = r*phi is solved in the quotient phi = psi/r, which keeps every
// operator regular at the axis and enforces psi(0) = Lpsi(0) = 0 structurally.
struct StreamMode {
    int n = 0;
    WallBc bc = WallBc::Navier;
    std::shared_ptr<const RadialGrid> grid;
    CVec phi;  // psi / r
    CVec w;    // omega / r = (delta4 - n^2) phi
    CVec h;    // (r psi)' / r
    CVec hw;   // (r omega)' / r
    RadialField psi, vr, vz, omega;
    double rcond = 0.0;
    double bc_residual = 0.0;
};

// One Fourier mode of the swirl velocity, solved in the quotient V = v/r.
struct SwirlMode {
    int n = 0;
    std::shared_ptr<const RadialGrid> grid;
    CVec vq;  // v^theta / r
    CVec s;   // (r v^theta)' / r
    CVec wv;  // (L - n^2) v^theta / r
    RadialField vtheta;
    double rcond = 0.0;
    double bc_residual = 0.0;
    Complex compat_multiplier = 0.0;  // Lagrange multiplier of the n=0, alpha=0 solve
};

// Right-hand side f_n = i n F^r - d F^z/dr in the quotient form f_n / r, built
// from the quotient F^r/r and plain F^z samples (both even, axis-regular).
CVec mode_rhs_quotient(const RadialGrid& grid, int n, const CVec& fr_quot, const CVec& fz);

// Fourth-order mode problem
//   i n U (L - n^2) psi - (L - n^2)^2 psi = f,   psi(0)=psi(1)=Lpsi(0)=0,
//   Lpsi(1) = -alpha psi'(1)  (Navier)   or   Lpsi(1) = 0  (Slip),
// with g = f/r given on the grid.
StreamMode solve_stream_mode(const FlowParams& params, std::shared_ptr<const RadialGrid> grid,
                             int n, const CVec& g, WallBc bc);

// Same problem with f given as plain samples of an odd function of r.
StreamMode solve_stream_mode_samples(const FlowParams& params,
                                     std::shared_ptr<const RadialGrid> grid, int n,
                                     const RadialField& f, WallBc bc);

// Zero mode: L^2 psi0 = d F^z_0/dr with the Navier wall condition; v^r_0 = 0.
StreamMode solve_zero_mode(const FlowParams& params, std::shared_ptr<const RadialGrid> grid,
                           const RadialField& fz0);
// Exactly integrated variant for polynomial data of arbitrary parity.
StreamMode solve_zero_mode(const FlowParams& params, std::shared_ptr<const RadialGrid> grid,
                           const Poly& fz0);

// Swirl problem i n U v - (L - n^2) v = F^theta with v(0)=0 and
// v'(1) = (1-alpha) v(1), given h = F^theta / r on the grid.  For n = 0 the
// compatibility integral of F^theta r^2 must vanish when alpha = 0; the
// solution is then normalized by v(1) = 0 through a bordered system.
SwirlMode solve_swirl_mode(const FlowParams& params, std::shared_ptr<const RadialGrid> grid, int n,
                           const CVec& h, double compat_tol = 1e-10);
// Exactly integrated zero-mode variant for polynomial F^theta.
SwirlMode solve_swirl_mode(const FlowParams& params, std::shared_ptr<const RadialGrid> grid,
                           const Poly& ftheta0, double compat_tol = 1e-10);

// Discrete operator application in quotient space: i n U (delta4 - n^2) phi
// - (delta4 - n^2)^2 phi, rows at every node (no boundary rows).
CVec apply_stream_operator(const FlowParams& params, const RadialGrid& grid, int n,
                           const CVec& phi);
CVec apply_swirl_operator(const FlowParams& params, const RadialGrid& grid, int n, const CVec& vq);

struct ResidualReport {
    double equation = 0.0;  // refined-grid relative equation residual
    double boundary = 0.0;  // wall-row residuals of the solve grid
    double total() const { return equation + boundary; }
};

// Re-evaluates the mode equation on a grid of twice the size against the
// given quotient data and reports the relative residual.
ResidualReport linear_residual(const FlowParams& params, const StreamMode& mode, const CVec& g);
ResidualReport linear_residual(const FlowParams& params, const SwirlMode& mode, const CVec& h);

// Poiseuille profile samples at the grid nodes.
Vec profile_samples(const FlowParams& params, const RadialGrid& grid);

}  // namespace pipeflow
