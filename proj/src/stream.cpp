#include "stream.hpp"

#include <cmath>

#include "linsolve.hpp"

namespace pipeflow {

namespace {

// (r psi)'/r for psi = r*phi with even phi: 2 phi + 2 t phi_t.
CVec ring_derivative(const RadialGrid& g, const CVec& phi) {
    CVec phit = g.dt() * phi;
    CVec out(phi.size());
    for (int i = 0; i < phi.size(); ++i) out[i] = 2.0 * phi[i] + 2.0 * g.tnodes()[i] * phit[i];
    return out;
}

Poly shift_down(const Poly& p) {
    require(p.coeff(0) == Complex(0.0), ErrorKind::Numeric, "polynomial not divisible by r");
    if (p.is_zero()) return Poly();
    return Poly(std::vector<Complex>(p.coeffs().begin() + 1, p.coeffs().end()));
}

void fill_stream_fields(StreamMode& m) {
    const auto& g = *m.grid;
    const int nn = g.count();
    CVec psi(nn), vr(nn), omega(nn);
    for (int i = 0; i < nn; ++i) {
        double r = g.nodes()[i];
        psi[i] = r * m.phi[i];
        vr[i] = Complex(0.0, 1.0) * static_cast<double>(m.n) * psi[i];
        omega[i] = r * m.w[i];
    }
    m.psi = RadialField(m.grid, std::move(psi));
    m.vr = RadialField(m.grid, std::move(vr));
    m.omega = RadialField(m.grid, std::move(omega));
    m.vz = RadialField(m.grid, CVec(-m.h));
}

}  // namespace

Vec profile_samples(const FlowParams& params, const RadialGrid& grid) {
    Vec u(grid.count());
    for (int i = 0; i < grid.count(); ++i) u[i] = poiseuille(params, grid.nodes()[i]).value;
    return u;
}

CVec mode_rhs_quotient(const RadialGrid& grid, int n, const CVec& fr_quot, const CVec& fz) {
    CVec g = CVec::Zero(grid.count());
    if (fr_quot.size() > 0) {
        require(fr_quot.size() == grid.count(), ErrorKind::Input, "forcing sample count mismatch");
        g += Complex(0.0, 1.0) * static_cast<double>(n) * fr_quot;
    }
    if (fz.size() > 0) {
        require(fz.size() == grid.count(), ErrorKind::Input, "forcing sample count mismatch");
        g -= 2.0 * (grid.dt() * fz);  // (dFz/dr)/r for even Fz
    }
    return g;
}

CVec apply_stream_operator(const FlowParams& params, const RadialGrid& grid, int n,
                           const CVec& phi) {
    Mat K = grid.delta4() - static_cast<double>(n) * n * Mat::Identity(grid.count(), grid.count());
    Vec u = profile_samples(params, grid);
    CVec kphi = K * phi;
    CVec out = Complex(0.0, 1.0) * static_cast<double>(n) * u.cast<Complex>().cwiseProduct(kphi);
    out -= K * kphi;
    return out;
}

CVec apply_swirl_operator(const FlowParams& params, const RadialGrid& grid, int n, const CVec& vq) {
    Vec u = profile_samples(params, grid);
    CVec out = Complex(0.0, 1.0) * static_cast<double>(n) * u.cast<Complex>().cwiseProduct(vq);
    out -= grid.delta4() * vq;
    out += static_cast<double>(n) * n * vq;
    return out;
}

StreamMode solve_stream_mode(const FlowParams& params, std::shared_ptr<const RadialGrid> grid,
                             int n, const CVec& g, WallBc bc) {
    params.validate();
    require(n != 0, ErrorKind::Domain, "nonzero mode solver called with n = 0");
    require(g.size() == grid->count(), ErrorKind::Input, "rhs sample count mismatch");
    const RadialGrid& gr = *grid;
    const int M = gr.size();
    const int nn = gr.count();
    const double alpha = params.slip;

    Mat K = gr.delta4() - static_cast<double>(n) * n * Mat::Identity(nn, nn);
    Vec u = profile_samples(params, gr);
    CMat A = Complex(0.0, 1.0) * static_cast<double>(n) *
                 (u.cast<Complex>().asDiagonal() * K.cast<Complex>()) -
             (K * K).cast<Complex>();

    CVec rhs = CVec::Zero(nn);
    for (int j = 0; j <= M - 2; ++j) rhs[j] = g[j];

    // wall rows: psi(1) = 0 and the vorticity condition, bordered at the two
    // nodes nearest r = 1
    Eigen::RowVectorXcd bc2 = gr.delta4().row(M).cast<Complex>();
    if (bc == WallBc::Navier) {
        bc2 += alpha * gr.d1().row(M).cast<Complex>();
        bc2[M] += alpha;  // psi'(1) = phi(1) + phi'(1)
    }
    A.row(M - 1) = bc2;
    A.row(M).setZero();
    A(M, M) = 1.0;

    DenseSolution sol = solve_dense(A, rhs);

    StreamMode m;
    m.n = n;
    m.bc = bc;
    m.grid = grid;
    m.phi = std::move(sol.x);
    m.w = K * m.phi;
    m.h = ring_derivative(gr, m.phi);
    m.hw = ring_derivative(gr, m.w);
    m.rcond = sol.rcond_estimate;
    double scale = std::max(m.phi.cwiseAbs().maxCoeff(), 1e-300);
    m.bc_residual = std::abs((bc2 * m.phi)(0)) / ((1.0 + alpha) * scale * nn * nn);
    fill_stream_fields(m);
    return m;
}

StreamMode solve_stream_mode_samples(const FlowParams& params,
                                     std::shared_ptr<const RadialGrid> grid, int n,
                                     const RadialField& f, WallBc bc) {
    CVec g = odd_quotient(*grid, f.values());
    return solve_stream_mode(params, grid, n, g, bc);
}

StreamMode solve_zero_mode(const FlowParams& params, std::shared_ptr<const RadialGrid> grid,
                           const RadialField& fz0) {
    params.validate();
    const RadialGrid& gr = *grid;
    const int M = gr.size();
    const int nn = gr.count();
    const double alpha = params.slip;

    // L^2 psi = d Fz/dr in quotient form: delta4^2 phi = (d Fz/dr)/r = 2 Fz_t.
    CMat A = (gr.delta4() * gr.delta4()).cast<Complex>();
    CVec rhs = CVec::Zero(nn);
    CVec g2 = 2.0 * (gr.dt() * fz0.values());
    for (int j = 0; j <= M - 2; ++j) rhs[j] = g2[j];

    Eigen::RowVectorXcd bc2 = gr.delta4().row(M).cast<Complex>();
    bc2 += alpha * gr.d1().row(M).cast<Complex>();
    bc2[M] += alpha;
    A.row(M - 1) = bc2;
    A.row(M).setZero();
    A(M, M) = 1.0;

    DenseSolution sol = solve_dense(A, rhs);

    StreamMode m;
    m.n = 0;
    m.bc = WallBc::Navier;
    m.grid = grid;
    m.phi = std::move(sol.x);
    m.w = gr.delta4() * m.phi;
    m.h = ring_derivative(gr, m.phi);
    m.hw = ring_derivative(gr, m.w);
    m.rcond = sol.rcond_estimate;
    double scale = std::max(m.phi.cwiseAbs().maxCoeff(), 1e-300);
    m.bc_residual = std::abs((bc2 * m.phi)(0)) / ((1.0 + alpha) * scale * nn * nn);
    fill_stream_fields(m);
    return m;
}

StreamMode solve_zero_mode(const FlowParams& params, std::shared_ptr<const RadialGrid> grid,
                           const Poly& fz0) {
    params.validate();
    const double alpha = params.slip;

    // Two exact integrations of L^2 psi = dFz/dr.  With G = Fz - Fz(0):
    //   L psi = I1[G] + c1 r,     I1[p] = (1/r) int_0^r s p ds,
    //   psi = r phi,  phi = int_0^r I3[W] + c2,  W = I1[G]/r + c1,
    // where I3[p] = (1/r^3) int_0^r s^3 p ds.  The two wall conditions fix
    // (c1, c2).
    Poly G = fz0 - Poly::constant(fz0.coeff(0));
    Poly I1G = G.cyl_integral();
    std::vector<Complex> w0c(I1G.coeffs().begin() + (I1G.is_zero() ? 0 : 1), I1G.coeffs().end());
    Poly W0{std::move(w0c)};
    Poly I3W0 = W0.ball4_integral();
    Poly P0 = I3W0.antiderivative();

    const Complex p01 = P0.eval(1.0);
    const Complex i1g1 = I1G.eval(1.0);
    const Complex i3w01 = I3W0.eval(1.0);

    // c1/8 + c2 = -P0(1)
    // (I1G(1) + c1) + alpha [ (P0(1) + c1/8 + c2) + I3W0(1) + c1/4 ] = 0
    Eigen::Matrix2cd A2;
    Eigen::Vector2cd b2;
    A2 << Complex(0.125), Complex(1.0), Complex(1.0 + alpha * (0.125 + 0.25)), Complex(alpha);
    b2 << -p01, -(i1g1 + alpha * (p01 + i3w01));
    Eigen::Vector2cd c = A2.fullPivLu().solve(b2);

    Poly phi = P0 + Poly::monomial(2, c[0] / 8.0) + Poly::constant(c[1]);
    Poly psi = phi.shift_up(1);
    Poly lpsi = I1G + Poly::monomial(1, c[0]);  // L psi

    StreamMode m;
    m.n = 0;
    m.bc = WallBc::Navier;
    m.grid = grid;
    m.phi = phi.sample(*grid);
    m.w = shift_down(lpsi).sample(*grid);  // omega / r
    m.h = shift_down(psi.shift_up(1).derivative()).sample(*grid);
    m.hw = shift_down(lpsi.shift_up(1).derivative()).sample(*grid);
    m.rcond = 1.0;
    m.bc_residual = std::abs(lpsi.eval(1.0) + alpha * psi.derivative().eval(1.0)) /
                    (1.0 + alpha);
    fill_stream_fields(m);
    return m;
}

namespace {

void fill_swirl_fields(SwirlMode& m) {
    const auto& g = *m.grid;
    CVec v(g.count());
    for (int i = 0; i < g.count(); ++i) v[i] = g.nodes()[i] * m.vq[i];
    m.vtheta = RadialField(m.grid, std::move(v));
}

}  // namespace

SwirlMode solve_swirl_mode(const FlowParams& params, std::shared_ptr<const RadialGrid> grid, int n,
                           const CVec& h, double compat_tol) {
    params.validate();
    require(h.size() == grid->count(), ErrorKind::Input, "rhs sample count mismatch");
    const RadialGrid& gr = *grid;
    const int M = gr.size();
    const int nn = gr.count();
    const double alpha = params.slip;

    Vec u = profile_samples(params, gr);
    CMat A = Complex(0.0, 1.0) * static_cast<double>(n) * u.cast<Complex>().asDiagonal() *
                 CMat::Identity(nn, nn) -
             gr.delta4().cast<Complex>() +
             static_cast<double>(n) * n * CMat::Identity(nn, nn);

    // wall condition v'(1) = (1-alpha) v(1) in quotient form: V'(1) = -alpha V(1)
    Eigen::RowVectorXcd bcrow = (2.0 * gr.dt().row(M)).cast<Complex>();
    bcrow[M] += alpha;

    SwirlMode m;
    m.n = n;
    m.grid = grid;

    if (n == 0) {
        Complex compat = weighted_integral(gr, h, Weight::R3);
        double hnorm = std::sqrt(std::abs(
            weighted_integral(gr, CVec(h.cwiseAbs2().cast<Complex>()), Weight::R3).real()));
        if (alpha == 0.0) {
            require(std::abs(compat) <= compat_tol * std::max(hnorm, 1e-300), ErrorKind::Input,
                    "zero-mode swirl forcing violates the compatibility integral: ",
                    std::abs(compat), " vs tolerance ", compat_tol * hnorm);
            // bordered system: Neumann problem plus v(1) = 0 normalization
            CMat B = CMat::Zero(nn + 1, nn + 1);
            CVec rhs = CVec::Zero(nn + 1);
            for (int j = 0; j < M; ++j) {
                B.row(j).head(nn) = A.row(j);
                B(j, nn) = 1.0;
                rhs[j] = h[j];
            }
            B.row(M).head(nn) = bcrow;
            B(nn, M) = 1.0;  // V(1) = 0
            DenseSolution sol = solve_dense(B, rhs);
            m.vq = sol.x.head(nn);
            m.compat_multiplier = sol.x[nn];
            m.rcond = sol.rcond_estimate;
        } else {
            for (int j = 0; j < M; ++j) { /* equation rows stay */
            }
            A.row(M) = bcrow;
            CVec rhs = h;
            rhs[M] = 0.0;
            DenseSolution sol = solve_dense(A, rhs);
            m.vq = std::move(sol.x);
            m.rcond = sol.rcond_estimate;
        }
    } else {
        A.row(M) = bcrow;
        CVec rhs = h;
        rhs[M] = 0.0;
        DenseSolution sol = solve_dense(A, rhs);
        m.vq = std::move(sol.x);
        m.rcond = sol.rcond_estimate;
    }

    double scale = std::max(m.vq.cwiseAbs().maxCoeff(), 1e-300);
    m.bc_residual = std::abs((bcrow * m.vq)(0)) / ((1.0 + alpha) * scale * nn);
    fill_swirl_fields(m);
    return m;
}

SwirlMode solve_swirl_mode(const FlowParams& params, std::shared_ptr<const RadialGrid> grid,
                           const Poly& ftheta0, double compat_tol) {
    params.validate();
    const double alpha = params.slip;

    // -L v = F: with Q = int_0^r F,  v = c1 r/2 - I1[Q].
    Poly Q = ftheta0.antiderivative();
    Poly I1Q = Q.cyl_integral();
    const Complex q1 = Q.eval(1.0);
    const Complex i1q1 = I1Q.eval(1.0);

    Complex c1;
    if (alpha == 0.0) {
        // Robin condition holds iff the compatibility integral vanishes;
        // normalize by v(1) = 0 as in the Neumann problem.
        Poly r2F = ftheta0.shift_up(2);
        Complex compat = r2F.antiderivative().eval(1.0);
        double fnorm = std::abs(ftheta0.eval(1.0)) + std::abs(ftheta0.eval(0.5)) + 1e-300;
        require(std::abs(compat) <= compat_tol * std::max(1.0, fnorm), ErrorKind::Input,
                "zero-mode swirl forcing violates the compatibility integral: ", std::abs(compat));
        c1 = 2.0 * i1q1;
    } else {
        c1 = 2.0 * (q1 - (2.0 - alpha) * i1q1) / alpha;
    }

    Poly v = Poly::monomial(1, c1 / 2.0) - I1Q;

    SwirlMode m;
    m.n = 0;
    m.grid = grid;
    std::vector<Complex> vq(v.coeffs());
    Poly vquot{std::vector<Complex>(vq.begin() + (vq.empty() ? 0 : 1), vq.end())};
    m.vq = vquot.sample(*grid);
    m.rcond = 1.0;
    m.bc_residual = std::abs(v.derivative().eval(1.0) - (1.0 - alpha) * v.eval(1.0)) / (1.0 + alpha);
    fill_swirl_fields(m);
    return m;
}

ResidualReport linear_residual(const FlowParams& params, const StreamMode& mode, const CVec& g) {
    const RadialGrid& coarse = *mode.grid;
    auto fine = build_grid(2 * coarse.size());
    Mat P = coarse.resample_to(*fine);
    CVec phif = P * mode.phi;
    CVec gf = P * g;
    CVec resid;
    if (mode.n == 0) {
        resid = (fine->delta4() * (fine->delta4() * phif)) - gf;
    } else {
        resid = apply_stream_operator(params, *fine, mode.n, phif) - gf;
    }
    double rnorm = std::sqrt(std::abs(
        weighted_integral(*fine, CVec(resid.cwiseAbs2().cast<Complex>()), Weight::R3).real()));
    double gnorm = std::sqrt(std::abs(
        weighted_integral(*fine, CVec(gf.cwiseAbs2().cast<Complex>()), Weight::R3).real()));
    ResidualReport rep;
    rep.equation = rnorm / std::max(gnorm, 1e-300);
    rep.boundary = mode.bc_residual + std::abs(mode.phi[coarse.size()]);
    return rep;
}

ResidualReport linear_residual(const FlowParams& params, const SwirlMode& mode, const CVec& h) {
    const RadialGrid& coarse = *mode.grid;
    auto fine = build_grid(2 * coarse.size());
    Mat P = coarse.resample_to(*fine);
    CVec vf = P * mode.vq;
    CVec hf = P * h;
    CVec resid = apply_swirl_operator(params, *fine, mode.n, vf) - hf;
    double rnorm = std::sqrt(std::abs(
        weighted_integral(*fine, CVec(resid.cwiseAbs2().cast<Complex>()), Weight::R3).real()));
    double hnorm = std::sqrt(std::abs(
        weighted_integral(*fine, CVec(hf.cwiseAbs2().cast<Complex>()), Weight::R3).real()));
    ResidualReport rep;
    rep.equation = rnorm / std::max(hnorm, 1e-300);
    rep.boundary = mode.bc_residual;
    return rep;
}

}  // namespace pipeflow
