#include "grid.hpp"

#include <cmath>

namespace pipeflow {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Integral of T_m over [-1,1]: 2/(1-m^2) for even m, 0 for odd m.
double cheb_full_integral(int m) {
    if (m % 2 != 0) return 0.0;
    return 2.0 / (1.0 - static_cast<double>(m) * m);
}

// Integral of T_m over [0,1].
double cheb_half_integral(int m) {
    if (m % 2 == 0) return 1.0 / (1.0 - static_cast<double>(m) * m);
    // odd m: with s = cos(h), int_0^1 T_m ds = (1/2)[ (1-c_{m+1})/(m+1) - (1-c_{m-1})/(m-1) ],
    // c_k = cos(k pi / 2) at even k = (-1)^{k/2}.
    auto ceven = [](int k) { return (k % 4 == 0) ? 1.0 : -1.0; };
    if (m == 1) return 0.5;
    return 0.5 * ((1.0 - ceven(m + 1)) / (m + 1) - (1.0 - ceven(m - 1)) / (m - 1));
}

}  // namespace

RadialGrid::RadialGrid(int size) : size_(size) {
    require(size >= 4, ErrorKind::Config, "grid size must be at least 4, got ", size);
    const int M = size_;
    const int n = M + 1;

    r_.resize(n);
    t_.resize(n);
    for (int k = 0; k <= M; ++k) {
        r_[k] = std::cos((M - k) * kPi / (2.0 * M));
        t_[k] = r_[k] * r_[k];
    }
    r_[0] = 0.0;
    r_[M] = 1.0;
    t_[0] = 0.0;
    t_[M] = 1.0;

    // Barycentric weights of Chebyshev-Lobatto points (up to a common factor).
    bary_.resize(n);
    for (int k = 0; k <= M; ++k) {
        bary_[k] = (k % 2 == 0) ? 1.0 : -1.0;
        if (k == 0 || k == M) bary_[k] *= 0.5;
    }

    // Differentiation in t with the negative-sum trick on the diagonal.
    dt_.setZero(n, n);
    for (int i = 0; i < n; ++i) {
        double diag = 0.0;
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            double dij = (bary_[j] / bary_[i]) / (t_[i] - t_[j]);
            dt_(i, j) = dij;
            diag -= dij;
        }
        dt_(i, i) = diag;
    }

    Mat dtt = dt_ * dt_;
    d1_ = 2.0 * r_.asDiagonal() * dt_;
    d2_ = 2.0 * dt_ + 4.0 * t_.asDiagonal() * dtt;
    delta4_ = 4.0 * t_.asDiagonal() * dtt + 8.0 * dt_;

    // Quadrature: transform samples to Chebyshev coefficients in x = 2t-1 and
    // integrate against the exact moments of the weight.  With our ascending
    // ordering, x_k = -cos(k pi / M), so T_m(x_k) = (-1)^m cos(m k pi / M).
    Mat coeff(n, n);  // a_m = sum_k coeff(m,k) p_k, exact for degree <= M
    for (int m = 0; m <= M; ++m) {
        double cm = (m == 0 || m == M) ? 2.0 : 1.0;
        double sign = (m % 2 == 0) ? 1.0 : -1.0;
        for (int k = 0; k <= M; ++k) {
            double dk = (k == 0 || k == M) ? 0.5 : 1.0;
            coeff(m, k) = sign * (2.0 / (M * cm)) * dk * std::cos(m * k * kPi / M);
        }
    }

    // Moments of T_m(2t-1) against dt, sqrt(t) dt, and t dt on [0,1].
    Vec m1(n), m2(n), m3(n);
    for (int m = 0; m <= M; ++m) {
        m1[m] = 0.5 * cheb_full_integral(m);
        // sqrt(t) moment: T_m(2t-1) = T_{2m}(s) with t = s^2, so
        // int_0^1 T_m(2t-1) sqrt(t) dt = 2 int_0^1 s^2 T_{2m}(s) ds.
        if (m == 0) {
            m2[m] = cheb_half_integral(2) + cheb_half_integral(0);
        } else {
            m2[m] = 0.5 * (cheb_half_integral(2 * m + 2) + 2.0 * cheb_half_integral(2 * m) +
                           cheb_half_integral(2 * m - 2));
        }
        // t moment: (1/4) int_{-1}^{1} T_m (1+x) dx with x T_m = (T_{m+1}+T_{|m-1|})/2.
        double xt = 0.5 * (cheb_full_integral(m + 1) + cheb_full_integral(std::abs(m - 1)));
        m3[m] = 0.25 * (cheb_full_integral(m) + xt);
    }

    // int f(r) r dr = (1/2) int p(t) dt, etc.
    qw1_ = 0.5 * (coeff.transpose() * m1);
    qw2_ = 0.5 * (coeff.transpose() * m2);
    qw3_ = 0.5 * (coeff.transpose() * m3);
}

Mat RadialGrid::resample_to(const RadialGrid& fine) const {
    const int n = count();
    const int nf = fine.count();
    Mat P = Mat::Zero(nf, n);
    for (int i = 0; i < nf; ++i) {
        double t = fine.tnodes()[i];
        int hit = -1;
        for (int j = 0; j < n; ++j) {
            if (t == t_[j]) {
                hit = j;
                break;
            }
        }
        if (hit >= 0) {
            P(i, hit) = 1.0;
            continue;
        }
        double denom = 0.0;
        for (int j = 0; j < n; ++j) denom += bary_[j] / (t - t_[j]);
        for (int j = 0; j < n; ++j) P(i, j) = (bary_[j] / (t - t_[j])) / denom;
    }
    return P;
}

double RadialGrid::interpolate(const Vec& samples, double t) const {
    double num = 0.0, den = 0.0;
    for (int j = 0; j < count(); ++j) {
        if (t == t_[j]) return samples[j];
        double w = bary_[j] / (t - t_[j]);
        num += w * samples[j];
        den += w;
    }
    return num / den;
}

Complex RadialGrid::interpolate(const CVec& samples, double t) const {
    Complex num = 0.0;
    double den = 0.0;
    for (int j = 0; j < count(); ++j) {
        if (t == t_[j]) return samples[j];
        double w = bary_[j] / (t - t_[j]);
        num += w * samples[j];
        den += w;
    }
    return num / den;
}

std::shared_ptr<const RadialGrid> build_grid(int size) {
    return std::make_shared<const RadialGrid>(size);
}

RadialField::RadialField(std::shared_ptr<const RadialGrid> grid, CVec values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    require(values_.size() == grid_->count(), ErrorKind::Input, "field has ", values_.size(),
            " samples for a grid with ", grid_->count(), " nodes");
}

RadialField::RadialField(std::shared_ptr<const RadialGrid> grid, const Vec& values)
    : RadialField(std::move(grid), CVec(values.cast<Complex>())) {}

RadialField RadialField::zero(std::shared_ptr<const RadialGrid> grid) {
    CVec v = CVec::Zero(grid->count());
    return RadialField(std::move(grid), std::move(v));
}

Complex weighted_integral(const RadialGrid& grid, const CVec& values, Weight weight) {
    require(values.size() == grid.count(), ErrorKind::Input, "sample count mismatch");
    const Vec* w = nullptr;
    switch (weight) {
        case Weight::R: w = &grid.qweights(); break;
        case Weight::R2: w = &grid.qweights2(); break;
        case Weight::R3: w = &grid.qweights3(); break;
    }
    Complex acc = 0.0;
    for (int i = 0; i < grid.count(); ++i) acc += (*w)[i] * values[i];
    return acc;
}

Complex weighted_integral(const RadialField& field, Weight weight) {
    return weighted_integral(*field.grid(), field.values(), weight);
}

RadialField apply_delta4(const RadialField& field) {
    const auto& g = *field.grid();
    CVec out = g.delta4() * field.values();
    return RadialField(field.grid(), std::move(out));
}

CVec odd_quotient(const RadialGrid& grid, const CVec& f_samples) {
    require(f_samples.size() == grid.count(), ErrorKind::Input, "sample count mismatch");
    const int n = grid.count();
    CVec q(n);
    for (int k = 1; k < n; ++k) q[k] = f_samples[k] / grid.nodes()[k];
    CVec rf = grid.nodes().cast<Complex>().cwiseProduct(f_samples);
    q[0] = (grid.dt().row(0) * rf)(0);
    return q;
}

void check_same_grid(const RadialField& a, const RadialField& b) {
    require(a.grid().get() == b.grid().get() || a.grid()->size() == b.grid()->size(),
            ErrorKind::Input, "fields live on different grids");
}

}  // namespace pipeflow
