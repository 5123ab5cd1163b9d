#pragma once

#include <Eigen/Dense>
#include <complex>
#include <memory>
#include <vector>

#include "errors.hpp"

namespace pipeflow {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;

// Collocation grid on [0,1] for smooth even functions of the radius.
//
// The nodes are r_k = cos((M-k) pi / (2M)), k = 0..M, stored ascending, so
// r_0 = 0 and r_M = 1 with cosine clustering at the wall.  Their squares
// t_k = r_k^2 are the Chebyshev-Lobatto points of [0,1]; an even polynomial
// of degree 2M in r is an ordinary polynomial of degree M in t, so all
// operators below are built from standard Chebyshev collocation in t.
// In particular
//     d/dr   = 2 r d/dt,
//     d2/dr2 = 2 d/dt + 4 t d2/dt2,
//     delta4 = d2/dr2 + (3/r) d/dr = 4 t d2/dt2 + 8 d/dt,
// and the axis rows carry the analytic even-function limits with no special
// casing (at t = 0, delta4 f = 8 f_t(0) = 4 f''(0)).
class RadialGrid {
  public:
    explicit RadialGrid(int size);

    int size() const { return size_; }        // polynomial degree M in t = r^2
    int count() const { return size_ + 1; }   // number of nodes

    const Vec& nodes() const { return r_; }   // radii, ascending, r[0]=0, r[M]=1
    const Vec& tnodes() const { return t_; }  // squared radii (Lobatto points of [0,1])

    const Mat& dt() const { return dt_; }          // d/dt on the t-interpolant
    const Mat& d1() const { return d1_; }          // d/dr, exact on even polynomials
    const Mat& d2() const { return d2_; }          // d^2/dr^2
    const Mat& delta4() const { return delta4_; }  // d^2/dr^2 + (3/r) d/dr

    const Vec& qweights() const { return qw1_; }   // integrates f(r) r   dr over [0,1]
    const Vec& qweights2() const { return qw2_; }  // integrates f(r) r^2 dr
    const Vec& qweights3() const { return qw3_; }  // integrates f(r) r^3 dr

    // Interpolation matrix from this grid to the nodes of `fine` (barycentric in t).
    Mat resample_to(const RadialGrid& fine) const;

    // Values of the interpolant at arbitrary t in [0,1].
    double interpolate(const Vec& samples, double t) const;
    Complex interpolate(const CVec& samples, double t) const;

  private:
    int size_;
    Vec r_, t_, bary_;            // nodes and barycentric weights in t
    Mat dt_, d1_, d2_, delta4_;
    Vec qw1_, qw2_, qw3_;
};

std::shared_ptr<const RadialGrid> build_grid(int size);

// Complex samples on a grid, one value per node.
class RadialField {
  public:
    RadialField() = default;
    RadialField(std::shared_ptr<const RadialGrid> grid, CVec values);
    RadialField(std::shared_ptr<const RadialGrid> grid, const Vec& values);
    static RadialField zero(std::shared_ptr<const RadialGrid> grid);

    const std::shared_ptr<const RadialGrid>& grid() const { return grid_; }
    const CVec& values() const { return values_; }
    CVec& values() { return values_; }
    int count() const { return static_cast<int>(values_.size()); }
    Complex operator[](int i) const { return values_[i]; }

  private:
    std::shared_ptr<const RadialGrid> grid_;
    CVec values_;
};

enum class Weight { R, R2, R3 };

// Quadrature of field * weight over [0,1].
Complex weighted_integral(const RadialField& field, Weight weight);
Complex weighted_integral(const RadialGrid& grid, const CVec& values, Weight weight);

// Pointwise delta4 of an even-function sample vector; axis value is the limit.
RadialField apply_delta4(const RadialField& field);

// Samples of f/r at the nodes for an odd function given by samples f.
// The axis value is the limit f'(0), evaluated spectrally: r*f is even and
// equals t*(f/r), so (f/r)(0) = d(r f)/dt at t = 0.
CVec odd_quotient(const RadialGrid& grid, const CVec& f_samples);

void check_same_grid(const RadialField& a, const RadialField& b);

}  // namespace pipeflow
