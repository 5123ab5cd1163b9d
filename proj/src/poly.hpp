#pragma once

#include <complex>
#include <vector>

#include "errors.hpp"
#include "grid.hpp"

namespace pipeflow {

// Dense polynomial in the radius, monomial coefficients c[k] r^k, complex.
// Used where data is genuinely polynomial: the explicitly integrable
// zero-mode problems and test oracles.  Degrees stay small, so monomial
// arithmetic in double is exact enough.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Complex> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly monomial(int k, Complex a = 1.0);
    static Poly constant(Complex a) { return Poly({a}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Complex coeff(int k) const { return (k >= 0 && k < (int)c_.size()) ? c_[k] : Complex(0.0); }
    const std::vector<Complex>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    Complex eval(double r) const;
    Poly derivative() const;
    Poly antiderivative() const;  // int_0^r p

    // (1/r) int_0^r s p(s) ds  and  (1/r^3) int_0^r s^3 p(s) ds; both polynomial.
    Poly cyl_integral() const;
    Poly ball4_integral() const;

    // d2/dr2 + (1/r) d/dr - 1/r^2; requires no constant term.
    Poly lop() const;
    // d2/dr2 + (3/r) d/dr; requires no linear term.
    Poly delta4() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(Complex a) const;
    Poly shift_up(int k) const;  // multiply by r^k

    CVec sample(const RadialGrid& grid) const;

  private:
    void trim();
    std::vector<Complex> c_;
};

}  // namespace pipeflow
