#include "poly.hpp"

#include <cmath>

namespace pipeflow {

namespace {
bool negligible(Complex a) { return a == Complex(0.0); }
}

void Poly::trim() {
    while (!c_.empty() && negligible(c_.back())) c_.pop_back();
}

Poly Poly::monomial(int k, Complex a) {
    std::vector<Complex> c(k + 1, Complex(0.0));
    c[k] = a;
    return Poly(std::move(c));
}

Complex Poly::eval(double r) const {
    Complex acc = 0.0;
    for (int k = degree(); k >= 0; --k) acc = acc * r + c_[k];
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Complex> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<double>(k) * c_[k];
    return Poly(std::move(d));
}

Poly Poly::antiderivative() const {
    std::vector<Complex> d(c_.size() + 1, Complex(0.0));
    for (size_t k = 0; k < c_.size(); ++k) d[k + 1] = c_[k] / static_cast<double>(k + 1);
    return Poly(std::move(d));
}

Poly Poly::cyl_integral() const {
    std::vector<Complex> d(c_.size() + 1, Complex(0.0));
    for (size_t k = 0; k < c_.size(); ++k) d[k + 1] = c_[k] / static_cast<double>(k + 2);
    return Poly(std::move(d));
}

Poly Poly::ball4_integral() const {
    std::vector<Complex> d(c_.size() + 1, Complex(0.0));
    for (size_t k = 0; k < c_.size(); ++k) d[k + 1] = c_[k] / static_cast<double>(k + 4);
    return Poly(std::move(d));
}

Poly Poly::lop() const {
    require(coeff(0) == Complex(0.0), ErrorKind::Domain,
            "radial second-order operator applied to a polynomial with a constant term");
    if (c_.size() <= 1) return Poly();
    std::vector<Complex> d(c_.size() - 2 > 0 ? c_.size() - 2 : 0, Complex(0.0));
    for (size_t k = 2; k < c_.size(); ++k)
        d[k - 2] = (static_cast<double>(k) * k - 1.0) * c_[k];
    return Poly(std::move(d));
}

Poly Poly::delta4() const {
    require(coeff(1) == Complex(0.0), ErrorKind::Domain,
            "4d radial Laplacian applied to a polynomial with a linear term");
    if (c_.size() <= 2) return Poly();
    std::vector<Complex> d(c_.size() - 2, Complex(0.0));
    for (size_t k = 2; k < c_.size(); ++k)
        d[k - 2] = static_cast<double>(k) * (k + 2.0) * c_[k];
    return Poly(std::move(d));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Complex> d(std::max(c_.size(), o.c_.size()), Complex(0.0));
    for (size_t k = 0; k < d.size(); ++k) d[k] = coeff((int)k) + o.coeff((int)k);
    return Poly(std::move(d));
}

Poly Poly::operator-(const Poly& o) const { return *this + o * Complex(-1.0); }

Poly Poly::operator*(const Poly& o) const {
    if (c_.empty() || o.c_.empty()) return Poly();
    std::vector<Complex> d(c_.size() + o.c_.size() - 1, Complex(0.0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) d[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(d));
}

Poly Poly::operator*(Complex a) const {
    std::vector<Complex> d = c_;
    for (auto& x : d) x *= a;
    return Poly(std::move(d));
}

Poly Poly::shift_up(int k) const {
    if (c_.empty()) return Poly();
    std::vector<Complex> d(c_.size() + k, Complex(0.0));
    for (size_t i = 0; i < c_.size(); ++i) d[i + k] = c_[i];
    return Poly(std::move(d));
}

CVec Poly::sample(const RadialGrid& grid) const {
    CVec out(grid.count());
    for (int i = 0; i < grid.count(); ++i) out[i] = eval(grid.nodes()[i]);
    return out;
}

}  // namespace pipeflow
