#pragma once

#include <complex>
#include <map>

#include "fibredflower/rotation.hpp"

namespace fibred {

/// Finite Fourier series g(theta) = sum_n ghat(n) e^{2 pi i n theta} on
/// T^1 = R/Z. Exact mode arithmetic; no stored zero coefficients.
///
/// The coefficient ring of the whole pipeline: products convolve modes,
/// composition with theta -> theta + alpha multiplies mode n by the unit
/// phase e^{2 pi i n alpha}.
class TrigPoly {
public:
    TrigPoly() = default;

    static TrigPoly constant(Complex c);
    static TrigPoly mode(int n, Complex c);
    /// sin(2 pi theta), modes {1: -i/2, -1: i/2}.
    static TrigPoly sine();
    /// cos(2 pi theta), modes {1: 1/2, -1: 1/2}.
    static TrigPoly cosine();

    const std::map<int, Complex>& modes() const { return modes_; }
    int degree() const;
    bool is_zero() const { return modes_.empty(); }
    Complex coeff(int n) const;
    void set_coeff(int n, Complex v);

    TrigPoly operator+(const TrigPoly& o) const;
    TrigPoly operator-(const TrigPoly& o) const;
    TrigPoly operator-() const;
    TrigPoly operator*(Complex s) const;

    Complex eval(double theta) const;
    std::complex<long double> eval_ld(long double theta) const;

    /// Largest |coefficient|, 0 for the zero polynomial.
    double max_abs_coeff() const;

    /// Drops modes with |coeff| < tol_rel * max_abs_coeff().
    TrigPoly cleaned(double tol_rel = 1e-15) const;

private:
    std::map<int, Complex> modes_;
};

/// Pointwise product; modes are the convolution of the inputs.
TrigPoly mul(const TrigPoly& p, const TrigPoly& q);

/// theta -> p(theta + alpha); mode n multiplied by e^{2 pi i n alpha}.
TrigPoly rotate(const TrigPoly& p, const RotationNumber& alpha);

/// ghat(0).
Complex mean(const TrigPoly& p);

Complex eval(const TrigPoly& p, double theta);

/// Certified majorant of sup over the strip B_delta:
/// sum_n |ghat(n)| e^{2 pi |n| delta}. At delta = 0 this is an upper bound
/// for the sup norm on the circle, not the sup itself.
double strip_norm(const TrigPoly& p, double delta);

} // namespace fibred
