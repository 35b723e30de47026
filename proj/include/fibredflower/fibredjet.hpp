#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fibredflower/trigpoly.hpp"

namespace fibred {

/// Truncated power series in z with TrigPoly coefficients, indexed by power:
/// s[j] is the coefficient of z^j, valid up to s[N]. s[0] is identically zero
/// for every series in this pipeline.
using FiberSeries = std::vector<TrigPoly>;

namespace series {

FiberSeries zero(int order);

/// Truncated product, exact up to z^order.
FiberSeries mul(const FiberSeries& a, const FiberSeries& b, int order);

/// f(g(z)) truncated; requires g[0] = 0.
FiberSeries compose(const FiberSeries& f, const FiberSeries& g, int order);

/// Compositional inverse: g with f(g(z)) = z + O(z^{order+1}).
/// Requires f[1] a nonzero constant.
FiberSeries reversion(const FiberSeries& f, int order);

/// Every coefficient composed with theta -> theta + alpha.
FiberSeries rotated(const FiberSeries& s, const RotationNumber& alpha);

} // namespace series

/// Truncated fibred map F(theta, z) = (theta + alpha, lambda z + sum a_j(theta) z^j),
/// j = 2..order. The invariant curve sits at the zero section; lambda is the
/// constant multiplier along it (1 in the fully parabolic normalization).
struct FibredJet {
    RotationNumber alpha;
    Complex lambda{1.0, 0.0};
    std::optional<RootOfUnity> root; // set when lambda is a declared root of unity
    int order = 2;
    std::vector<TrigPoly> a; // size order+1, a[j] for j = 2..order

    FibredJet() = default;
    FibredJet(RotationNumber alpha_, int order_);

    static FibredJet identity(RotationNumber alpha_, int order_);

    const TrigPoly& coeff(int j) const;
    void set_coeff(int j, TrigPoly p);

    /// Smallest j >= 2 with a_j not numerically zero; 0 when none.
    int leading_order(double dust = 1e-13) const;

    FiberSeries fiber_series() const;

    Complex eval_fiber(double theta, Complex z) const;
    std::complex<long double> eval_fiber_ld(long double theta,
                                            std::complex<long double> z) const;
};

/// Laurent jet near infinity: Z + k + drift(theta) + sum_{j>=1} b_j(theta)/Z^j.
/// drift has zero mean by construction; it vanishes once the translation
/// conjugacy T_c has been applied.
struct InfinityJet {
    RotationNumber alpha;
    Complex k{};
    TrigPoly drift;
    std::vector<TrigPoly> b; // size tail+1, b[j] for j = 1..tail
    std::string derived_from;

    int tail() const { return static_cast<int>(b.size()) - 1; }
    Complex eval_fiber(double theta, Complex Z) const;
};

/// Fatou-coordinate expansion of I.F.I^{-1} with I(theta,z) = (theta, -1/z):
/// Z + a2(theta) + (a2^2 - a3)(theta)/Z + ... Requires lambda = 1.
InfinityJet to_infinity(const FibredJet& F);

/// T_c . G . T_c^{-1} with T_c(theta, Z) = (theta, Z + c(theta)).
InfinityJet conjugate_translation(const InfinityJet& G, const TrigPoly& c);

/// A_k . G . A_k^{-1} with A_k(theta, Z) = (theta, Z/k); the translation
/// constant becomes t0/k and b_j picks up the factor k^{-(j+1)}.
InfinityJet conjugate_homothety(const InfinityJet& G, Complex k);

/// H^{-1} . F . H for H(theta, z) = (theta, z + h(theta) z^m), computed by
/// generic truncated composition and reversion.
FibredJet elementary_conjugate(const FibredJet& F, const TrigPoly& h, int m);

/// Truncated n-fold composition; multiplier lambda^n, base rotation n*alpha.
FibredJet iterate(const FibredJet& F, int n);

/// Power fold Phi_n(theta, z) = (theta, w = z^n) applied to a jet of leading
/// order n+1: yields w + n a_{n+1}(theta) w^2 + ... Coefficients at exponents
/// not congruent to 1 mod n (meaningless in the w chart) are discarded.
FibredJet power_fold(const FibredJet& F, int n);

/// F^{-1} as a jet: base rotation -alpha, fibre the compositional inverse.
FibredJet inverse_jet(const FibredJet& F);

} // namespace fibred
