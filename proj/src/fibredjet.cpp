#include "fibredflower/fibredjet.hpp"

#include <cmath>
#include <stdexcept>

namespace fibred {

namespace series {

FiberSeries zero(int order) { return FiberSeries(static_cast<std::size_t>(order) + 1); }

FiberSeries mul(const FiberSeries& a, const FiberSeries& b, int order) {
    FiberSeries r = zero(order);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (i + j > static_cast<std::size_t>(order)) break;
            if (b[j].is_zero()) continue;
            r[i + j] = r[i + j] + fibred::mul(a[i], b[j]);
        }
    }
    return r;
}

FiberSeries compose(const FiberSeries& f, const FiberSeries& g, int order) {
    if (!g.empty() && !g[0].is_zero())
        throw std::invalid_argument("series::compose: g must vanish at 0");
    // Horner over series
    FiberSeries acc = zero(order);
    for (int j = std::min<int>(order, static_cast<int>(f.size()) - 1); j >= 0; --j) {
        acc = mul(acc, g, order);
        if (j < static_cast<int>(f.size())) acc[0] = acc[0] + f[j];
    }
    return acc;
}

FiberSeries reversion(const FiberSeries& f, int order) {
    if (f.size() < 2 || f[1].is_zero() || f[1].degree() != 0)
        throw std::invalid_argument("series::reversion: f[1] must be a nonzero constant");
    Complex u = mean(f[1]);
    FiberSeries g = zero(order);
    g[1] = TrigPoly::constant(1.0 / u);
    for (int m = 2; m <= order; ++m) {
        FiberSeries fg = compose(f, g, m);
        g[m] = -(fg[m] * (1.0 / u));
    }
    return g;
}

FiberSeries rotated(const FiberSeries& s, const RotationNumber& alpha) {
    FiberSeries r = s;
    for (auto& c : r) c = rotate(c, alpha);
    return r;
}

} // namespace series

FibredJet::FibredJet(RotationNumber alpha_, int order_)
    : alpha(std::move(alpha_)), order(order_), a(static_cast<std::size_t>(order_) + 1) {
    if (order_ < 2) throw std::invalid_argument("FibredJet: order must be >= 2");
}

FibredJet FibredJet::identity(RotationNumber alpha_, int order_) {
    return FibredJet(std::move(alpha_), order_);
}

const TrigPoly& FibredJet::coeff(int j) const {
    if (j < 2 || j > order) throw std::out_of_range("FibredJet::coeff: order out of range");
    return a[static_cast<std::size_t>(j)];
}

void FibredJet::set_coeff(int j, TrigPoly p) {
    if (j < 2 || j > order) throw std::out_of_range("FibredJet::set_coeff: order out of range");
    a[static_cast<std::size_t>(j)] = std::move(p);
}

int FibredJet::leading_order(double dust) const {
    double scale = 0.0;
    for (int j = 2; j <= order; ++j) scale = std::max(scale, a[j].max_abs_coeff());
    for (int j = 2; j <= order; ++j)
        if (a[j].max_abs_coeff() > dust * std::max(scale, 1.0)) return j;
    return 0;
}

FiberSeries FibredJet::fiber_series() const {
    FiberSeries s = series::zero(order);
    s[1] = TrigPoly::constant(lambda);
    for (int j = 2; j <= order; ++j) s[j] = a[j];
    return s;
}

Complex FibredJet::eval_fiber(double theta, Complex z) const {
    return static_cast<Complex>(
        eval_fiber_ld(theta, std::complex<long double>(z.real(), z.imag())));
}

std::complex<long double> FibredJet::eval_fiber_ld(long double theta,
                                                   std::complex<long double> z) const {
    std::complex<long double> acc{0.0L, 0.0L};
    for (int j = order; j >= 2; --j) {
        auto c = a[j].eval_ld(theta);
        acc = (acc + c) * z;
    }
    return (acc + std::complex<long double>(lambda.real(), lambda.imag())) * z;
}

Complex InfinityJet::eval_fiber(double theta, Complex Z) const {
    Complex acc = Z + k + drift.eval(theta);
    Complex zi = 1.0 / Z;
    Complex p = zi;
    for (int j = 1; j <= tail(); ++j) {
        acc += b[j].eval(theta) * p;
        p *= zi;
    }
    return acc;
}

InfinityJet to_infinity(const FibredJet& F) {
    if (std::abs(F.lambda - Complex{1.0, 0.0}) > 1e-12)
        throw std::domain_error("to_infinity: multiplier must be 1 (iterate first)");
    int M = F.order - 1; // order in w = 1/Z
    // f(-w) = -w (1 - T), T = sum_{j>=2} (-1)^j a_j w^{j-1}
    FiberSeries T = series::zero(M);
    for (int j = 2; j <= F.order; ++j)
        T[j - 1] = (j % 2 == 0) ? F.coeff(j) : -F.coeff(j);
    // -1/f(-w) = (1/w) (1 + T + T^2 + ...)
    FiberSeries P = series::zero(M);
    P[0] = TrigPoly::constant(1.0);
    FiberSeries Tp = T;
    for (int i = 1; i <= M; ++i) {
        for (int j = 0; j <= M; ++j) P[j] = P[j] + Tp[j];
        if (i < M) Tp = series::mul(Tp, T, M);
    }
    InfinityJet G;
    G.alpha = F.alpha;
    Complex m0 = mean(P[1]);
    G.k = m0;
    G.drift = P[1] - TrigPoly::constant(m0);
    G.b.assign(static_cast<std::size_t>(std::max(F.order - 1, 1)), TrigPoly{});
    for (int j = 1; j <= F.order - 2; ++j) G.b[j] = P[j + 1];
    G.derived_from = "to_infinity";
    return G;
}

namespace {

double binom(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

InfinityJet conjugate_translation(const InfinityJet& G, const TrigPoly& c) {
    InfinityJet R;
    R.alpha = G.alpha;
    R.derived_from = G.derived_from + "+T_c";
    // Z^0 term: k + drift + c(theta + alpha) - c(theta)
    TrigPoly t0 = G.drift + rotate(c, G.alpha) - c;
    Complex m0 = mean(t0);
    R.k = G.k + m0;
    R.drift = (t0 - TrigPoly::constant(m0)).cleaned();
    int tail = G.tail();
    R.b.assign(static_cast<std::size_t>(tail) + 1, TrigPoly{});
    // b_i / (Z - c)^i = sum_l binom(i+l-1, l) c^l b_i Z^{-(i+l)}
    std::vector<TrigPoly> cpow(static_cast<std::size_t>(tail) + 1);
    cpow[0] = TrigPoly::constant(1.0);
    for (int l = 1; l <= tail; ++l) cpow[l] = mul(cpow[l - 1], c);
    for (int m = 1; m <= tail; ++m) {
        TrigPoly acc;
        for (int i = 1; i <= m; ++i) {
            if (G.b[i].is_zero()) continue;
            acc = acc + mul(G.b[i], cpow[m - i]) * binom(m - 1, m - i);
        }
        R.b[m] = acc.cleaned();
    }
    return R;
}

InfinityJet conjugate_homothety(const InfinityJet& G, Complex k) {
    if (k == Complex{}) throw std::invalid_argument("conjugate_homothety: k must be nonzero");
    InfinityJet R;
    R.alpha = G.alpha;
    R.derived_from = G.derived_from + "+A_k";
    Complex ki = 1.0 / k;
    R.k = G.k * ki;
    R.drift = G.drift * ki;
    R.b.assign(G.b.size(), TrigPoly{});
    Complex f = ki;
    for (int j = 1; j <= G.tail(); ++j) {
        f *= ki; // k^{-(j+1)}
        R.b[j] = G.b[j] * f;
    }
    return R;
}

FibredJet elementary_conjugate(const FibredJet& F, const TrigPoly& h, int m) {
    if (m < 2 || m > F.order)
        throw std::invalid_argument("elementary_conjugate: need 2 <= m <= order");
    const int N = F.order;
    FiberSeries H = series::zero(N);
    H[1] = TrigPoly::constant(1.0);
    H[m] = h;
    FiberSeries Hinv = series::reversion(H, N);
    FiberSeries inner = series::compose(F.fiber_series(), H, N);
    FiberSeries out = series::compose(series::rotated(Hinv, F.alpha), inner, N);

    FibredJet R(F.alpha, N);
    R.lambda = F.lambda;
    R.root = F.root;
    for (int j = 2; j <= N; ++j) R.set_coeff(j, out[j].cleaned());
    return R;
}

FibredJet iterate(const FibredJet& F, int n) {
    if (n < 1) throw std::invalid_argument("iterate: n must be >= 1");
    const int N = F.order;
    FiberSeries self = F.fiber_series();
    FiberSeries acc = self;
    for (int j = 1; j < n; ++j)
        acc = series::compose(series::rotated(self, F.alpha.multiplied(j)), acc, N);

    FibredJet R(F.alpha.multiplied(n), N);
    R.lambda = mean(acc[1]);
    if (F.root) {
        std::int64_t q = F.root->q;
        std::int64_t pn = (F.root->p * (n % q)) % q;
        std::int64_t g = std::gcd(pn == 0 ? q : pn, q);
        R.root = RootOfUnity(pn / g, q / g);
        if (R.root->is_one()) R.lambda = Complex{1.0, 0.0}; // exact at resonant powers
    }
    for (int j = 2; j <= N; ++j) R.set_coeff(j, acc[j].cleaned());
    return R;
}

FibredJet power_fold(const FibredJet& F, int n) {
    if (n < 1) throw std::invalid_argument("power_fold: n must be >= 1");
    if (n == 1) return F;
    if (std::abs(F.lambda - Complex{1.0, 0.0}) > 1e-12)
        throw std::domain_error("power_fold: multiplier must be 1");
    int lead = F.leading_order();
    if (lead != 0 && lead <= n)
        throw std::domain_error("power_fold: jet has nonzero coefficients below order n+1");
    const int N = F.order;
    // f(z)^n = z^n (1+u)^n, u = sum_{j >= n+1} a_j z^{j-1}, exact to z^{N-1}
    FiberSeries u = series::zero(N - 1);
    for (int j = n + 1; j <= std::min(F.order, N); ++j)
        if (j - 1 <= N - 1) u[j - 1] = F.coeff(j);
    FiberSeries v = series::zero(N - 1);
    v[0] = TrigPoly::constant(1.0);
    FiberSeries up = u;
    for (int i = 1; i <= n; ++i) {
        double bc = binom(n, i);
        for (int j = 0; j <= N - 1; ++j) v[j] = v[j] + up[j] * bc;
        if (i < n) up = series::mul(up, u, N - 1);
    }
    int M = 1 + (N - 1) / n;
    FibredJet R(F.alpha, std::max(M, 2));
    for (int e = 1; e < M; ++e) {
        int t = e * n; // z exponent contributing to w^{1+e}
        if (t <= N - 1 && 1 + e >= 2) R.set_coeff(1 + e, v[t].cleaned());
    }
    return R;
}

FibredJet inverse_jet(const FibredJet& F) {
    const int N = F.order;
    FiberSeries inv = series::reversion(F.fiber_series(), N);
    RotationNumber back = F.alpha.multiplied(-1);
    FiberSeries out = series::rotated(inv, back);
    FibredJet R(back, N);
    R.lambda = mean(out[1]);
    for (int j = 2; j <= N; ++j) R.set_coeff(j, out[j].cleaned());
    return R;
}

} // namespace fibred
