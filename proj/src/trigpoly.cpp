#include "fibredflower/trigpoly.hpp"

#include <cmath>
#include <cstdlib>

namespace fibred {

namespace {
constexpr long double kPiL = 3.141592653589793238462643383279502884L;
constexpr double kDropTol = 1e-15;
}

TrigPoly TrigPoly::constant(Complex c) {
    TrigPoly p;
    if (c != Complex{}) p.modes_[0] = c;
    return p;
}

TrigPoly TrigPoly::mode(int n, Complex c) {
    TrigPoly p;
    if (c != Complex{}) p.modes_[n] = c;
    return p;
}

TrigPoly TrigPoly::sine() {
    TrigPoly p;
    p.modes_[1] = Complex(0.0, -0.5);
    p.modes_[-1] = Complex(0.0, 0.5);
    return p;
}

TrigPoly TrigPoly::cosine() {
    TrigPoly p;
    p.modes_[1] = Complex(0.5, 0.0);
    p.modes_[-1] = Complex(0.5, 0.0);
    return p;
}

int TrigPoly::degree() const {
    int d = 0;
    for (const auto& [n, c] : modes_) d = std::max(d, std::abs(n));
    return d;
}

Complex TrigPoly::coeff(int n) const {
    auto it = modes_.find(n);
    return it == modes_.end() ? Complex{} : it->second;
}

void TrigPoly::set_coeff(int n, Complex v) {
    if (v == Complex{}) modes_.erase(n);
    else modes_[n] = v;
}

TrigPoly TrigPoly::operator+(const TrigPoly& o) const {
    TrigPoly r = *this;
    for (const auto& [n, c] : o.modes_) {
        auto v = r.coeff(n) + c;
        r.set_coeff(n, v);
    }
    return r;
}

TrigPoly TrigPoly::operator-(const TrigPoly& o) const {
    TrigPoly r = *this;
    for (const auto& [n, c] : o.modes_) {
        auto v = r.coeff(n) - c;
        r.set_coeff(n, v);
    }
    return r;
}

TrigPoly TrigPoly::operator-() const {
    TrigPoly r;
    for (const auto& [n, c] : modes_) r.modes_[n] = -c;
    return r;
}

TrigPoly TrigPoly::operator*(Complex s) const {
    TrigPoly r;
    if (s == Complex{}) return r;
    for (const auto& [n, c] : modes_) r.modes_[n] = c * s;
    return r;
}

Complex TrigPoly::eval(double theta) const {
    return static_cast<Complex>(eval_ld(static_cast<long double>(theta)));
}

std::complex<long double> TrigPoly::eval_ld(long double theta) const {
    std::complex<long double> acc{0.0L, 0.0L};
    for (const auto& [n, c] : modes_) {
        long double ang = 2.0L * kPiL * static_cast<long double>(n) * theta;
        std::complex<long double> e{std::cos(ang), std::sin(ang)};
        acc += std::complex<long double>(c.real(), c.imag()) * e;
    }
    return acc;
}

double TrigPoly::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [n, c] : modes_) m = std::max(m, std::abs(c));
    return m;
}

TrigPoly TrigPoly::cleaned(double tol_rel) const {
    double floor = tol_rel * max_abs_coeff();
    TrigPoly r;
    for (const auto& [n, c] : modes_)
        if (std::abs(c) >= floor && c != Complex{}) r.modes_[n] = c;
    return r;
}

TrigPoly mul(const TrigPoly& p, const TrigPoly& q) {
    TrigPoly r;
    for (const auto& [n, cn] : p.modes())
        for (const auto& [m, cm] : q.modes()) {
            auto v = r.coeff(n + m) + cn * cm;
            r.set_coeff(n + m, v);
        }
    return r.cleaned(kDropTol);
}

TrigPoly rotate(const TrigPoly& p, const RotationNumber& alpha) {
    TrigPoly r;
    for (const auto& [n, c] : p.modes())
        r.set_coeff(n, c * rotation_phase(alpha, n));
    return r;
}

Complex mean(const TrigPoly& p) { return p.coeff(0); }

Complex eval(const TrigPoly& p, double theta) { return p.eval(theta); }

double strip_norm(const TrigPoly& p, double delta) {
    if (delta < 0.0) throw std::invalid_argument("strip_norm: delta must be >= 0");
    double s = 0.0;
    for (const auto& [n, c] : p.modes())
        s += std::abs(c) * std::exp(2.0 * M_PI * std::abs(n) * delta);
    return s;
}

} // namespace fibred
