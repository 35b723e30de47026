#include "fibredflower/rotation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace fibred {

namespace {

constexpr long double kPiL = 3.141592653589793238462643383279502884L;

long double frac1(long double x) {
    long double f = std::fmod(x, 1.0L);
    if (f < 0.0L) f += 1.0L;
    return f;
}

} // namespace

RotationNumber RotationNumber::from_value(double x) {
    RotationNumber r;
    r.value_ = frac1(static_cast<long double>(x));
    // Detect small rationals so resonance errors fire on inputs like 0.5.
    std::int64_t pm1 = 1, qm1 = 0, p = 0, q = 1; // convergents of the fractional part
    long double y = r.value_;
    for (int i = 0; i < 40 && q < 1000000; ++i) {
        if (std::abs(r.value_ - static_cast<long double>(p) / q) < 1e-12L) {
            r.rational_ = true;
            r.p_ = p;
            r.q_ = q;
            return r;
        }
        if (y < 1e-12L) break;
        long double inv = 1.0L / y;
        auto a = static_cast<std::int64_t>(std::floor(inv));
        y = inv - static_cast<long double>(a);
        std::int64_t pn = a * p + pm1, qn = a * q + qm1;
        pm1 = p; qm1 = q; p = pn; q = qn;
    }
    return r;
}

RotationNumber RotationNumber::from_cf(std::vector<std::int64_t> quotients,
                                       std::optional<int> periodic_tail) {
    if (quotients.empty()) throw std::invalid_argument("rotation: empty continued fraction");
    for (std::size_t i = 1; i < quotients.size(); ++i)
        if (quotients[i] < 1) throw std::invalid_argument("rotation: partial quotients must be >= 1");
    int tail = periodic_tail.value_or(0);
    if (tail < 0 || tail > static_cast<int>(quotients.size()))
        throw std::invalid_argument("rotation: bad periodic tail length");

    RotationNumber r;
    r.cf_ = quotients;
    r.periodic_tail_ = tail;

    // Evaluate by the convergent recurrence, unrolling the periodic tail until
    // the convergent gap 1/(q_k q_{k+1}) drops below long double resolution.
    long double pm1 = 1.0L, qm1 = 0.0L;
    long double p = static_cast<long double>(quotients[0]), q = 1.0L;
    std::size_t idx = 1;
    for (int steps = 0; steps < 256; ++steps) {
        if (idx >= quotients.size()) {
            if (tail == 0) break;
            idx = quotients.size() - static_cast<std::size_t>(tail);
        }
        long double a = static_cast<long double>(quotients[idx++]);
        long double pn = a * p + pm1, qn = a * q + qm1;
        pm1 = p; qm1 = q; p = pn; q = qn;
        if (q > 1e20L) break;
        if (qm1 > 0.0L && 1.0L / (q * qm1) < 1e-22L) break;
    }
    r.value_ = frac1(p / q);
    if (tail == 0) {
        r.rational_ = true;
        r.p_ = static_cast<std::int64_t>(p);
        r.q_ = static_cast<std::int64_t>(q);
        std::int64_t g = std::gcd(r.p_, r.q_);
        if (g > 1) { r.p_ /= g; r.q_ /= g; }
        r.p_ = ((r.p_ % r.q_) + r.q_) % r.q_;
    }
    return r;
}

RotationNumber RotationNumber::rational(std::int64_t p, std::int64_t q) {
    if (q <= 0) throw std::invalid_argument("rotation: denominator must be positive");
    RotationNumber r;
    std::int64_t g = std::gcd(std::abs(p), q);
    if (g > 1) { p /= g; q /= g; }
    p = ((p % q) + q) % q;
    r.rational_ = true;
    r.p_ = p;
    r.q_ = q;
    r.value_ = static_cast<long double>(p) / static_cast<long double>(q);
    return r;
}

RotationNumber RotationNumber::golden_mean() {
    RotationNumber r;
    r.value_ = (std::sqrt(5.0L) - 1.0L) / 2.0L;
    r.cf_ = {0, 1};
    r.periodic_tail_ = 1;
    return r;
}

std::int64_t RotationNumber::denominator() const {
    if (!rational_) throw std::domain_error("rotation: irrational has no denominator");
    return q_;
}

std::int64_t RotationNumber::numerator() const {
    if (!rational_) throw std::domain_error("rotation: irrational has no numerator");
    return p_;
}

long double RotationNumber::frac_multiple(std::int64_t n) const {
    if (rational_) {
        // exact integer arithmetic mod q
        __int128 r = static_cast<__int128>(n) * p_ % q_;
        if (r < 0) r += q_;
        return static_cast<long double>(static_cast<std::int64_t>(r)) / q_;
    }
    return frac1(static_cast<long double>(n) * value_);
}

RotationNumber RotationNumber::multiplied(std::int64_t n) const {
    if (rational_) {
        if (n == 0) return rational(0, 1);
        std::int64_t s = n < 0 ? -1 : 1;
        __int128 r = static_cast<__int128>(std::abs(n)) * p_ % q_;
        return rational(s * static_cast<std::int64_t>(r), q_);
    }
    RotationNumber r;
    long double f = frac_multiple(std::abs(n));
    if (n < 0 && f > 0.0L) f = 1.0L - f;
    r.value_ = f;
    if (n == 0) { r.rational_ = true; r.p_ = 0; r.q_ = 1; }
    return r;
}

std::vector<std::pair<std::int64_t, std::int64_t>> RotationNumber::convergents(int count) const {
    if (cf_.empty()) throw std::domain_error("rotation: no continued fraction form");
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    std::int64_t pm1 = 1, qm1 = 0;
    std::int64_t p = cf_[0], q = 1;
    out.emplace_back(p, q);
    std::size_t idx = 1;
    while (static_cast<int>(out.size()) < count) {
        if (idx >= cf_.size()) {
            if (periodic_tail_ == 0) break;
            idx = cf_.size() - static_cast<std::size_t>(periodic_tail_);
        }
        std::int64_t a = cf_[idx++];
        std::int64_t pn = a * p + pm1, qn = a * q + qm1;
        pm1 = p; qm1 = q; p = pn; q = qn;
        out.emplace_back(p, q);
        if (q > (std::int64_t{1} << 56)) break;
    }
    return out;
}

Complex rotation_phase(const RotationNumber& alpha, std::int64_t n) {
    long double f = alpha.frac_multiple(n);
    long double ang = 2.0L * kPiL * f;
    return {static_cast<double>(std::cos(ang)), static_cast<double>(std::sin(ang))};
}

Complex small_divisor(const RotationNumber& alpha, std::int64_t n) {
    if (n == 0) throw std::domain_error("small_divisor: n = 0 is resonant");
    long double f = alpha.frac_multiple(n);
    if (f > 0.5L) f -= 1.0L; // reduce to (-1/2, 1/2]
    long double hx = kPiL * f;
    long double s = std::sin(hx), c = std::cos(hx);
    // e^{ix} - 1 = 2 i sin(x/2) e^{i x/2}
    return {static_cast<double>(-2.0L * s * s), static_cast<double>(2.0L * s * c)};
}

DiophantineReport diophantine_check(const RotationNumber& alpha,
                                    const DiophantineParams& params,
                                    std::int64_t n_max) {
    if (n_max < 1) throw std::invalid_argument("diophantine_check: n_max must be >= 1");
    if (alpha.is_rational())
        throw std::domain_error("diophantine_check: rational alpha, resonance at n = " +
                                std::to_string(alpha.denominator()));
    DiophantineReport rep;
    rep.min_admissible_C = 0.0;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        double d = std::abs(small_divisor(alpha, n));
        double ratio = 1.0 / (d * std::pow(static_cast<double>(n), params.sigma));
        if (ratio > rep.min_admissible_C) {
            rep.min_admissible_C = ratio;
            rep.worst_n = n;
            rep.worst_divisor = d;
            rep.worst_ratio = ratio;
        }
    }
    rep.pass = rep.min_admissible_C <= 1.0 / params.c;
    return rep;
}

RootOfUnity::RootOfUnity(std::int64_t p_, std::int64_t q_) : p(p_), q(q_) {
    if (q <= 0) throw std::invalid_argument("root of unity: order must be positive");
    p = ((p % q) + q) % q;
    if (std::gcd(p == 0 ? q : p, q) != 1)
        throw std::invalid_argument("root of unity: p/q not reduced, not primitive");
}

Complex RootOfUnity::value() const {
    long double ang = 2.0L * kPiL * p / q;
    return {static_cast<double>(std::cos(ang)), static_cast<double>(std::sin(ang))};
}

} // namespace fibred
