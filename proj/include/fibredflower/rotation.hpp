#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace fibred {

using Complex = std::complex<double>;

/// Base rotation number alpha, reduced mod 1 at construction.
///
/// Two representations are supported: a plain floating value, or continued
/// fraction partial quotients [a0; a1, a2, ...] with an optional eventually
/// periodic tail (the last `periodic_tail` quotients repeat forever).
/// Multiples n*alpha are reduced in extended precision so that orbit code
/// can push n up to 1e6 without losing the fractional part.
class RotationNumber {
public:
    static RotationNumber from_value(double x);
    static RotationNumber from_cf(std::vector<std::int64_t> quotients,
                                  std::optional<int> periodic_tail = std::nullopt);
    static RotationNumber rational(std::int64_t p, std::int64_t q);
    /// (sqrt(5)-1)/2, continued fraction [0; 1, 1, 1, ...].
    static RotationNumber golden_mean();

    bool is_rational() const { return rational_; }
    /// Reduced denominator when rational; throws otherwise.
    std::int64_t denominator() const;
    std::int64_t numerator() const;

    /// alpha in [0,1), extended precision.
    long double value() const { return value_; }

    /// Fractional part of n*alpha in [0,1).
    long double frac_multiple(std::int64_t n) const;

    /// Rotation number of the base iterate: n*alpha mod 1. Continued-fraction
    /// form is not propagated; the cached extended-precision value is.
    RotationNumber multiplied(std::int64_t n) const;

    const std::vector<std::int64_t>& quotients() const { return cf_; }
    bool has_cf() const { return !cf_.empty(); }

    /// Convergents p_k/q_k of the continued fraction (requires cf form).
    std::vector<std::pair<std::int64_t, std::int64_t>> convergents(int count) const;

private:
    RotationNumber() = default;
    long double value_ = 0.0L;
    bool rational_ = false;
    std::int64_t p_ = 0, q_ = 1;          // valid when rational_
    std::vector<std::int64_t> cf_;        // may be empty for float form
    int periodic_tail_ = 0;               // 0 = no periodic tail
};

/// e^{2*pi*i*n*alpha} - 1, computed from the reduced fractional part of
/// n*alpha. Rejects n = 0 (the divisor is exactly zero).
Complex small_divisor(const RotationNumber& alpha, std::int64_t n);

/// Unit phase e^{2*pi*i*n*alpha}.
Complex rotation_phase(const RotationNumber& alpha, std::int64_t n);

struct DiophantineParams {
    double c = 1.0;     // CD(c,tau) constant, > 0
    double tau = 0.0;   // >= 0
    double sigma = 2.0; // small-divisor exponent, default 2 + tau
};

struct DiophantineReport {
    std::int64_t worst_n = 0;
    double worst_divisor = 0.0;   // |e^{2 pi i n alpha} - 1| at worst_n
    double worst_ratio = 0.0;     // 1 / (|divisor| * n^sigma) at worst_n
    double min_admissible_C = 0.0;
    bool pass = false;
};

/// Scans 0 < n <= n_max and verifies 1/|e^{2 pi i n alpha} - 1| <= C * n^sigma.
/// pass means the empirical constant does not exceed 1/params.c.
/// Throws std::domain_error for rational alpha (resonance at n = q).
DiophantineReport diophantine_check(const RotationNumber& alpha,
                                    const DiophantineParams& params,
                                    std::int64_t n_max);

/// lambda = e^{2 pi i p / q} with gcd(p,q) = 1; lambda^q = 1 primitively.
struct RootOfUnity {
    std::int64_t p = 0;
    std::int64_t q = 1;

    RootOfUnity() = default;
    RootOfUnity(std::int64_t p_, std::int64_t q_);
    Complex value() const;
    bool is_one() const { return q == 1; }
};

} // namespace fibred
