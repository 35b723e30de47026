#pragma once

#include <cstdint>
#include <vector>

#include "fibredflower/trigpoly.hpp"

namespace fibred {

/// Solution of c(theta + alpha) - c(theta) = -g(theta) + k with k = mean(g)
/// and the normalization mean(c) = 0.
struct CohomSolution {
    TrigPoly c;
    Complex k{};
    std::int64_t worst_n = 0;     // frequency of the smallest divisor used
    double worst_divisor = 0.0;   // |e^{2 pi i n alpha} - 1| there
    bool ill_conditioned = false; // some divisor fell below the floor
};

/// Fourier-mode solve: chat(n) = -ghat(n) / (e^{2 pi i n alpha} - 1), n != 0.
/// Exact over trig polynomials; degree of c equals degree of g.
/// Rational alpha throws (resonance). Divisors below divisor_floor only set
/// the ill_conditioned flag; the caller decides whether to trust the step.
CohomSolution solve_exact(const TrigPoly& g, const RotationNumber& alpha,
                          double divisor_floor = 1e-13);

struct BirkhoffReport {
    double max_abs = 0.0;   // running max of |S_n(g - mean g)| over n <= N
    double slope = 0.0;     // log-log growth exponent fit of the running max
    std::vector<std::pair<std::int64_t, double>> checkpoints;
};

/// Partial sums S_n = sum_{j<n} (g - mean g)(theta0 + j alpha). Bounded sums
/// (slope ~ 0) indicate a continuous cohomological solution exists.
BirkhoffReport birkhoff_diagnostic(const TrigPoly& g, const RotationNumber& alpha,
                                   double theta0, std::int64_t N);

} // namespace fibred
