#include "fibredflower/cohomology.hpp"

#include <cmath>
#include <limits>

namespace fibred {

CohomSolution solve_exact(const TrigPoly& g, const RotationNumber& alpha,
                          double divisor_floor) {
    if (alpha.is_rational())
        throw std::domain_error("solve_exact: rational alpha, resonance at n = " +
                                std::to_string(alpha.denominator()));
    CohomSolution sol;
    sol.k = mean(g);
    sol.worst_divisor = std::numeric_limits<double>::infinity();
    for (const auto& [n, c] : g.modes()) {
        if (n == 0) continue;
        Complex d = small_divisor(alpha, n);
        double ad = std::abs(d);
        if (ad < sol.worst_divisor) {
            sol.worst_divisor = ad;
            sol.worst_n = n;
        }
        if (ad < divisor_floor) sol.ill_conditioned = true;
        sol.c.set_coeff(n, -c / d);
    }
    if (sol.worst_n == 0) sol.worst_divisor = 0.0; // constant input, no divisor used
    return sol;
}

BirkhoffReport birkhoff_diagnostic(const TrigPoly& g, const RotationNumber& alpha,
                                   double theta0, std::int64_t N) {
    if (N < 1) throw std::invalid_argument("birkhoff_diagnostic: N must be >= 1");
    BirkhoffReport rep;
    TrigPoly g0 = g;
    g0.set_coeff(0, Complex{});
    std::complex<long double> sum{0.0L, 0.0L};
    std::int64_t next_checkpoint = 1;
    for (std::int64_t j = 0; j < N; ++j) {
        long double theta = std::fmod(static_cast<long double>(theta0) +
                                      alpha.frac_multiple(j), 1.0L);
        sum += g0.eval_ld(theta);
        double a = static_cast<double>(std::abs(sum));
        if (a > rep.max_abs) rep.max_abs = a;
        if (j + 1 == next_checkpoint || j + 1 == N) {
            rep.checkpoints.emplace_back(j + 1, rep.max_abs);
            next_checkpoint *= 2;
        }
    }
    // least-squares slope of log(max) against log(n), skipping the transient
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int m = 0;
    for (const auto& [n, v] : rep.checkpoints) {
        if (n < 8 || v <= 0.0) continue;
        double x = std::log(static_cast<double>(n)), y = std::log(v);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++m;
    }
    rep.slope = m >= 2 ? (m * sxy - sx * sy) / (m * sxx - sx * sx) : 0.0;
    return rep;
}

} // namespace fibred
