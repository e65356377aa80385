#pragma once

// Test-only extended-precision references, deliberately independent of the
// library's log-domain evaluation paths: plain long-double recurrences and
// direct products. Valid only where the factors stay inside the long-double
// range; the tests stay well inside it.

#include <cmath>

namespace testref {

// Physicists' Hermite polynomial by the raw three-term recurrence.
inline long double hermite(int n, long double x) {
    long double h_prev = 1.0L;
    if (n == 0) return h_prev;
    long double h = 2.0L * x;
    for (int k = 1; k < n; ++k) {
        const long double h_next = 2.0L * x * h - 2.0L * k * h_prev;
        h_prev = h;
        h = h_next;
    }
    return h;
}

// P_n of a squeezed coherent state (theta = 0, real alpha, r > 0) evaluated
// by direct products.
inline long double photon_probability(int n, long double alpha, long double r) {
    const long double th = tanhl(r);
    const long double x = alpha * expl(r) / sqrtl(sinhl(2.0L * r));
    const long double h = hermite(n, x);
    return powl(0.5L * th, static_cast<long double>(n)) /
           (tgammal(n + 1.0L) * coshl(r)) *
           expl(-alpha * alpha * (1.0L + th)) * h * h;
}

// Poisson probabilities for the r = 0 limit.
inline long double poisson_probability(int n, long double mean) {
    return expl(-mean + n * logl(mean) - lgammal(n + 1.0L));
}

struct VacuumMoments {
    long double total;
    long double mean;
    long double second;
};

// Squeezed-vacuum photon moments by direct summation: only even levels are
// occupied, P_{2k} = (tanh r / 2)^{2k} (2k)! / (k!^2 cosh r).
inline VacuumMoments squeezed_vacuum_moments(long double r, int k_terms) {
    VacuumMoments m{0.0L, 0.0L, 0.0L};
    for (int k = 0; k < k_terms; ++k) {
        const int n = 2 * k;
        const long double p =
            powl(0.5L * tanhl(r), static_cast<long double>(n)) *
            tgammal(n + 1.0L) / (tgammal(k + 1.0L) * tgammal(k + 1.0L) * coshl(r));
        m.total += p;
        m.mean += n * p;
        m.second += static_cast<long double>(n) * n * p;
    }
    return m;
}

}  // namespace testref
