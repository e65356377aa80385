#pragma once

#include <limits>
#include <vector>

namespace qrabi {

// Hard cap on the retained Fock basis.
inline constexpr int kFockCap = 4096;

// Below this squeeze parameter the coherent-state closed form replaces the
// Hermite-based expression: the Hermite argument carries a 1/sqrt(sinh 2r)
// singularity and the two branches agree to ~1e-8 at the seam.
inline constexpr double kSqueezeMin = 1e-8;

// Initial-field parameters: coherent amplitude alpha, squeeze parameter r,
// squeeze phase theta. All evaluation paths require theta = 0; the squeezed
// coherent state is then real up to a global phase.
struct SqueezeSpec {
    double alpha = 0.0;
    double r = 0.0;
    double theta = 0.0;

    // Initial mean photon number alpha^2 + sinh^2(r).
    double intensity() const;

    // Throws std::invalid_argument on r < 0, non-finite alpha, or theta != 0.
    void validate() const;
};

// sign * exp(log_magnitude), with log_magnitude = -inf when sign = 0.
// Overflow-safe carrier for Hermite values and amplitude prefactors.
struct LogScaledValue {
    int sign = 0;
    double log_magnitude = -std::numeric_limits<double>::infinity();

    double value() const;
};

// Truncated photon-number distribution of a squeezed coherent state.
// amplitudes[n] is the signed real amplitude S_n = <n|alpha,r>; probs[n] is
// exactly amplitudes[n]^2. tail_mass bounds the discarded probability.
struct PhotonDistribution {
    std::vector<double> amplitudes;
    std::vector<double> probs;
    int n_max = 0;
    double tail_mass = 0.0;
};

struct Moments {
    double mean = 0.0;
    double variance = 0.0;
};

// alpha such that alpha^2 + sinh^2(r) equals the requested intensity.
// Throws std::domain_error when sinh^2(r) already exceeds it.
double coherent_amplitude_for_intensity(double intensity, double r);

// Physicists' Hermite polynomial H_n(x) as sign and log-magnitude, via the
// three-term recurrence H_{k+1} = 2x H_k - 2k H_{k-1} with periodic
// renormalisation; no intermediate overflows for n <= 2000, |x| <= 100.
LogScaledValue hermite_log_scaled(int n, double x);

// Amplitude S_n of the squeezed coherent state (theta = 0). All factorial,
// power and exponential factors are accumulated in the log domain and
// exponentiated once; r < kSqueezeMin routes to the coherent-state limit.
double amplitude(int n, const SqueezeSpec& spec);

// P_n ascending in n until the retained mass reaches 1 - eps_trunc and the
// index clears both mean + 10*sqrt(variance) and ceil(I + 10*sqrt(I) + 20),
// so the oscillatory squeezed tail cannot trigger an early stop.
// Requires 0 < eps_trunc <= 1e-6; throws TruncationError at kFockCap.
PhotonDistribution photon_number_distribution(const SqueezeSpec& spec,
                                              double eps_trunc);

// Mean and variance of the photon number under the distribution.
Moments moments(const PhotonDistribution& dist);

}  // namespace qrabi
