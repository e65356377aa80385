#pragma once

#include <span>
#include <string>
#include <vector>

#include "qrabi/dynamics.hpp"

namespace qrabi {

struct TimeSeries {
    std::vector<double> taus;
    std::vector<double> values;
    std::string label;

    // Strictly increasing taus, matching lengths, finite values.
    void validate() const;
};

struct MandelSample {
    double tau = 0.0;
    double mean = 0.0;
    double variance = 0.0;
    double q = 0.0;
};

enum class Statistics { Sub, Super };

// Mandel Q of a photon-number distribution. JC counts excitations with
// eta = a^dag a, AJC with eta = a a^dag (mean shifted by one, same variance).
// Throws std::domain_error when the counting mean is <= 1e-15 (vacuum field
// under JC counting leaves Q undefined).
MandelSample mandel_q(std::span<const double> p, ModelKind kind,
                      double tau = 0.0);

// Population inversion W(tau) = <sigma_z>; the rz component of the Bloch
// vector. W(0) = -1 for the ground-state start.
double inversion(const PhotonDistribution& dist, const CouplingConfig& cfg,
                 double tau);

// Von Neumann entropy of the reduced atomic state in bits: the binary
// entropy of (1 -+ |b|)/2 with the 0*log0 = 0 convention; |b| is clamped
// to 1. S in [0, 1].
double entropy(const BlochVector& b);

// Revival time 2*pi*sqrt(intensity) in scaled time.
double revival_time(double intensity);

// Sub if more than half of the sampled Q values are negative, else Super
// (ties resolve to Super).
Statistics dominant_statistics(const TimeSeries& q_series);

// Uniform grid of `steps` points spanning [tau_min, tau_max].
std::vector<double> tau_grid(double tau_min, double tau_max, int steps);

TimeSeries mandel_series(const PhotonDistribution& dist,
                         const CouplingConfig& cfg,
                         std::span<const double> taus);
TimeSeries inversion_series(const PhotonDistribution& dist,
                            const CouplingConfig& cfg,
                            std::span<const double> taus);
TimeSeries entropy_series(const PhotonDistribution& dist,
                          const CouplingConfig& cfg,
                          std::span<const double> taus);

}  // namespace qrabi
