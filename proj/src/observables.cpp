#include "qrabi/observables.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qrabi/summation.hpp"

namespace qrabi {

void TimeSeries::validate() const {
    if (taus.size() != values.size()) {
        throw std::invalid_argument("time series length mismatch");
    }
    for (std::size_t i = 0; i < taus.size(); ++i) {
        if (!std::isfinite(taus[i]) || !std::isfinite(values[i])) {
            throw std::invalid_argument("time series contains non-finite entries");
        }
        if (i > 0 && !(taus[i] > taus[i - 1])) {
            throw std::invalid_argument("time grid must be strictly increasing");
        }
    }
}

MandelSample mandel_q(std::span<const double> p, ModelKind kind, double tau) {
    CompensatedSum mean_acc, second_acc;
    const double shift = (kind == ModelKind::AJC) ? 1.0 : 0.0;
    for (std::size_t n = 0; n < p.size(); ++n) {
        const double eta = static_cast<double>(n) + shift;
        mean_acc.add(eta * p[n]);
        second_acc.add(eta * eta * p[n]);
    }
    const double mean = mean_acc.value();
    if (mean <= 1e-15) {
        throw std::domain_error(
            "Mandel Q undefined: zero mean photon number under JC counting");
    }
    const double variance = second_acc.value() - mean * mean;
    return {tau, mean, variance, variance / mean - 1.0};
}

double inversion(const PhotonDistribution& dist, const CouplingConfig& cfg,
                 double tau) {
    return bloch_vector(dist, cfg, tau).rz;
}

double entropy(const BlochVector& b) {
    const double mag = std::min(b.norm(), 1.0);
    const double eta1 = 0.5 * (1.0 - mag);
    const double eta2 = 0.5 * (1.0 + mag);
    double s = 0.0;
    if (eta1 > 0.0) s -= eta1 * std::log2(eta1);
    if (eta2 > 0.0) s -= eta2 * std::log2(eta2);
    return s;
}

double revival_time(double intensity) {
    if (!(intensity > 0.0)) {
        throw std::domain_error("revival time requires intensity > 0");
    }
    return 2.0 * std::numbers::pi * std::sqrt(intensity);
}

Statistics dominant_statistics(const TimeSeries& q_series) {
    if (q_series.values.empty()) {
        throw std::invalid_argument("dominant_statistics needs a nonempty series");
    }
    const auto negative =
        std::count_if(q_series.values.begin(), q_series.values.end(),
                      [](double q) { return q < 0.0; });
    return 2 * static_cast<std::size_t>(negative) > q_series.values.size()
               ? Statistics::Sub
               : Statistics::Super;
}

std::vector<double> tau_grid(double tau_min, double tau_max, int steps) {
    if (steps < 2 || !(tau_max > tau_min)) {
        throw std::invalid_argument("tau grid needs steps >= 2 and tau_max > tau_min");
    }
    std::vector<double> taus(steps);
    const double dt = (tau_max - tau_min) / (steps - 1);
    for (int i = 0; i < steps; ++i) taus[i] = tau_min + i * dt;
    taus.back() = tau_max;
    return taus;
}

TimeSeries mandel_series(const PhotonDistribution& dist,
                         const CouplingConfig& cfg,
                         std::span<const double> taus) {
    TimeSeries out;
    out.label = "Q";
    out.taus.assign(taus.begin(), taus.end());
    out.values.reserve(taus.size());
    for (double tau : taus) {
        const auto p = reduced_field_diagonal(dist, cfg, tau);
        out.values.push_back(mandel_q(p, cfg.kind, tau).q);
    }
    return out;
}

TimeSeries inversion_series(const PhotonDistribution& dist,
                            const CouplingConfig& cfg,
                            std::span<const double> taus) {
    TimeSeries out;
    out.label = "W";
    out.taus.assign(taus.begin(), taus.end());
    out.values.reserve(taus.size());
    for (double tau : taus) out.values.push_back(inversion(dist, cfg, tau));
    return out;
}

TimeSeries entropy_series(const PhotonDistribution& dist,
                          const CouplingConfig& cfg,
                          std::span<const double> taus) {
    TimeSeries out;
    out.label = "S_a";
    out.taus.assign(taus.begin(), taus.end());
    out.values.reserve(taus.size());
    for (double tau : taus) {
        out.values.push_back(entropy(bloch_vector(dist, cfg, tau)));
    }
    return out;
}

}  // namespace qrabi
