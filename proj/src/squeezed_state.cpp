#include "qrabi/squeezed_state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qrabi/errors.hpp"
#include "qrabi/summation.hpp"

namespace qrabi {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Renormalisation band for the Hermite recurrence carriers.
constexpr double kRescaleHigh = 1e250;
constexpr double kRescaleLow = 1e-250;

}  // namespace

double SqueezeSpec::intensity() const {
    const double sh = std::sinh(r);
    return alpha * alpha + sh * sh;
}

void SqueezeSpec::validate() const {
    if (!(r >= 0.0) || !std::isfinite(r)) {
        throw std::invalid_argument("squeeze parameter r must be finite and >= 0");
    }
    if (!std::isfinite(alpha)) {
        throw std::invalid_argument("coherent amplitude alpha must be finite");
    }
    if (theta != 0.0) {
        throw std::invalid_argument("squeeze phase unsupported (theta must be 0)");
    }
}

double LogScaledValue::value() const {
    if (sign == 0) return 0.0;
    return static_cast<double>(sign) * std::exp(log_magnitude);
}

double coherent_amplitude_for_intensity(double intensity, double r) {
    if (!(intensity >= 0.0) || r < 0.0) {
        throw std::domain_error("intensity and squeeze parameter must be >= 0");
    }
    const double sh = std::sinh(r);
    const double coherent_part = intensity - sh * sh;
    if (coherent_part < 0.0) {
        throw std::domain_error("squeeze photons exceed target intensity");
    }
    return std::sqrt(coherent_part);
}

LogScaledValue hermite_log_scaled(int n, double x) {
    if (n < 0) throw std::invalid_argument("Hermite degree must be >= 0");
    if (n == 0) return {+1, 0.0};

    // H_{k+1} = 2x H_k - 2k H_{k-1}, both carriers rescaled into
    // [1e-250, 1e250] with the factor folded into log_scale.
    double h_prev = 1.0;
    double h = 2.0 * x;
    double log_scale = 0.0;
    for (int k = 1; k < n; ++k) {
        const double h_next = 2.0 * x * h - 2.0 * k * h_prev;
        h_prev = h;
        h = h_next;
        const double mag = std::max(std::abs(h), std::abs(h_prev));
        if (mag > kRescaleHigh || (mag > 0.0 && mag < kRescaleLow)) {
            h /= mag;
            h_prev /= mag;
            log_scale += std::log(mag);
        }
    }
    if (h == 0.0) return {0, -kInf};
    return {h > 0.0 ? +1 : -1, std::log(std::abs(h)) + log_scale};
}

namespace {

// Coherent-state limit C_n = e^{-a^2/2} a^n / sqrt(n!), log-domain.
double coherent_amplitude(int n, double a) {
    if (a == 0.0) return n == 0 ? 1.0 : 0.0;
    const double log_mag = -0.5 * a * a + n * std::log(std::abs(a)) -
                           0.5 * std::lgamma(n + 1.0);
    const int sign = (a < 0.0 && (n % 2 != 0)) ? -1 : +1;
    return sign * std::exp(log_mag);
}

}  // namespace

double amplitude(int n, const SqueezeSpec& spec) {
    if (n < 0) throw std::invalid_argument("Fock index must be >= 0");
    spec.validate();
    if (spec.r < kSqueezeMin) return coherent_amplitude(n, spec.alpha);

    const double a = spec.alpha;
    const double r = spec.r;
    // Hermite argument (a cosh r + a sinh r)/sqrt(sinh 2r) = a e^r/sqrt(sinh 2r).
    const double arg = a * std::exp(r) / std::sqrt(std::sinh(2.0 * r));
    const LogScaledValue h = hermite_log_scaled(n, arg);
    if (h.sign == 0) return 0.0;
    const double th = std::tanh(r);
    const double log_mag = -0.5 * std::log(std::cosh(r)) -
                           0.5 * a * a * (1.0 + th) +
                           0.5 * n * std::log(0.5 * th) -
                           0.5 * std::lgamma(n + 1.0) + h.log_magnitude;
    return h.sign * std::exp(log_mag);
}

PhotonDistribution photon_number_distribution(const SqueezeSpec& spec,
                                              double eps_trunc) {
    if (!(eps_trunc > 0.0) || eps_trunc > 1e-6) {
        throw std::invalid_argument("eps_trunc must lie in (0, 1e-6]");
    }
    spec.validate();

    const double intensity = spec.intensity();
    // For theta = 0 and real alpha the photon-number variance is
    // a^2 e^{-2r} + sinh^2(2r)/2; used only to floor the stopping index so
    // the oscillatory squeezed tail cannot trigger an early stop.
    const double sh2 = std::sinh(2.0 * spec.r);
    const double variance_estimate =
        spec.alpha * spec.alpha * std::exp(-2.0 * spec.r) + 0.5 * sh2 * sh2;
    const int floor_intensity = static_cast<int>(
        std::ceil(intensity + 10.0 * std::sqrt(intensity) + 20.0));
    const int floor_variance = static_cast<int>(
        std::ceil(intensity + 10.0 * std::sqrt(variance_estimate)));
    const int n_floor = std::max(floor_intensity, floor_variance);

    PhotonDistribution dist;
    CompensatedSum mass;
    for (int n = 0; n <= kFockCap; ++n) {
        const double s = amplitude(n, spec);
        const double p = s * s;
        dist.amplitudes.push_back(s);
        dist.probs.push_back(p);
        mass.add(p);
        if (n >= n_floor && mass.value() >= 1.0 - eps_trunc) {
            dist.n_max = n;
            dist.tail_mass = std::max(0.0, 1.0 - mass.value());
            return dist;
        }
    }
    throw TruncationError(
        "photon distribution truncation failed: mass " +
            std::to_string(mass.value()) + " after " +
            std::to_string(kFockCap + 1) + " Fock levels (eps_trunc " +
            std::to_string(eps_trunc) + ")",
        mass.value());
}

Moments moments(const PhotonDistribution& dist) {
    CompensatedSum mean;
    CompensatedSum second;
    for (int n = 0; n <= dist.n_max; ++n) {
        const double p = dist.probs[n];
        mean.add(n * p);
        second.add(static_cast<double>(n) * n * p);
    }
    const double m = mean.value();
    return {m, second.value() - m * m};
}

}  // namespace qrabi
