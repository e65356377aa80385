#pragma once

#include <complex>
#include <vector>

#include "qrabi/squeezed_state.hpp"

namespace qrabi {

enum class ModelKind { JC, AJC };

// Dimensionless coupling configuration: beta = delta/lambda is the detuning,
// xi = omega/lambda the field frequency. All time arguments below are the
// scaled time tau = lambda*t. Resonance means beta = 0 for both models (the
// AJC resonance delta_bar = 2*omega reduces to delta = 0).
struct CouplingConfig {
    ModelKind kind = ModelKind::JC;
    double beta = 0.0;
    double xi = 0.0;
    double lambda = 1.0;

    double delta() const { return beta * lambda; }
    double omega() const { return xi * lambda; }
    double delta_bar() const { return delta() + 2.0 * omega(); }

    void validate() const;  // throws std::invalid_argument
};

// Joint atom-field state at scaled time tau: complex amplitudes on |g,n> and
// |e,n> for n = 0..n_max. The AJC interaction populates one Fock level above
// the initial support, so n_max is one past the distribution's cutoff.
struct EvolvedJointState {
    double tau = 0.0;
    std::vector<std::complex<double>> g_amp;
    std::vector<std::complex<double>> e_amp;
    int n_max = 0;

    double norm_sq() const;
};

// Reduced 2x2 atomic density operator; rho_eg is conj(rho_ge).
struct AtomDensity {
    double rho_gg = 1.0;
    double rho_ee = 0.0;
    std::complex<double> rho_ge{0.0, 0.0};

    double trace() const { return rho_gg + rho_ee; }
    double determinant() const { return rho_gg * rho_ee - std::norm(rho_ge); }
};

// (<sigma_x>, <sigma_y>, <sigma_z>) of the reduced atomic state.
struct BlochVector {
    double rx = 0.0;
    double ry = 0.0;
    double rz = -1.0;

    double norm() const;
};

// Dressing coefficients (c, s) with c^2 + s^2 = 1 away from the JC n = 0
// resonant case, where (0, 0) is returned: that term is stationary (its Rabi
// frequency vanishes) so the values never enter an observable.
struct Dressing {
    double c = 0.0;
    double s = 0.0;
};

// JC: (lambda/2) sqrt(4n + beta^2).  AJC: (lambda/2) sqrt(4n + 4 + (beta+2xi)^2).
double rabi_frequency(int n, const CouplingConfig& cfg);

Dressing dressing_coefficients(int n, const CouplingConfig& cfg);

// Exact time evolution of the initial |g> x (squeezed coherent) product
// state under the configured interaction.
EvolvedJointState evolve(const PhotonDistribution& dist,
                         const CouplingConfig& cfg, double tau);

// Diagonal p_n(tau) of the reduced field density operator, computed from the
// closed-form trigonometric sums (not from evolve()); both routes agree and
// the tests cross-check them.
std::vector<double> reduced_field_diagonal(const PhotonDistribution& dist,
                                           const CouplingConfig& cfg,
                                           double tau);

// Reduced atomic density operator from the closed-form sums.
AtomDensity atom_density(const PhotonDistribution& dist,
                         const CouplingConfig& cfg, double tau);

// Bloch vector from the closed-form sums; rz equals rho_ee - rho_gg and
// rx + i*ry equals 2*rho_ge of atom_density().
BlochVector bloch_vector(const PhotonDistribution& dist,
                         const CouplingConfig& cfg, double tau);

}  // namespace qrabi
