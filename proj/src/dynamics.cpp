#include "qrabi/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "qrabi/summation.hpp"

namespace qrabi {

using namespace std::complex_literals;

void CouplingConfig::validate() const {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw std::invalid_argument("coupling lambda must be finite and > 0");
    }
    if (!(xi >= 0.0) || !std::isfinite(xi) || !std::isfinite(beta)) {
        throw std::invalid_argument("xi must be >= 0 and beta finite");
    }
}

double EvolvedJointState::norm_sq() const {
    CompensatedSum s;
    for (const auto& a : g_amp) s.add(std::norm(a));
    for (const auto& a : e_amp) s.add(std::norm(a));
    return s.value();
}

double BlochVector::norm() const {
    return std::sqrt(rx * rx + ry * ry + rz * rz);
}

double rabi_frequency(int n, const CouplingConfig& cfg) {
    if (n < 0) throw std::invalid_argument("Fock index must be >= 0");
    if (cfg.kind == ModelKind::JC) {
        return 0.5 * cfg.lambda * std::sqrt(4.0 * n + cfg.beta * cfg.beta);
    }
    const double bb = cfg.beta + 2.0 * cfg.xi;
    return 0.5 * cfg.lambda * std::sqrt(4.0 * n + 4.0 + bb * bb);
}

Dressing dressing_coefficients(int n, const CouplingConfig& cfg) {
    if (n < 0) throw std::invalid_argument("Fock index must be >= 0");
    if (cfg.kind == ModelKind::JC) {
        const double den = std::sqrt(4.0 * n + cfg.beta * cfg.beta);
        // Stationary resonant vacuum term: R_g0 = 0 multiplies these away.
        if (den == 0.0) return {0.0, 0.0};
        return {cfg.beta / den, 2.0 * std::sqrt(static_cast<double>(n)) / den};
    }
    const double bb = cfg.beta + 2.0 * cfg.xi;
    const double den = std::sqrt(4.0 * n + 4.0 + bb * bb);
    return {bb / den, 2.0 * std::sqrt(n + 1.0) / den};
}

namespace {

// Rabi frequency in scaled-time units, so phases are rabi_tau * tau.
double rabi_tau(int n, const CouplingConfig& cfg) {
    return rabi_frequency(n, cfg) / cfg.lambda;
}

double prob_at(const PhotonDistribution& dist, int n) {
    return (n >= 0 && n <= dist.n_max) ? dist.probs[n] : 0.0;
}

}  // namespace

EvolvedJointState evolve(const PhotonDistribution& dist,
                         const CouplingConfig& cfg, double tau) {
    if (!(tau >= 0.0)) throw std::invalid_argument("tau must be >= 0");
    cfg.validate();

    EvolvedJointState state;
    state.tau = tau;
    state.n_max = dist.n_max + 1;
    const int len = state.n_max + 1;
    state.g_amp.assign(len, 0.0);
    state.e_amp.assign(len, 0.0);

    if (cfg.kind == ModelKind::JC) {
        for (int n = 0; n <= dist.n_max; ++n) {
            const double rt = rabi_tau(n, cfg) * tau;
            const auto [c, s] = dressing_coefficients(n, cfg);
            const auto phase = std::exp(-1i * (n * cfg.xi * tau));
            state.g_amp[n] = dist.amplitudes[n] * phase *
                             (std::cos(rt) + 1i * c * std::sin(rt));
            if (n >= 1) {
                // |g,n> feeds |e,n-1> within the same excitation block.
                state.e_amp[n - 1] = -1i * dist.amplitudes[n] * s *
                                     std::exp(-1i * (n * cfg.xi * tau)) *
                                     std::sin(rt);
            }
        }
    } else {
        for (int n = 0; n <= dist.n_max; ++n) {
            const double rt = rabi_tau(n, cfg) * tau;
            const auto [c, s] = dressing_coefficients(n, cfg);
            state.g_amp[n] = dist.amplitudes[n] *
                             std::exp(-1i * ((n + 1) * cfg.xi * tau)) *
                             (std::cos(rt) + 1i * c * std::sin(rt));
            // |g,n> feeds |e,n+1>.
            state.e_amp[n + 1] = -1i * dist.amplitudes[n] * s *
                                 std::exp(-1i * ((n + 1) * cfg.xi * tau)) *
                                 std::sin(rt);
        }
    }
    return state;
}

std::vector<double> reduced_field_diagonal(const PhotonDistribution& dist,
                                           const CouplingConfig& cfg,
                                           double tau) {
    if (!(tau >= 0.0)) throw std::invalid_argument("tau must be >= 0");
    cfg.validate();

    const int len = dist.n_max + 2;
    std::vector<double> p(len, 0.0);
    if (cfg.kind == ModelKind::JC) {
        for (int n = 0; n < len; ++n) {
            const double rt = rabi_tau(n, cfg) * tau;
            const auto [c, s] = dressing_coefficients(n, cfg);
            const double cs = std::cos(rt);
            const double sn = std::sin(rt);
            double v = prob_at(dist, n) * (cs * cs + c * c * sn * sn);
            const double rt1 = rabi_tau(n + 1, cfg) * tau;
            const auto d1 = dressing_coefficients(n + 1, cfg);
            const double sn1 = std::sin(rt1);
            v += prob_at(dist, n + 1) * d1.s * d1.s * sn1 * sn1;
            p[n] = v;
        }
    } else {
        for (int n = 0; n < len; ++n) {
            const double rt = rabi_tau(n, cfg) * tau;
            const auto [c, s] = dressing_coefficients(n, cfg);
            const double cs = std::cos(rt);
            const double sn = std::sin(rt);
            double v = prob_at(dist, n) * (cs * cs + c * c * sn * sn);
            if (n >= 1) {
                const double rtm = rabi_tau(n - 1, cfg) * tau;
                const auto dm = dressing_coefficients(n - 1, cfg);
                const double snm = std::sin(rtm);
                v += prob_at(dist, n - 1) * dm.s * dm.s * snm * snm;
            }
            p[n] = v;
        }
    }
    return p;
}

AtomDensity atom_density(const PhotonDistribution& dist,
                         const CouplingConfig& cfg, double tau) {
    if (!(tau >= 0.0)) throw std::invalid_argument("tau must be >= 0");
    cfg.validate();

    CompensatedSum gg, ee, ge_re, ge_im;
    const std::complex<double> field_phase =
        std::exp(1i * (cfg.kind == ModelKind::JC ? cfg.xi * tau
                                                 : -cfg.xi * tau));
    if (cfg.kind == ModelKind::JC) {
        for (int n = 0; n <= dist.n_max; ++n) {
            const double rt = rabi_tau(n, cfg) * tau;
            const auto [c, s] = dressing_coefficients(n, cfg);
            const double cs = std::cos(rt);
            const double sn = std::sin(rt);
            gg.add(dist.probs[n] * (cs * cs + c * c * sn * sn));
            if (n >= 1) {
                ee.add(dist.probs[n] * s * s * sn * sn);
            }
            if (n + 1 <= dist.n_max) {
                const double rt1 = rabi_tau(n + 1, cfg) * tau;
                const auto d1 = dressing_coefficients(n + 1, cfg);
                const std::complex<double> term =
                    1i * dist.amplitudes[n] * dist.amplitudes[n + 1] * d1.s *
                    field_phase * std::sin(rt1) * (cs + 1i * c * sn);
                ge_re.add(term.real());
                ge_im.add(term.imag());
            }
        }
    } else {
        for (int n = 0; n <= dist.n_max; ++n) {
            const double rt = rabi_tau(n, cfg) * tau;
            const auto [c, s] = dressing_coefficients(n, cfg);
            const double cs = std::cos(rt);
            const double sn = std::sin(rt);
            gg.add(dist.probs[n] * (cs * cs + c * c * sn * sn));
            ee.add(dist.probs[n] * s * s * sn * sn);
            if (n >= 1) {
                const double rtm = rabi_tau(n - 1, cfg) * tau;
                const auto dm = dressing_coefficients(n - 1, cfg);
                const std::complex<double> term =
                    1i * dist.amplitudes[n] * dist.amplitudes[n - 1] * dm.s *
                    field_phase * std::sin(rtm) * (cs + 1i * c * sn);
                ge_re.add(term.real());
                ge_im.add(term.imag());
            }
        }
    }
    AtomDensity rho;
    rho.rho_gg = gg.value();
    rho.rho_ee = ee.value();
    rho.rho_ge = {ge_re.value(), ge_im.value()};
    return rho;
}

BlochVector bloch_vector(const PhotonDistribution& dist,
                         const CouplingConfig& cfg, double tau) {
    if (!(tau >= 0.0)) throw std::invalid_argument("tau must be >= 0");
    cfg.validate();

    CompensatedSum rx, ry, rz;
    const double wt = cfg.xi * tau;
    const double cw = std::cos(wt);
    const double sw = std::sin(wt);
    if (cfg.kind == ModelKind::JC) {
        for (int n = 0; n <= dist.n_max; ++n) {
            const double rt = rabi_tau(n, cfg) * tau;
            const auto [c, s] = dressing_coefficients(n, cfg);
            const double cs = std::cos(rt);
            const double sn = std::sin(rt);
            rz.add(-dist.probs[n] * (cs * cs + c * c * sn * sn));
            if (n >= 1) rz.add(dist.probs[n] * s * s * sn * sn);
            if (n + 1 <= dist.n_max) {
                const double rt1 = rabi_tau(n + 1, cfg) * tau;
                const auto d1 = dressing_coefficients(n + 1, cfg);
                const double sn1 = std::sin(rt1);
                const double pair = dist.amplitudes[n] * dist.amplitudes[n + 1];
                rx.add(pair * (-2.0 * d1.s * sn1 * cs * sw -
                               2.0 * d1.s * c * sn1 * sn * cw));
                ry.add(pair * (2.0 * d1.s * sn1 * cs * cw -
                               2.0 * d1.s * c * sn1 * sn * sw));
            }
        }
    } else {
        for (int n = 0; n <= dist.n_max; ++n) {
            const double rt = rabi_tau(n, cfg) * tau;
            const auto [c, s] = dressing_coefficients(n, cfg);
            const double cs = std::cos(rt);
            const double sn = std::sin(rt);
            rz.add(-dist.probs[n] * (cs * cs + c * c * sn * sn));
            rz.add(dist.probs[n] * s * s * sn * sn);
            if (n >= 1) {
                const double rtm = rabi_tau(n - 1, cfg) * tau;
                const auto dm = dressing_coefficients(n - 1, cfg);
                const double snm = std::sin(rtm);
                const double pair = dist.amplitudes[n] * dist.amplitudes[n - 1];
                rx.add(pair * (2.0 * dm.s * snm * cs * sw -
                               2.0 * dm.s * c * snm * sn * cw));
                ry.add(pair * (2.0 * dm.s * snm * cs * cw +
                               2.0 * dm.s * c * snm * sn * sw));
            }
        }
    }
    return {rx.value(), ry.value(), rz.value()};
}

}  // namespace qrabi
