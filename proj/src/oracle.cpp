#include "qrabi/oracle.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "qrabi/errors.hpp"
#include "qrabi/summation.hpp"

namespace qrabi {

namespace {

inline int idx_g(int n) { return 2 * n; }
inline int idx_e(int n) { return 2 * n + 1; }

// JC part: diag omega*N + delta*s_z - omega/2 with N = a^dag a + s_+ s_-,
// interaction sqrt(n+1) between |e,n> and |g,n+1>. Entries are in units of
// hbar*lambda, so the interaction coefficient is 1: these are the matrix
// elements the closed forms of the dynamics module diagonalise (2x2 blocks
// with half-splitting R_gn = (1/2) sqrt(4n + beta^2)).
void fill_jc(Eigen::MatrixXd& h, const CouplingConfig& cfg, int n_cut) {
    const double xi = cfg.xi;
    const double beta = cfg.beta;
    for (int n = 0; n <= n_cut; ++n) {
        h(idx_g(n), idx_g(n)) += xi * n - 0.5 * beta - 0.5 * xi;
        h(idx_e(n), idx_e(n)) += xi * (n + 1) + 0.5 * beta - 0.5 * xi;
    }
    for (int n = 0; n < n_cut; ++n) {
        const double v = std::sqrt(n + 1.0);
        h(idx_e(n), idx_g(n + 1)) += v;
        h(idx_g(n + 1), idx_e(n)) += v;
    }
}

// AJC part: diag omega*Nbar + delta_bar*s_z - omega/2 with
// Nbar = a a^dag + s_- s_+, interaction sqrt(n+1) between |g,n> and |e,n+1>.
void fill_ajc(Eigen::MatrixXd& h, const CouplingConfig& cfg, int n_cut) {
    const double xi = cfg.xi;
    const double bb = cfg.beta + 2.0 * cfg.xi;  // delta_bar / lambda
    for (int n = 0; n <= n_cut; ++n) {
        h(idx_g(n), idx_g(n)) += xi * (n + 2) - 0.5 * bb - 0.5 * xi;
        h(idx_e(n), idx_e(n)) += xi * (n + 1) + 0.5 * bb - 0.5 * xi;
    }
    for (int n = 0; n < n_cut; ++n) {
        const double v = std::sqrt(n + 1.0);
        h(idx_g(n), idx_e(n + 1)) += v;
        h(idx_e(n + 1), idx_g(n)) += v;
    }
}

}  // namespace

TruncatedHamiltonian build_hamiltonian(HamiltonianKind kind,
                                       const CouplingConfig& cfg, int n_cut) {
    if (n_cut < 1) throw ConfigError("oracle needs a Fock cutoff n_cut >= 1");
    cfg.validate();

    TruncatedHamiltonian h;
    h.n_cut = n_cut;
    h.entries = Eigen::MatrixXd::Zero(h.dim(), h.dim());
    switch (kind) {
        case HamiltonianKind::JC:
            fill_jc(h.entries, cfg, n_cut);
            break;
        case HamiltonianKind::AJC:
            fill_ajc(h.entries, cfg, n_cut);
            break;
        case HamiltonianKind::Rabi: {
            fill_jc(h.entries, cfg, n_cut);
            fill_ajc(h.entries, cfg, n_cut);
            h.entries *= 0.5;
            break;
        }
    }
    return h;
}

Propagator::Propagator(const TruncatedHamiltonian& h) : n_cut_(h.n_cut) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.entries);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error(
            "oracle eigendecomposition failed (dim " +
            std::to_string(h.dim()) + ", |H|_max " +
            std::to_string(h.entries.cwiseAbs().maxCoeff()) + ")");
    }
    eigenvalues_ = solver.eigenvalues();
    eigenvectors_ = solver.eigenvectors();
}

PropagatedState Propagator::propagate(const Eigen::VectorXcd& initial,
                                      double tau) const {
    if (initial.size() != eigenvectors_.rows()) {
        throw std::invalid_argument("initial vector dimension mismatch");
    }
    if (std::abs(initial.norm() - 1.0) > 1e-12) {
        throw std::invalid_argument("initial vector must be normalised to 1e-12");
    }
    const Eigen::VectorXcd modal = eigenvectors_.transpose() * initial;
    Eigen::VectorXcd phased(modal.size());
    for (Eigen::Index k = 0; k < modal.size(); ++k) {
        phased[k] = std::polar(1.0, -eigenvalues_[k] * tau) * modal[k];
    }
    PropagatedState state;
    state.tau = tau;
    state.coeffs = eigenvectors_ * phased;
    state.leakage = std::norm(state.coeffs[idx_g(n_cut_ - 1)]) +
                    std::norm(state.coeffs[idx_e(n_cut_ - 1)]) +
                    std::norm(state.coeffs[idx_g(n_cut_)]) +
                    std::norm(state.coeffs[idx_e(n_cut_)]);
    return state;
}

PropagatedState propagate(const TruncatedHamiltonian& h,
                          const Eigen::VectorXcd& initial, double tau) {
    return Propagator(h).propagate(initial, tau);
}

Eigen::VectorXcd initial_ground_state_vector(const PhotonDistribution& dist,
                                             int n_cut) {
    if (n_cut < dist.n_max) {
        throw std::invalid_argument("oracle cutoff below distribution support");
    }
    Eigen::VectorXcd c0 = Eigen::VectorXcd::Zero(2 * (n_cut + 1));
    for (int n = 0; n <= dist.n_max; ++n) {
        c0[idx_g(n)] = dist.amplitudes[n];
    }
    return c0;
}

std::vector<double> field_diagonal(const PropagatedState& state) {
    const auto levels = state.coeffs.size() / 2;
    std::vector<double> p(levels);
    for (Eigen::Index n = 0; n < levels; ++n) {
        p[n] = std::norm(state.coeffs[2 * n]) + std::norm(state.coeffs[2 * n + 1]);
    }
    return p;
}

BlochVector bloch_from(const PropagatedState& state) {
    const auto levels = state.coeffs.size() / 2;
    CompensatedSum gg, ee, ge_re, ge_im;
    for (Eigen::Index n = 0; n < levels; ++n) {
        const auto g = state.coeffs[2 * n];
        const auto e = state.coeffs[2 * n + 1];
        gg.add(std::norm(g));
        ee.add(std::norm(e));
        const auto ge = g * std::conj(e);
        ge_re.add(ge.real());
        ge_im.add(ge.imag());
    }
    return {2.0 * ge_re.value(), 2.0 * ge_im.value(), ee.value() - gg.value()};
}

CompareReport compare(const TimeSeries& closed, const TimeSeries& oracle) {
    if (closed.taus.size() != oracle.taus.size()) {
        throw std::invalid_argument("comparison requires identical tau grids");
    }
    CompareReport report;
    for (std::size_t i = 0; i < closed.taus.size(); ++i) {
        if (closed.taus[i] != oracle.taus[i]) {
            throw std::invalid_argument("comparison requires identical tau grids");
        }
        const double diff = std::abs(closed.values[i] - oracle.values[i]);
        if (diff > report.max_abs_diff) {
            report.max_abs_diff = diff;
            report.argmax_tau = closed.taus[i];
        }
    }
    return report;
}

void dump_hamiltonian_csv(const TruncatedHamiltonian& h, std::ostream& os) {
    os << "row,col,value\n";
    char buf[64];
    for (int i = 0; i < h.dim(); ++i) {
        for (int j = 0; j < h.dim(); ++j) {
            const double v = h.entries(i, j);
            if (v == 0.0) continue;
            std::snprintf(buf, sizeof buf, "%d,%d,%.12g\n", i, j, v);
            os << buf;
        }
    }
}

}  // namespace qrabi
