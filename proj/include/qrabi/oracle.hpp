#pragma once

#include <Eigen/Dense>
#include <iosfwd>

#include "qrabi/dynamics.hpp"
#include "qrabi/observables.hpp"

namespace qrabi {

enum class HamiltonianKind { JC, AJC, Rabi };

// Dense real-symmetric Hamiltonian in units of hbar*lambda on the interleaved
// basis |g,0>, |e,0>, |g,1>, |e,1>, ... (bandwidth 3). The -omega/2 identity
// shift is included; observables are invariant to it.
struct TruncatedHamiltonian {
    int n_cut = 0;
    Eigen::MatrixXd entries;

    int dim() const { return 2 * (n_cut + 1); }
};

struct PropagatedState {
    double tau = 0.0;
    Eigen::VectorXcd coeffs;
    double leakage = 0.0;  // probability in the top two Fock levels
};

// Throws ConfigError for n_cut < 1. Rabi is the average (H_JC + H_AJC)/2.
TruncatedHamiltonian build_hamiltonian(HamiltonianKind kind,
                                       const CouplingConfig& cfg, int n_cut);

// Hermitian eigendecomposition cached once; each propagate() costs two dense
// mat-vecs. exp(-i H tau) is exactly unitary up to roundoff.
class Propagator {
public:
    explicit Propagator(const TruncatedHamiltonian& h);

    // Requires |initial| = 1 within 1e-12.
    PropagatedState propagate(const Eigen::VectorXcd& initial,
                              double tau) const;

private:
    int n_cut_;
    Eigen::VectorXd eigenvalues_;
    Eigen::MatrixXd eigenvectors_;
};

// One-shot convenience wrapper around Propagator.
PropagatedState propagate(const TruncatedHamiltonian& h,
                          const Eigen::VectorXcd& initial, double tau);

// |g> x (squeezed coherent) as a coefficient vector on the interleaved basis.
Eigen::VectorXcd initial_ground_state_vector(const PhotonDistribution& dist,
                                             int n_cut);

// Observable extraction on the oracle route.
std::vector<double> field_diagonal(const PropagatedState& state);
BlochVector bloch_from(const PropagatedState& state);

struct CompareReport {
    double max_abs_diff = 0.0;
    double argmax_tau = 0.0;

    bool pass(double tolerance) const { return max_abs_diff < tolerance; }
};

// Requires identical tau grids; throws std::invalid_argument otherwise.
CompareReport compare(const TimeSeries& closed, const TimeSeries& oracle);

// Audit dump, one "row,col,value" line per nonzero entry.
void dump_hamiltonian_csv(const TruncatedHamiltonian& h, std::ostream& os);

}  // namespace qrabi
