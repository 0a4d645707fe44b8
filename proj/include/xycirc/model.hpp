#pragma once

#include <span>
#include <vector>

#include "xycirc/state_vector.hpp"

namespace xyc {

/// Chain parameters. The transverse field is normalized to 1, so `lambda`
/// is the coupling ratio and `gamma` the anisotropy (gamma = 1 is Ising).
struct ModelParams {
    int n = 8;
    double lambda = 1.0;
    double gamma = 1.0;
    double beta = 1.0;

    /// n even and >= 2, beta >= 0. Power-of-two n is required only by the
    /// Fourier-circuit paths, which check it themselves.
    void validate() const;
    bool n_power_of_two() const;
};

/// Assignment of momentum labels k = 0..n-1 to wires. Opposite momenta sit
/// on adjacent wires (2j, 2j+1); the two self-paired labels 0 and n/2 share
/// the final two wires.
struct MomentumLayout {
    int n = 0;
    std::vector<int> qubit_of_k;

    static MomentumLayout canonical(int n);

    int qubit_of(int k) const { return qubit_of_k[k]; }
    int label_of(int qubit) const;
    int pairing(int k) const { return (n - k) % n; }
};

double dispersion(const ModelParams& params, double p);
double bogoliubov_angle(const ModelParams& params, double p);

enum class HamiltonianForm { Pauli, Fermionic };

/// Dense 2^n x 2^n Hamiltonian. The fermionic form is shifted so its ground
/// energy is zero; the Pauli form carries the -1/2 per-site constant.
Eigen::MatrixXcd build_hamiltonian(const ModelParams& params, HamiltonianForm form);

/// y += H_fermionic(unshifted) x, evaluated term by term without forming H.
void apply_fermionic_terms(const ModelParams& params, std::span<const cplx> x,
                           std::span<cplx> y);

/// Analytic ground energy of the unshifted fermionic form.
double fermionic_ground_energy(const ModelParams& params);

struct Spectrum {
    std::vector<double> levels;  // sorted ascending, 2^n subset sums
};

Spectrum exact_spectrum(const ModelParams& params);

/// Even-parity ground state via Lanczos on the term-wise Hamiltonian. At the
/// critical point this picks the member of the degenerate pair reached as
/// lambda -> 1 from below.
StateVector fermionic_ground_state(const ModelParams& params);

/// Gibbs weights over occupation bitstrings for the canonical layout.
std::vector<double> mode_energies(const ModelParams& params);

}  // namespace xyc
