#pragma once

#include "xycirc/circuit.hpp"
#include "xycirc/density_matrix.hpp"
#include "xycirc/model.hpp"

namespace xyc {

/// Fermionic Fourier synthesis: maps the canonical momentum register to the
/// position register. Radix-2 butterfly recursion with fswap routing; the
/// single-particle action equals the DFT matrix exactly.
Circuit build_fourier(int n);

/// One Bog gate per (p, -p) wire pair plus the occupation fix on the two
/// self-paired wires.
Circuit build_bog_layer(const ModelParams& params, const MomentumLayout& layout);

/// Bog layer followed by the Fourier synthesis; diagonalizes the fermionic
/// Hamiltonian and maps |0...0> to the ground state.
Circuit build_udis(const ModelParams& params);

/// Diagonal phase layer: e^{-i w_p t / 2} on each occupied mode wire.
Circuit build_time_evolution(const ModelParams& params, double t);

/// U_dis . phases(t) . U_dis^dag applied to the single-excitation position
/// state at `site`.
StateVector evolve_position_state(const ModelParams& params, int site, double t);

/// Momenta kept below the cutoff. The two self-paired modes are always kept
/// (they map onto the coarse chain's own self-paired modes); a (p, -p) pair
/// is kept when |p| < cutoff.
std::vector<int> kept_momenta(const ModelParams& params, double cutoff);

/// Position -> momentum, reorder kept modes to the front block in the coarse
/// chain's canonical order, then Fourier synthesis on the kept block.
Circuit build_rg(const ModelParams& params, double cutoff);

/// build_rg followed by the partial trace over the discarded block.
DensityMatrix coarse_grain(const StateVector& state, const ModelParams& params,
                           double cutoff);

/// Product of one-qubit Laplace rotations over the energy register. Applied
/// to |0...0> the amplitudes are proportional to e^{-beta E / 2}.
Circuit build_laplacian(const ModelParams& params, double beta);

/// Laplace layer on the left half plus the CNOT ladder copying it onto the
/// right half; prepares the thermofield double in the energy basis.
Circuit build_tfd(int m, const ModelParams& params, double beta);

/// Adjacent-transposition fswap network realizing `to` from `from`.
Circuit momentum_reorder_network(const MomentumLayout& from, const MomentumLayout& to);

/// Restriction of a vacuum-preserving circuit to the single-particle sector:
/// S[j, w] = <particle at wire j| U |particle at wire w>.
Eigen::MatrixXcd single_particle_matrix(const Circuit& circuit);

/// The DFT matrix the Fourier circuit realizes in the single-particle
/// sector: S[j-1, w] = e^{2 pi i p(w) j} / sqrt(n) with sites j = 1..n.
Eigen::MatrixXcd fourier_target_matrix(const MomentumLayout& layout);

}  // namespace xyc
