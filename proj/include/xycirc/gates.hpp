#pragma once

#include <vector>

#include "xycirc/circuit.hpp"
#include "xycirc/gate_matrix.hpp"

namespace xyc {

enum class Su2Sign { Plus, Minus };

struct Su2Axis {
    PauliAxis axis;
    Su2Sign sign;
};

/// 2n anticommuting Hermitian unitaries on n qubits, {g_i, g_j} = 2 delta_ij.
struct GammaSet {
    int num_qubits;
    std::vector<Eigen::MatrixXcd> matrices;
};

GammaSet gamma_matrices(int n);

/// su(2)+ x su(2)- generators as two-qubit Pauli combinations.
Eigen::Matrix4cd sigma_pm(Su2Axis which);

/// exp(-i theta Sigma / 2), evaluated in closed form.
GateMatrix u_pm_dense(Su2Axis which, double theta);

/// Standard-gate decomposition of u_pm_dense on wires (0, 1): double-CNOT
/// ladders conjugated by H/S for the X and Y axes, two phase rotations for Z.
Circuit u_pm_circuit(Su2Axis which, double theta);

GateMatrix phase_gate_r(double theta);
GateMatrix fourier_gate(double p);
GateMatrix fswap_gate();
GateMatrix bog_gate(double theta);
GateMatrix laplace_gate(double beta, double w);

GateMatrix hadamard_gate();
GateMatrix s_gate();
GateMatrix sdag_gate();
GateMatrix zrot_gate(double alpha);
GateMatrix cnot_gate();
GateMatrix pauli_gate(PauliAxis axis);

}  // namespace xyc
