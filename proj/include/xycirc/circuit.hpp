#pragma once

#include <array>
#include <string>
#include <vector>

#include "xycirc/density_matrix.hpp"
#include "xycirc/gate_matrix.hpp"
#include "xycirc/state_vector.hpp"

namespace xyc {

enum class GateKind {
    Fourier,   // fourier(p), two-qubit butterfly
    Bog,       // bog(theta), pair (dis)entangler
    Fswap,     // fermionic exchange
    PhaseR,    // phase_r(theta): e^{i theta} on the first wire's occupied states
    Laplace,   // laplace(beta, w), one qubit
    Cnot,      // first target controls
    Hadamard,
    SGate,
    SdagGate,
    Zrot,      // zrot(alpha) = exp(-i alpha Z / 2)
    Dense1,    // explicit one-qubit matrix
    Dense2,    // explicit two-qubit matrix
};

struct GateOp {
    GateKind kind;
    std::vector<double> params;
    std::array<int, 2> targets{-1, -1};
    int arity = 2;
    bool adjoint = false;            // only Fourier ops ever carry this
    Eigen::MatrixXcd dense;          // Dense1 / Dense2 payload

    GateMatrix matrix() const;
    GateOp inverted() const;
};

struct Circuit {
    int num_qubits = 0;
    std::vector<GateOp> ops;

    explicit Circuit(int n = 0) : num_qubits(n) {}

    void push(GateOp op);
    void fourier(double p, int q1, int q2);
    void bog(double theta, int q1, int q2);
    void fswap(int q1, int q2);
    void phase_r(double theta, int q1, int q2);
    void laplace(double beta, double w, int q);
    void cnot(int control, int target);
    void hadamard(int q);
    void s_gate(int q);
    void sdag_gate(int q);
    void zrot(double alpha, int q);
    void dense_one(const Eigen::MatrixXcd& u, int q);
    void dense_two(const Eigen::MatrixXcd& u, int q1, int q2);

    /// Ops reversed with each gate replaced by its inverse.
    Circuit inverted() const;
    /// Append another circuit with its wires shifted by `offset`.
    void append(const Circuit& other, int offset = 0);

    std::size_t count_kind(GateKind k) const;
};

void apply_circuit(const Circuit& circuit, StateVector& psi);
void apply_circuit(const Circuit& circuit, DensityMatrix& rho);

/// Product of the embedded gate matrices in application order.
Eigen::MatrixXcd circuit_to_unitary(const Circuit& circuit, int n);

/// Line-oriented text form, one gate per line: `<kind> <param...> <targets...>`.
std::string serialize_circuit(const Circuit& circuit);
Circuit parse_circuit(const std::string& text);

}  // namespace xyc
