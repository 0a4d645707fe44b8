#pragma once

#include <vector>

#include "xycirc/state_vector.hpp"

namespace xyc {

/// Hermitian trace-one matrix over an m-qubit register.
class DensityMatrix {
  public:
    DensityMatrix(int num_qubits, Eigen::MatrixXcd entries);

    static DensityMatrix pure(const StateVector& psi);

    int num_qubits() const { return num_qubits_; }
    const Eigen::MatrixXcd& entries() const { return entries_; }

    double trace_real() const { return entries_.trace().real(); }
    double purity() const;  // Tr rho^2

    void apply_one_qubit(const GateMatrix& gate, int q);
    void apply_two_qubit(const GateMatrix& gate, int q1, int q2);

    double expectation_pauli_z(int site) const;

    /// Throws if the Hermiticity/trace/positivity invariants fail.
    void validate() const;

  private:
    int num_qubits_;
    Eigen::MatrixXcd entries_;
};

/// Reduced state on the listed qubits, in the order given.
DensityMatrix partial_trace(const StateVector& psi, const std::vector<int>& keep);
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

/// Entropy in bits; eigenvalues below tol.entropy_eig_floor are dropped.
double von_neumann_entropy(const DensityMatrix& rho);

double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace xyc
