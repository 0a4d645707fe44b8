#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "xycirc/gate_matrix.hpp"

namespace xyc {

enum class PauliAxis { X, Y, Z };

/// Dense statevector over 2^n computational basis states. Qubit 0 is the
/// leftmost label of the ket string and the most significant bit of the
/// amplitude index.
class StateVector {
  public:
    explicit StateVector(int num_qubits);  // |00...0>
    StateVector(int num_qubits, std::vector<cplx> amplitudes);

    static StateVector basis_state(int num_qubits, std::uint64_t index);
    /// Single fermion at the given chain site (sites indexed from 0).
    static StateVector single_excitation(int num_qubits, int site);

    int num_qubits() const { return num_qubits_; }
    std::uint64_t dim() const { return std::uint64_t{1} << num_qubits_; }
    const std::vector<cplx>& amplitudes() const { return amps_; }
    cplx amplitude(std::uint64_t index) const { return amps_[index]; }

    double norm_sq() const;

    /// Bit of qubit q inside a basis index.
    int bit(std::uint64_t index, int q) const {
        return static_cast<int>((index >> (num_qubits_ - 1 - q)) & 1u);
    }

    void apply_one_qubit(const GateMatrix& gate, int q);
    void apply_two_qubit(const GateMatrix& gate, int q1, int q2);

    double expectation_pauli(std::span<const std::pair<int, PauliAxis>> ops) const;
    double expectation_pauli(std::initializer_list<std::pair<int, PauliAxis>> ops) const;

    cplx overlap(const StateVector& other) const;  // <other|this>

  private:
    int num_qubits_;
    std::vector<cplx> amps_;

    friend class DensityMatrix;
};

namespace detail {
// Kernels shared with the density-matrix code paths; `u` need not be unitary.
void apply_matrix_one(std::span<cplx> amps, int n, const Eigen::MatrixXcd& u, int q);
void apply_matrix_two(std::span<cplx> amps, int n, const Eigen::MatrixXcd& u, int q1, int q2);
}  // namespace detail

}  // namespace xyc
