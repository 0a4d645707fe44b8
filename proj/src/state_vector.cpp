#include "xycirc/state_vector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "xycirc/tolerances.hpp"

namespace xyc {

namespace detail {

void apply_matrix_one(std::span<cplx> amps, int n, const Eigen::MatrixXcd& u, int q) {
    const std::uint64_t dim = std::uint64_t{1} << n;
    const std::uint64_t mask = std::uint64_t{1} << (n - 1 - q);
    const cplx u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
    for (std::uint64_t i = 0; i < dim; ++i) {
        if (i & mask) continue;
        const std::uint64_t j = i | mask;
        const cplx a0 = amps[i], a1 = amps[j];
        amps[i] = u00 * a0 + u01 * a1;
        amps[j] = u10 * a0 + u11 * a1;
    }
}

void apply_matrix_two(std::span<cplx> amps, int n, const Eigen::MatrixXcd& u, int q1,
                      int q2) {
    const std::uint64_t dim = std::uint64_t{1} << n;
    const std::uint64_t m1 = std::uint64_t{1} << (n - 1 - q1);
    const std::uint64_t m2 = std::uint64_t{1} << (n - 1 - q2);
    for (std::uint64_t i = 0; i < dim; ++i) {
        if (i & (m1 | m2)) continue;
        const std::uint64_t i01 = i | m2;
        const std::uint64_t i10 = i | m1;
        const std::uint64_t i11 = i | m1 | m2;
        const cplx a0 = amps[i], a1 = amps[i01], a2 = amps[i10], a3 = amps[i11];
        amps[i]   = u(0, 0) * a0 + u(0, 1) * a1 + u(0, 2) * a2 + u(0, 3) * a3;
        amps[i01] = u(1, 0) * a0 + u(1, 1) * a1 + u(1, 2) * a2 + u(1, 3) * a3;
        amps[i10] = u(2, 0) * a0 + u(2, 1) * a1 + u(2, 2) * a2 + u(2, 3) * a3;
        amps[i11] = u(3, 0) * a0 + u(3, 1) * a1 + u(3, 2) * a2 + u(3, 3) * a3;
    }
}

}  // namespace detail

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > 24) {
        throw std::invalid_argument("qubit count out of range");
    }
    amps_.assign(std::uint64_t{1} << num_qubits, cplx{0.0});
    amps_[0] = 1.0;
}

StateVector::StateVector(int num_qubits, std::vector<cplx> amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
    if (num_qubits < 1 || amps_.size() != (std::uint64_t{1} << num_qubits)) {
        throw std::invalid_argument("amplitude array length must be 2^n");
    }
}

StateVector StateVector::basis_state(int num_qubits, std::uint64_t index) {
    StateVector psi(num_qubits);
    if (index >= psi.dim()) throw std::invalid_argument("basis index out of range");
    psi.amps_[0] = 0.0;
    psi.amps_[index] = 1.0;
    return psi;
}

StateVector StateVector::single_excitation(int num_qubits, int site) {
    if (site < 0 || site >= num_qubits) {
        throw std::invalid_argument("site out of range");
    }
    return basis_state(num_qubits, std::uint64_t{1} << (num_qubits - 1 - site));
}

double StateVector::norm_sq() const {
    double s = 0;
    for (const cplx& a : amps_) s += std::norm(a);
    return s;
}

void StateVector::apply_one_qubit(const GateMatrix& gate, int q) {
    if (gate.arity() != 1) throw std::invalid_argument("expected a one-qubit gate");
    if (q < 0 || q >= num_qubits_) throw std::invalid_argument("qubit index out of range");
    detail::apply_matrix_one(amps_, num_qubits_, gate.entries(), q);
}

void StateVector::apply_two_qubit(const GateMatrix& gate, int q1, int q2) {
    if (gate.arity() != 2) throw std::invalid_argument("expected a two-qubit gate");
    if (q1 == q2) throw std::invalid_argument("two-qubit gate targets must differ");
    if (q1 < 0 || q1 >= num_qubits_ || q2 < 0 || q2 >= num_qubits_) {
        throw std::invalid_argument("qubit index out of range");
    }
    detail::apply_matrix_two(amps_, num_qubits_, gate.entries(), q1, q2);
}

double StateVector::expectation_pauli(
    std::span<const std::pair<int, PauliAxis>> ops) const {
    std::uint64_t flip = 0, zmask = 0, ymask = 0;
    std::uint64_t seen = 0;
    for (const auto& [site, axis] : ops) {
        if (site < 0 || site >= num_qubits_) {
            throw std::invalid_argument("pauli site out of range");
        }
        const std::uint64_t bit = std::uint64_t{1} << (num_qubits_ - 1 - site);
        if (seen & bit) throw std::invalid_argument("duplicate pauli site");
        seen |= bit;
        switch (axis) {
            case PauliAxis::X: flip |= bit; break;
            case PauliAxis::Y: flip |= bit; ymask |= bit; break;
            case PauliAxis::Z: zmask |= bit; break;
        }
    }
    // <psi|P|psi> = sum_x conj(a_{x^flip}) phase(x) a_x
    // with Y contributing i(-1)^{bit} and Z contributing (-1)^{bit}.
    cplx acc = 0;
    const std::uint64_t dim = this->dim();
    for (std::uint64_t x = 0; x < dim; ++x) {
        const cplx ax = amps_[x];
        if (ax == cplx{0.0}) continue;
        int zpar = std::popcount(x & zmask) & 1;
        int ypar_min = std::popcount(x & ymask) & 1;
        int ycount = std::popcount(ymask);
        // phase = (i)^{ycount} * (-1)^{#(y bits set)} * (-1)^{#(z bits set)}
        cplx phase = 1.0;
        switch (ycount & 3) {
            case 0: phase = 1.0; break;
            case 1: phase = cplx(0, 1); break;
            case 2: phase = -1.0; break;
            case 3: phase = cplx(0, -1); break;
        }
        if ((zpar ^ ypar_min) & 1) phase = -phase;
        acc += std::conj(amps_[x ^ flip]) * phase * ax;
    }
    if (std::abs(acc.imag()) > tol.expectation_imag) {
        throw std::runtime_error("pauli expectation has a non-real residue");
    }
    return acc.real();
}

double StateVector::expectation_pauli(
    std::initializer_list<std::pair<int, PauliAxis>> ops) const {
    std::vector<std::pair<int, PauliAxis>> v(ops);
    return expectation_pauli(std::span<const std::pair<int, PauliAxis>>(v));
}

cplx StateVector::overlap(const StateVector& other) const {
    if (other.num_qubits_ != num_qubits_) {
        throw std::invalid_argument("qubit counts differ");
    }
    cplx s = 0;
    for (std::uint64_t i = 0; i < dim(); ++i) s += std::conj(other.amps_[i]) * amps_[i];
    return s;
}

}  // namespace xyc
