#include "xycirc/density_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "xycirc/eig.hpp"
#include "xycirc/tolerances.hpp"

namespace xyc {

namespace {

void check_keep(int n, const std::vector<int>& keep) {
    if (keep.empty()) throw std::invalid_argument("keep set must be nonempty");
    std::vector<int> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("keep set has duplicates");
    }
    if (sorted.front() < 0 || sorted.back() >= n) {
        throw std::invalid_argument("keep index out of range");
    }
}

}  // namespace

DensityMatrix::DensityMatrix(int num_qubits, Eigen::MatrixXcd entries)
    : num_qubits_(num_qubits), entries_(std::move(entries)) {
    const auto dim = Eigen::Index{1} << num_qubits;
    if (entries_.rows() != dim || entries_.cols() != dim) {
        throw std::invalid_argument("density matrix dimension must be 2^m");
    }
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
    const auto dim = static_cast<Eigen::Index>(psi.dim());
    Eigen::VectorXcd v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) v(i) = psi.amplitude(i);
    return DensityMatrix(psi.num_qubits(), v * v.adjoint());
}

double DensityMatrix::purity() const {
    return (entries_ * entries_).trace().real();
}

void DensityMatrix::apply_one_qubit(const GateMatrix& gate, int q) {
    if (gate.arity() != 1) throw std::invalid_argument("expected a one-qubit gate");
    if (q < 0 || q >= num_qubits_) throw std::invalid_argument("qubit index out of range");
    const Eigen::MatrixXcd& u = gate.entries();
    for (Eigen::Index c = 0; c < entries_.cols(); ++c) {
        std::span<cplx> col(entries_.col(c).data(), entries_.rows());
        detail::apply_matrix_one(col, num_qubits_, u, q);
    }
    entries_ = entries_.adjoint().eval();
    for (Eigen::Index c = 0; c < entries_.cols(); ++c) {
        std::span<cplx> col(entries_.col(c).data(), entries_.rows());
        detail::apply_matrix_one(col, num_qubits_, u, q);
    }
    entries_ = entries_.adjoint().eval();
}

void DensityMatrix::apply_two_qubit(const GateMatrix& gate, int q1, int q2) {
    if (gate.arity() != 2) throw std::invalid_argument("expected a two-qubit gate");
    if (q1 == q2) throw std::invalid_argument("two-qubit gate targets must differ");
    if (q1 < 0 || q1 >= num_qubits_ || q2 < 0 || q2 >= num_qubits_) {
        throw std::invalid_argument("qubit index out of range");
    }
    const Eigen::MatrixXcd& u = gate.entries();
    for (Eigen::Index c = 0; c < entries_.cols(); ++c) {
        std::span<cplx> col(entries_.col(c).data(), entries_.rows());
        detail::apply_matrix_two(col, num_qubits_, u, q1, q2);
    }
    entries_ = entries_.adjoint().eval();
    for (Eigen::Index c = 0; c < entries_.cols(); ++c) {
        std::span<cplx> col(entries_.col(c).data(), entries_.rows());
        detail::apply_matrix_two(col, num_qubits_, u, q1, q2);
    }
    entries_ = entries_.adjoint().eval();
}

double DensityMatrix::expectation_pauli_z(int site) const {
    if (site < 0 || site >= num_qubits_) {
        throw std::invalid_argument("site out of range");
    }
    double v = 0;
    for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
        const int bit = static_cast<int>((i >> (num_qubits_ - 1 - site)) & 1);
        v += (bit ? -1.0 : 1.0) * entries_(i, i).real();
    }
    return v;
}

void DensityMatrix::validate() const {
    if (max_abs(entries_ - entries_.adjoint()) > tol.hermitian_entry) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    if (std::abs(trace_real() - 1.0) > tol.trace_one) {
        throw std::invalid_argument("density matrix trace is not 1");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(entries_,
                                                       Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < tol.psd_floor) {
        throw std::invalid_argument("density matrix has a negative eigenvalue");
    }
}

DensityMatrix partial_trace(const StateVector& psi, const std::vector<int>& keep) {
    const int n = psi.num_qubits();
    check_keep(n, keep);
    std::vector<int> rest;
    rest.reserve(n - keep.size());
    for (int q = 0; q < n; ++q) {
        if (std::find(keep.begin(), keep.end(), q) == keep.end()) rest.push_back(q);
    }
    const auto kd = Eigen::Index{1} << keep.size();
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(kd, kd);
    // Accumulate v_e v_e^dag over environment configurations.
    std::vector<cplx> slice(kd);
    const std::uint64_t env_dim = std::uint64_t{1} << rest.size();
    for (std::uint64_t e = 0; e < env_dim; ++e) {
        std::uint64_t base = 0;
        for (std::size_t b = 0; b < rest.size(); ++b) {
            if ((e >> (rest.size() - 1 - b)) & 1u) base |= std::uint64_t{1}
                                                           << (n - 1 - rest[b]);
        }
        for (std::uint64_t r = 0; r < static_cast<std::uint64_t>(kd); ++r) {
            std::uint64_t idx = base;
            for (std::size_t b = 0; b < keep.size(); ++b) {
                if ((r >> (keep.size() - 1 - b)) & 1u) idx |= std::uint64_t{1}
                                                              << (n - 1 - keep[b]);
            }
            slice[r] = psi.amplitude(idx);
        }
        for (Eigen::Index r = 0; r < kd; ++r) {
            if (slice[r] == cplx{0.0}) continue;
            for (Eigen::Index c = 0; c < kd; ++c) {
                rho(r, c) += slice[r] * std::conj(slice[c]);
            }
        }
    }
    return DensityMatrix(static_cast<int>(keep.size()), std::move(rho));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
    const int n = rho.num_qubits();
    check_keep(n, keep);
    std::vector<int> rest;
    for (int q = 0; q < n; ++q) {
        if (std::find(keep.begin(), keep.end(), q) == keep.end()) rest.push_back(q);
    }
    const auto kd = Eigen::Index{1} << keep.size();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(kd, kd);
    auto scatter = [&](std::uint64_t sub, const std::vector<int>& qubits) {
        std::uint64_t full = 0;
        for (std::size_t b = 0; b < qubits.size(); ++b) {
            if ((sub >> (qubits.size() - 1 - b)) & 1u) {
                full |= std::uint64_t{1} << (n - 1 - qubits[b]);
            }
        }
        return full;
    };
    const std::uint64_t env_dim = std::uint64_t{1} << rest.size();
    for (std::uint64_t e = 0; e < env_dim; ++e) {
        const std::uint64_t ebits = scatter(e, rest);
        for (Eigen::Index r = 0; r < kd; ++r) {
            const std::uint64_t ri = ebits | scatter(static_cast<std::uint64_t>(r), keep);
            for (Eigen::Index c = 0; c < kd; ++c) {
                const std::uint64_t ci =
                    ebits | scatter(static_cast<std::uint64_t>(c), keep);
                out(r, c) += rho.entries()(ri, ci);
            }
        }
    }
    return DensityMatrix(static_cast<int>(keep.size()), std::move(out));
}

double von_neumann_entropy(const DensityMatrix& rho) {
    rho.validate();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.entries(),
                                                       Eigen::EigenvaluesOnly);
    double s = 0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const double lam = es.eigenvalues()(i);
        if (lam < tol.entropy_eig_floor) continue;
        s -= lam * std::log2(lam);
    }
    return s;
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("qubit counts differ");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a.entries() - b.entries(),
                                                       Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace xyc
