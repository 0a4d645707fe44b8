#pragma once

// Test-side reference implementations, kept independent of the library's
// circuit and kernel code paths: everything here works through dense Eigen
// algebra built from first principles.

#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cplx = std::complex<double>;

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

inline Eigen::Matrix2cd pauli_x() {
    Eigen::Matrix2cd m;
    m << 0, 1, 1, 0;
    return m;
}
inline Eigen::Matrix2cd pauli_y() {
    Eigen::Matrix2cd m;
    m << 0, cplx(0, -1), cplx(0, 1), 0;
    return m;
}
inline Eigen::Matrix2cd pauli_z() {
    Eigen::Matrix2cd m;
    m << 1, 0, 0, -1;
    return m;
}

/// Single-site operator embedded at qubit q of an n-qubit register.
inline Eigen::MatrixXcd embed(const Eigen::Matrix2cd& op, int q, int n) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (int i = 0; i < n; ++i) {
        out = kron(out, i == q ? Eigen::MatrixXcd(op)
                               : Eigen::MatrixXcd(Eigen::Matrix2cd::Identity()));
    }
    return out;
}

/// Two-site gate embedded at (q1, q2) by brute-force basis mapping.
inline Eigen::MatrixXcd embed2(const Eigen::Matrix4cd& gate, int q1, int q2, int n) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        const int b1 = static_cast<int>((col >> (n - 1 - q1)) & 1);
        const int b2 = static_cast<int>((col >> (n - 1 - q2)) & 1);
        const int in = 2 * b1 + b2;
        for (int outrow = 0; outrow < 4; ++outrow) {
            if (gate(outrow, in) == cplx{0.0}) continue;
            Eigen::Index row = col;
            row &= ~(Eigen::Index{1} << (n - 1 - q1));
            row &= ~(Eigen::Index{1} << (n - 1 - q2));
            if (outrow & 2) row |= Eigen::Index{1} << (n - 1 - q1);
            if (outrow & 1) row |= Eigen::Index{1} << (n - 1 - q2);
            out(row, col) += gate(outrow, in);
        }
    }
    return out;
}

/// exp(scale * H) for Hermitian H via eigendecomposition.
inline Eigen::MatrixXcd expm_hermitian(const Eigen::MatrixXcd& h, cplx scale) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    Eigen::VectorXcd d(es.eigenvalues().size());
    for (Eigen::Index i = 0; i < d.size(); ++i) {
        d(i) = std::exp(scale * es.eigenvalues()(i));
    }
    return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

/// Closed-form eigenvalues of a 2x2 Hermitian matrix.
inline std::pair<double, double> eig2_hermitian(const Eigen::Matrix2cd& m) {
    const double a = m(0, 0).real(), d = m(1, 1).real();
    const double off = std::abs(m(0, 1));
    const double mid = (a + d) / 2;
    const double rad = std::sqrt((a - d) * (a - d) / 4 + off * off);
    return {mid - rad, mid + rad};
}

inline Eigen::MatrixXcd random_unitary(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    Eigen::MatrixXcd m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) m(i, j) = cplx(g(rng), g(rng));
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(m);
    Eigen::MatrixXcd q = qr.householderQ();
    return q;
}

inline std::vector<cplx> random_state(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    std::vector<cplx> amps(std::size_t{1} << n);
    double norm = 0;
    for (auto& a : amps) {
        a = cplx(g(rng), g(rng));
        norm += std::norm(a);
    }
    norm = std::sqrt(norm);
    for (auto& a : amps) a /= norm;
    return amps;
}

}  // namespace oracle
