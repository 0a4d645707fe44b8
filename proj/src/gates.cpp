#include "xycirc/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace xyc {

namespace {

using Eigen::Matrix2cd;
using Eigen::Matrix4cd;
using Eigen::MatrixXcd;

const cplx kI{0.0, 1.0};

Matrix2cd pauli(PauliAxis a) {
    Matrix2cd m;
    switch (a) {
        case PauliAxis::X: m << 0, 1, 1, 0; break;
        case PauliAxis::Y: m << 0, -kI, kI, 0; break;
        case PauliAxis::Z: m << 1, 0, 0, -1; break;
    }
    return m;
}

MatrixXcd kron(const MatrixXcd& a, const MatrixXcd& b) {
    MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

}  // namespace

GammaSet gamma_matrices(int n) {
    if (n < 2 || n > 8 || n % 2 != 0) {
        throw std::invalid_argument("gamma set needs an even qubit count in [2, 8]");
    }
    // Mode j (1-based) acts on qubit n - j with a Z tail to its right; the
    // n = 2 base set is (I(x)X, I(x)Y, X(x)Z, Y(x)Z) and each recursion step
    // prepends I (x) I to the old set and appends two Z-extended rows.
    GammaSet out;
    out.num_qubits = n;
    const Matrix2cd id = Matrix2cd::Identity();
    for (int j = 1; j <= n; ++j) {
        for (PauliAxis head : {PauliAxis::X, PauliAxis::Y}) {
            MatrixXcd m = MatrixXcd::Ones(1, 1);
            for (int q = 0; q < n; ++q) {
                if (q < n - j) m = kron(m, id);
                else if (q == n - j) m = kron(m, pauli(head));
                else m = kron(m, pauli(PauliAxis::Z));
            }
            out.matrices.push_back(std::move(m));
        }
    }
    return out;
}

Eigen::Matrix4cd sigma_pm(Su2Axis which) {
    const double s = which.sign == Su2Sign::Plus ? 1.0 : -1.0;
    const Matrix2cd X = pauli(PauliAxis::X), Y = pauli(PauliAxis::Y),
                    Z = pauli(PauliAxis::Z), id = Matrix2cd::Identity();
    MatrixXcd m;
    switch (which.axis) {
        case PauliAxis::X: m = 0.5 * (-kron(X, X) + s * kron(Y, Y)); break;
        case PauliAxis::Y: m = 0.5 * (kron(Y, X) + s * kron(X, Y)); break;
        case PauliAxis::Z: m = 0.5 * (kron(Z, id) + s * kron(id, Z)); break;
    }
    return m;
}

GateMatrix u_pm_dense(Su2Axis which, double theta) {
    // Sigma has eigenvalues in {-1, 0, 1}, so the exponential is quadratic:
    // exp(-i t S / 2) = I + (cos(t/2) - 1) S^2 - i sin(t/2) S.
    const Matrix4cd s = sigma_pm(which);
    Matrix4cd u = Matrix4cd::Identity() + (std::cos(theta / 2) - 1.0) * (s * s) -
                  kI * std::sin(theta / 2) * s;
    return GateMatrix(u);
}

Circuit u_pm_circuit(Su2Axis which, double theta) {
    const double sg = which.sign == Su2Sign::Plus ? 1.0 : -1.0;
    Circuit c(2);
    if (which.axis == PauliAxis::Z) {
        c.zrot(theta / 2, 0);
        c.zrot(sg * theta / 2, 1);
        return c;
    }
    // Each half is an entangling ZZ rotation conjugated into the wanted
    // Pauli frame; the ladders are emitted in application order.
    auto zz_block = [&c](double alpha) {
        c.cnot(0, 1);
        c.zrot(alpha, 1);
        c.cnot(0, 1);
    };
    if (which.axis == PauliAxis::X) {
        // exp(+i theta X(x)X / 4), then exp(-/+ i theta Y(x)Y / 4) with both
        // wires rotated into the Y frame by S^dag..S conjugation.
        c.hadamard(0);
        c.hadamard(1);
        zz_block(-theta / 2);
        c.hadamard(0);
        c.hadamard(1);
        c.sdag_gate(0);
        c.sdag_gate(1);
        c.hadamard(0);
        c.hadamard(1);
        zz_block(sg * theta / 2);
        c.hadamard(0);
        c.hadamard(1);
        c.s_gate(0);
        c.s_gate(1);
        return c;
    }
    // Y axis: exp(-i theta Y(x)X / 4) then exp(-/+ i theta X(x)Y / 4); the Y
    // frame moves from the first wire to the second between the halves.
    c.sdag_gate(0);
    c.hadamard(0);
    c.hadamard(1);
    zz_block(theta / 2);
    c.hadamard(0);
    c.hadamard(1);
    c.s_gate(0);
    c.sdag_gate(1);
    c.hadamard(0);
    c.hadamard(1);
    zz_block(sg * theta / 2);
    c.hadamard(0);
    c.hadamard(1);
    c.s_gate(1);
    return c;
}

GateMatrix phase_gate_r(double theta) {
    Matrix4cd m = Matrix4cd::Identity();
    m(2, 2) = std::exp(kI * theta);
    m(3, 3) = std::exp(kI * theta);
    return GateMatrix(m);
}

GateMatrix fourier_gate(double p) {
    const double twiddle = 2.0 * std::numbers::pi * p + std::numbers::pi;
    Eigen::Matrix4cd m = phase_gate_r(twiddle).entries() *
                         u_pm_dense({PauliAxis::Y, Su2Sign::Minus},
                                    std::numbers::pi / 2)
                             .entries();
    return GateMatrix(m);
}

GateMatrix fswap_gate() {
    Eigen::Matrix4cd m = phase_gate_r(std::numbers::pi).entries() *
                         u_pm_dense({PauliAxis::Y, Su2Sign::Minus}, std::numbers::pi)
                             .entries();
    return GateMatrix(m);
}

GateMatrix bog_gate(double theta) {
    return u_pm_dense({PauliAxis::X, Su2Sign::Plus}, theta);
}

GateMatrix laplace_gate(double beta, double w) {
    if (beta < 0 || w < 0) throw std::invalid_argument("laplace gate needs beta, w >= 0");
    const double norm = std::sqrt(std::exp(-beta * w) + std::exp(beta * w));
    Matrix2cd m = (std::exp(-beta * w / 2) * pauli(PauliAxis::X) +
                   std::exp(beta * w / 2) * pauli(PauliAxis::Z)) /
                  norm;
    return GateMatrix(m);
}

GateMatrix hadamard_gate() {
    Matrix2cd m;
    m << 1, 1, 1, -1;
    return GateMatrix(m / std::numbers::sqrt2);
}

GateMatrix s_gate() {
    Matrix2cd m;
    m << 1, 0, 0, kI;
    return GateMatrix(m);
}

GateMatrix sdag_gate() {
    Matrix2cd m;
    m << 1, 0, 0, -kI;
    return GateMatrix(m);
}

GateMatrix zrot_gate(double alpha) {
    Matrix2cd m;
    m << std::exp(-kI * alpha / 2.0), 0, 0, std::exp(kI * alpha / 2.0);
    return GateMatrix(m);
}

GateMatrix cnot_gate() {
    Matrix4cd m = Matrix4cd::Zero();
    m(0, 0) = 1;
    m(1, 1) = 1;
    m(2, 3) = 1;
    m(3, 2) = 1;
    return GateMatrix(m);
}

GateMatrix pauli_gate(PauliAxis axis) {
    return GateMatrix(pauli(axis));
}

}  // namespace xyc
