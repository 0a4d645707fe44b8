#include "xycirc/gate_matrix.hpp"

#include <stdexcept>

#include "xycirc/tolerances.hpp"

namespace xyc {

double max_abs(const Eigen::MatrixXcd& m) {
    return m.cwiseAbs().maxCoeff();
}

GateMatrix::GateMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
    const auto rows = entries_.rows();
    if (rows != entries_.cols() || (rows != 2 && rows != 4)) {
        throw std::invalid_argument("gate must be 2x2 or 4x4");
    }
    arity_ = rows == 2 ? 1 : 2;
    Eigen::MatrixXcd residue =
        entries_.adjoint() * entries_ - Eigen::MatrixXcd::Identity(rows, rows);
    if (max_abs(residue) > tol.unitary_gate) {
        throw std::invalid_argument("gate is not unitary");
    }
}

}  // namespace xyc
