#include "xycirc/eig.hpp"

#include <stdexcept>

#include "xycirc/gate_matrix.hpp"
#include "xycirc/tolerances.hpp"

namespace xyc {

Eigensystem hermitian_eigensystem(const Eigen::MatrixXcd& matrix) {
    if (matrix.rows() != matrix.cols()) {
        throw std::invalid_argument("matrix must be square");
    }
    if (max_abs(matrix - matrix.adjoint()) > tol.hermitian_entry) {
        throw std::invalid_argument("matrix is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(matrix);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("eigensolver failed to converge");
    }
    Eigensystem out;
    out.values.assign(es.eigenvalues().data(),
                      es.eigenvalues().data() + es.eigenvalues().size());
    out.vectors = es.eigenvectors();
    return out;
}

std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& matrix) {
    if (matrix.rows() != matrix.cols()) {
        throw std::invalid_argument("matrix must be square");
    }
    if (max_abs(matrix - matrix.adjoint()) > tol.hermitian_entry) {
        throw std::invalid_argument("matrix is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(matrix, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("eigensolver failed to converge");
    }
    return {es.eigenvalues().data(),
            es.eigenvalues().data() + es.eigenvalues().size()};
}

}  // namespace xyc
