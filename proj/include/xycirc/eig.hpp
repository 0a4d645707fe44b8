#pragma once

#include <Eigen/Dense>
#include <vector>

namespace xyc {

struct Eigensystem {
    std::vector<double> values;   // ascending
    Eigen::MatrixXcd vectors;     // column i pairs with values[i]
};

/// Eigendecomposition of a Hermitian matrix. Validates Hermiticity and
/// solver convergence; no ordering guarantee among degenerate values.
Eigensystem hermitian_eigensystem(const Eigen::MatrixXcd& matrix);

std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& matrix);

}  // namespace xyc
