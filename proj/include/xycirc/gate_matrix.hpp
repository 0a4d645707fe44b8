#pragma once

#include <complex>
#include <Eigen/Dense>

namespace xyc {

using cplx = std::complex<double>;

/// Unitary acting on one or two qubits. The entries of a two-qubit gate are
/// indexed in the basis |00>,|01>,|10>,|11> where the first label is the
/// first target wire (the more significant tensor slot).
class GateMatrix {
  public:
    GateMatrix(Eigen::MatrixXcd entries);

    int arity() const { return arity_; }
    int dim() const { return static_cast<int>(entries_.rows()); }
    const Eigen::MatrixXcd& entries() const { return entries_; }
    cplx operator()(int r, int c) const { return entries_(r, c); }

    GateMatrix adjoint() const { return GateMatrix(entries_.adjoint()); }

  private:
    int arity_;
    Eigen::MatrixXcd entries_;
};

double max_abs(const Eigen::MatrixXcd& m);

}  // namespace xyc
