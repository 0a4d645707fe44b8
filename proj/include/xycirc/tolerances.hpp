#pragma once

namespace xyc {

// Global numeric tolerance table. Every threshold used by the library and
// its verification suite lives here; nothing is tuned locally.
struct Tolerances {
    double state_norm          = 1e-9;   // |norm^2 - 1| for public states
    double gate_norm_drift     = 1e-12;  // norm drift per gate application
    double unitary_gate        = 1e-10;  // ||G^dag G - I||_max for gates
    double unitary_circuit     = 1e-9;   // same, assembled circuits
    double hermitian_entry     = 1e-10;  // entrywise Hermiticity
    double trace_one           = 1e-9;
    double psd_floor           = -1e-9;  // eigenvalue floor for density matrices
    double expectation_imag    = 1e-10;
    double entropy_eig_floor   = 1e-12;  // eigenvalues below this are dropped
    double eig_residual        = 1e-9;
    double zero_frequency      = 1e-12;  // w_p treated as a zero mode
    double diag_offdiag        = 1e-8;   // off-diagonal bound after rotation
    double spectrum_match      = 1e-8;
    double overlap_deficit     = 1e-8;
    double energy_drift        = 1e-9;
    double trace_distance      = 1e-8;
    double entropy_exact       = 1e-9;
    double isometry            = 1e-8;
    double purity              = 1e-9;
    double entropy_symmetry    = 1e-8;
    double fit_recovery        = 1e-9;
    double c_fit_low           = 0.4;    // admissible window for the critical fit
    double c_fit_high          = 0.6;
};

inline constexpr Tolerances tol{};

}  // namespace xyc
