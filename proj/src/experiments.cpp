#include "xycirc/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "xycirc/eig.hpp"
#include "xycirc/gates.hpp"
#include "xycirc/tolerances.hpp"

namespace xyc {

namespace {

// Original-chain dispersion of each kept mode, indexed by coarse wire.
std::vector<double> coarse_mode_energies(const ModelParams& params, double cutoff) {
    const int n = params.n;
    const int m = static_cast<int>(kept_momenta(params, cutoff).size());
    const MomentumLayout small = MomentumLayout::canonical(m);
    std::vector<double> w(m);
    for (int q = 0; q < m; ++q) {
        const int s = small.label_of(q);
        int big;
        if (s == 0) big = 0;
        else if (s == m / 2) big = n / 2;
        else if (s < m / 2) big = s;
        else big = n - (m - s);
        w[q] = dispersion(params, static_cast<double>(big) / n);
    }
    return w;
}

struct LeastSquares {
    double slope = 0, intercept = 0, r_squared = 0;
};

LeastSquares fit_line(const std::vector<double>& xs, const std::vector<double>& ys) {
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    LeastSquares out;
    const double det = n * sxx - sx * sx;
    if (std::abs(det) < 1e-30) {
        out.slope = 0;
        out.intercept = sy / n;
    } else {
        out.slope = (n * sxy - sx * sy) / det;
        out.intercept = (sy * sxx - sx * sxy) / det;
    }
    double ss_res = 0, ss_tot = 0;
    const double mean = sy / n;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double pred = out.slope * xs[i] + out.intercept;
        ss_res += (ys[i] - pred) * (ys[i] - pred);
        ss_tot += (ys[i] - mean) * (ys[i] - mean);
    }
    out.r_squared = ss_tot > 0 ? std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0) : 1.0;
    return out;
}

}  // namespace

SpacetimeGrid run_expz_spacetime(const ModelParams& params, int initial_site,
                                 const std::vector<double>& times) {
    params.validate();
    SpacetimeGrid grid;
    grid.times = times;
    grid.sites.resize(params.n);
    for (int i = 0; i < params.n; ++i) grid.sites[i] = i;
    for (double t : times) {
        if (!std::isfinite(t)) throw std::invalid_argument("times must be finite");
        const StateVector psi = evolve_position_state(params, initial_site, t);
        std::vector<double> row(params.n);
        for (int i = 0; i < params.n; ++i) {
            row[i] = psi.expectation_pauli({{i, PauliAxis::Z}});
        }
        grid.values.push_back(std::move(row));
    }
    return grid;
}

SpacetimeGrid run_expz_coarse(const ModelParams& params, double cutoff,
                              const StateVector& initial_state,
                              const std::vector<double>& times) {
    params.validate();
    const DensityMatrix rho0 = coarse_grain(initial_state, params, cutoff);
    const int m = rho0.num_qubits();
    const std::vector<double> w = coarse_mode_energies(params, cutoff);
    ModelParams coarse = params;
    coarse.n = m;
    const Circuit udis = build_udis(coarse);
    const Circuit udis_inv = udis.inverted();

    SpacetimeGrid grid;
    grid.times = times;
    grid.sites.resize(m);
    for (int i = 0; i < m; ++i) grid.sites[i] = i;
    for (double t : times) {
        Circuit evo(m);
        evo.append(udis_inv);
        for (int q = 0; q < m; ++q) evo.phase_r(-w[q] * t / 2, q, (q + 1) % m);
        evo.append(udis);
        DensityMatrix rho = rho0;
        apply_circuit(evo, rho);
        std::vector<double> row(m);
        for (int i = 0; i < m; ++i) row[i] = rho.expectation_pauli_z(i);
        grid.values.push_back(std::move(row));
    }
    return grid;
}

EntropyCurve run_entropy_curve(const StateVector& state,
                               const std::vector<int>& block_sites) {
    const int n = state.num_qubits();
    EntropyCurve curve;
    curve.lengths.push_back(0);
    curve.entropies.push_back(0.0);
    for (std::size_t l = 1; l <= block_sites.size(); ++l) {
        std::vector<int> keep(block_sites.begin(), block_sites.begin() + l);
        // For a pure global state the complement block has the same spectrum;
        // trace out whichever side is smaller.
        if (l > static_cast<std::size_t>(n) - l) {
            std::vector<int> comp;
            for (int q = 0; q < n; ++q) {
                if (std::find(keep.begin(), keep.end(), q) == keep.end()) {
                    comp.push_back(q);
                }
            }
            keep = std::move(comp);
        }
        curve.lengths.push_back(static_cast<int>(l));
        curve.entropies.push_back(
            keep.empty() ? 0.0 : von_neumann_entropy(partial_trace(state, keep)));
    }
    return curve;
}

FitResult critical_fit(const EntropyCurve& curve, FitModel model) {
    const int big_l = curve.lengths.back();
    if (big_l < 5) throw std::invalid_argument("fit needs at least 4 interior points");
    std::vector<double> xs_log, ys_log, xs_lin, ys_lin;
    for (int l = 1; l < big_l; ++l) {
        xs_log.push_back(std::log2(big_l / std::numbers::pi *
                                   std::sin(std::numbers::pi * l / big_l)));
        ys_log.push_back(curve.entropies[l]);
        if (l <= big_l / 2) {
            xs_lin.push_back(l);
            ys_lin.push_back(curve.entropies[l]);
        }
    }
    const LeastSquares log_fit = fit_line(xs_log, ys_log);
    const LeastSquares lin_fit = fit_line(xs_lin, ys_lin);
    FitResult out;
    out.r_squared_log = log_fit.r_squared;
    out.r_squared_linear = lin_fit.r_squared;
    if (model == FitModel::Log) {
        out.c_fit = 3.0 * log_fit.slope;
        out.c1 = log_fit.intercept;
    } else {
        out.c_fit = lin_fit.slope;
        out.c1 = lin_fit.intercept;
    }
    return out;
}

DensityMatrix thermal_state_oracle(const ModelParams& params, double beta,
                                   ThermalBasis basis) {
    params.validate();
    if (beta < 0) throw std::invalid_argument("beta must be nonnegative");
    if (params.n > 10) throw std::length_error("thermal oracle capped at 10 modes");
    const auto dim = Eigen::Index{1} << params.n;
    if (basis == ThermalBasis::Energy) {
        const std::vector<double> w = mode_energies(params);
        Eigen::VectorXd boltz(dim);
        for (Eigen::Index x = 0; x < dim; ++x) {
            double e = 0;
            for (int q = 0; q < params.n; ++q) {
                if ((x >> (params.n - 1 - q)) & 1) e += w[q];
            }
            boltz(x) = std::exp(-beta * e);
        }
        boltz /= boltz.sum();
        return DensityMatrix(params.n, boltz.cast<cplx>().asDiagonal());
    }
    const Eigensystem es =
        hermitian_eigensystem(build_hamiltonian(params, HamiltonianForm::Fermionic));
    Eigen::VectorXd boltz(dim);
    for (Eigen::Index i = 0; i < dim; ++i) boltz(i) = std::exp(-beta * es.values[i]);
    boltz /= boltz.sum();
    Eigen::MatrixXcd rho =
        es.vectors * boltz.cast<cplx>().asDiagonal() * es.vectors.adjoint();
    return DensityMatrix(params.n, std::move(rho));
}

StateVector prepare_tfd_state(int m, const ModelParams& params, double beta,
                              bool position_basis) {
    StateVector psi(2 * m);
    apply_circuit(build_tfd(m, params, beta), psi);
    if (position_basis) {
        const Circuit udis = build_udis(params);
        Circuit both(2 * m);
        both.append(udis, 0);
        both.append(udis, m);
        apply_circuit(both, psi);
    }
    return psi;
}

StateVector prepare_ground_state_circuit(const ModelParams& params) {
    StateVector psi(params.n);
    apply_circuit(build_udis(params), psi);
    return psi;
}

std::vector<TfdEntropyRow> run_tfd_entropy_vs_beta(const ModelParams& params,
                                                   const std::vector<double>& betas) {
    params.validate();
    std::vector<TfdEntropyRow> rows;
    std::vector<int> left(params.n);
    for (int q = 0; q < params.n; ++q) left[q] = q;
    for (double beta : betas) {
        if (beta < 0) throw std::invalid_argument("beta must be nonnegative");
        const StateVector psi = prepare_tfd_state(params.n, params, beta, true);
        TfdEntropyRow row;
        row.beta = beta;
        row.s_half_cut = von_neumann_entropy(partial_trace(psi, left));
        row.curve = run_entropy_curve(psi, left);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace xyc
