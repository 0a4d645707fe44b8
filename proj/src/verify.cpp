#include "xycirc/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "xycirc/eig.hpp"
#include "xycirc/experiments.hpp"
#include "xycirc/gates.hpp"
#include "xycirc/tolerances.hpp"

namespace xyc {

namespace {

const std::vector<std::pair<double, double>> kCouplingGrid = {
    {0.0, 1.0}, {0.5, 1.0}, {1.0, 1.0}, {1.5, 1.0}, {1.0, 0.5}};

Eigen::MatrixXcd hermitian_function(const Eigen::MatrixXcd& h,
                                    const std::function<cplx(double)>& f) {
    const Eigensystem es = hermitian_eigensystem(h);
    Eigen::VectorXcd d(static_cast<Eigen::Index>(es.values.size()));
    for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = f(es.values[i]);
    return es.vectors * d.asDiagonal() * es.vectors.adjoint();
}

StateVector random_below_cutoff_state(const ModelParams& params, double cutoff,
                                      std::mt19937_64& rng) {
    const int n = params.n;
    const MomentumLayout lay = MomentumLayout::canonical(n);
    const std::vector<int> kept = kept_momenta(params, cutoff);
    std::vector<int> kept_wires;
    for (int k : kept) kept_wires.push_back(lay.qubit_of(k));
    std::sort(kept_wires.begin(), kept_wires.end());

    std::normal_distribution<double> gauss;
    const std::uint64_t sub_dim = std::uint64_t{1} << kept_wires.size();
    std::vector<cplx> amps(std::uint64_t{1} << n, cplx{0.0});
    double norm = 0;
    for (std::uint64_t s = 0; s < sub_dim; ++s) {
        const cplx a(gauss(rng), gauss(rng));
        std::uint64_t idx = 0;
        for (std::size_t b = 0; b < kept_wires.size(); ++b) {
            if ((s >> (kept_wires.size() - 1 - b)) & 1u) {
                idx |= std::uint64_t{1} << (n - 1 - kept_wires[b]);
            }
        }
        amps[idx] = a;
        norm += std::norm(a);
    }
    norm = std::sqrt(norm);
    for (auto& a : amps) a /= norm;
    StateVector psi(n, std::move(amps));
    apply_circuit(build_fourier(n), psi);
    return psi;
}

std::string fmt(double v) {
    std::ostringstream s;
    s.precision(3);
    s << std::scientific << v;
    return s.str();
}

}  // namespace

CriterionResult check_diagonalization() {
    double worst_off = 0, worst_spec = 0;
    for (int n : {4, 8}) {
        for (const auto& [lambda, gamma] : kCouplingGrid) {
            ModelParams params{n, lambda, gamma, 1.0};
            const Eigen::MatrixXcd u = circuit_to_unitary(build_udis(params), n);
            const Eigen::MatrixXcd h =
                build_hamiltonian(params, HamiltonianForm::Fermionic);
            const Eigen::MatrixXcd d = u.adjoint() * h * u;
            Eigen::MatrixXcd off = d;
            off.diagonal().setZero();
            worst_off = std::max(worst_off, max_abs(off));
            std::vector<double> diag(d.rows());
            for (Eigen::Index i = 0; i < d.rows(); ++i) diag[i] = d(i, i).real();
            const double mn = *std::min_element(diag.begin(), diag.end());
            for (auto& v : diag) v -= mn;
            std::sort(diag.begin(), diag.end());
            const Spectrum spec = exact_spectrum(params);
            for (std::size_t i = 0; i < diag.size(); ++i) {
                worst_spec = std::max(worst_spec, std::abs(diag[i] - spec.levels[i]));
            }
        }
    }
    const bool pass = worst_off < tol.diag_offdiag && worst_spec < tol.spectrum_match;
    return {"diagonalization",
            pass,
            "max off-diagonal " + fmt(worst_off) + ", spectrum dev " + fmt(worst_spec)};
}

CriterionResult check_gate_decompositions() {
    std::mt19937_64 rng(20240811ULL);
    std::uniform_real_distribution<double> angle(-2 * std::numbers::pi,
                                                 2 * std::numbers::pi);
    double worst_tr = 0;
    for (int rep = 0; rep < 20; ++rep) {
        const double theta = angle(rng);
        for (PauliAxis axis : {PauliAxis::X, PauliAxis::Y, PauliAxis::Z}) {
            for (Su2Sign sign : {Su2Sign::Plus, Su2Sign::Minus}) {
                const Su2Axis which{axis, sign};
                const Eigen::MatrixXcd circ =
                    circuit_to_unitary(u_pm_circuit(which, theta), 2);
                const Eigen::MatrixXcd dense = u_pm_dense(which, theta).entries();
                worst_tr = std::max(
                    worst_tr, std::abs(std::abs((circ.adjoint() * dense).trace()) - 4.0));
            }
        }
    }
    double worst_bog = 0;
    for (int rep = 0; rep < 8; ++rep) {
        const double theta = angle(rng);
        const Eigen::MatrixXcd circ = circuit_to_unitary(
            u_pm_circuit({PauliAxis::X, Su2Sign::Plus}, theta), 2);
        Eigen::Matrix4cd ref = Eigen::Matrix4cd::Identity();
        ref(0, 0) = ref(3, 3) = std::cos(theta / 2);
        ref(0, 3) = ref(3, 0) = cplx(0, std::sin(theta / 2));
        worst_bog = std::max(worst_bog, max_abs(circ - ref));
    }
    const bool pass = worst_tr < tol.unitary_circuit && worst_bog < 1e-10;
    return {"gate_decompositions",
            pass,
            "|tr| deficit " + fmt(worst_tr) + ", pair-mixer entrywise " + fmt(worst_bog)};
}

CriterionResult check_fourier_dft() {
    const int n = 8;
    const Circuit ft = build_fourier(n);
    const MomentumLayout lay = MomentumLayout::canonical(n);
    const Eigen::MatrixXcd target = fourier_target_matrix(lay);
    double worst = 0;
    for (int w = 0; w < n; ++w) {
        StateVector psi = StateVector::single_excitation(n, w);
        apply_circuit(ft, psi);
        for (int j = 0; j < n; ++j) {
            const cplx got =
                psi.amplitude(std::uint64_t{1} << (n - 1 - j));
            worst = std::max(worst, std::abs(got - target(j, w)));
        }
        // everything outside the one-particle sector must vanish
        for (std::uint64_t idx = 0; idx < psi.dim(); ++idx) {
            if (std::popcount(idx) != 1) {
                worst = std::max(worst, std::abs(psi.amplitude(idx)));
            }
        }
    }
    return {"fourier_dft", worst < tol.spectrum_match,
            "max deviation from the DFT matrix " + fmt(worst)};
}

CriterionResult check_time_evolution() {
    ModelParams params{4, 1.0, 1.0, 1.0};
    const Eigen::MatrixXcd h = build_hamiltonian(params, HamiltonianForm::Fermionic);
    double worst_overlap = 0, worst_drift = 0;
    for (double t : {0.1, 1.0, 10.0, 100.0}) {
        const Eigen::MatrixXcd u = hermitian_function(
            h, [t](double e) { return std::exp(cplx(0, -0.5 * e * t)); });
        for (int site = 0; site < params.n; ++site) {
            const StateVector evolved = evolve_position_state(params, site, t);
            Eigen::VectorXcd ref = Eigen::VectorXcd::Zero(16);
            ref(std::uint64_t{1} << (params.n - 1 - site)) = 1.0;
            ref = u * ref;
            cplx ov = 0;
            for (int i = 0; i < 16; ++i) {
                ov += std::conj(ref(i)) * evolved.amplitude(i);
            }
            worst_overlap = std::max(worst_overlap, std::abs(std::abs(ov) - 1.0));
            Eigen::VectorXcd ev(16);
            for (int i = 0; i < 16; ++i) ev(i) = evolved.amplitude(i);
            const double e_t = (ev.adjoint() * h * ev)(0).real();
            const double e_0 = h(std::uint64_t{1} << (params.n - 1 - site),
                                 std::uint64_t{1} << (params.n - 1 - site))
                                   .real();
            worst_drift = std::max(worst_drift, std::abs(e_t - e_0));
        }
    }
    const bool pass =
        worst_overlap < tol.overlap_deficit && worst_drift < tol.energy_drift;
    return {"time_evolution",
            pass,
            "overlap deficit " + fmt(worst_overlap) + ", energy drift " +
                fmt(worst_drift)};
}

CriterionResult check_tfd_gibbs() {
    double worst_td = 0, worst_half = 0, worst_block = 0;
    for (double lambda : {1.0, 1.5}) {
        ModelParams params{4, lambda, 1.0, 1.0};
        std::vector<int> left{0, 1, 2, 3};
        for (double beta : {0.0, 0.5, 1.0, 2.0, 10.0}) {
            const StateVector psi = prepare_tfd_state(4, params, beta, false);
            const DensityMatrix rho_l = partial_trace(psi, left);
            const DensityMatrix gibbs =
                thermal_state_oracle(params, beta, ThermalBasis::Energy);
            worst_td = std::max(worst_td, trace_distance(rho_l, gibbs));
        }
        const StateVector psi0 = prepare_tfd_state(4, params, 0.0, true);
        worst_half = std::max(
            worst_half, std::abs(von_neumann_entropy(partial_trace(psi0, left)) - 4.0));
        const EntropyCurve curve = run_entropy_curve(psi0, left);
        for (int l = 0; l <= 4; ++l) {
            worst_block =
                std::max(worst_block, std::abs(curve.entropies[l] - l));
        }
    }
    const bool pass = worst_td < tol.trace_distance &&
                      worst_half < tol.entropy_exact &&
                      worst_block < tol.entropy_exact;
    return {"tfd_gibbs",
            pass,
            "trace distance " + fmt(worst_td) + ", S_half dev " + fmt(worst_half) +
                ", block dev " + fmt(worst_block)};
}

CriterionResult check_critical_scaling() {
    ModelParams critical{12, 1.0, 1.0, 1.0};
    std::vector<int> sites(12);
    for (int i = 0; i < 12; ++i) sites[i] = i;
    const EntropyCurve crit_curve =
        run_entropy_curve(fermionic_ground_state(critical), sites);
    const FitResult crit = critical_fit(crit_curve, FitModel::Log);

    ModelParams gapped = critical;
    gapped.lambda = 1.5;
    const EntropyCurve gap_curve =
        run_entropy_curve(fermionic_ground_state(gapped), sites);
    const FitResult gap = critical_fit(gap_curve, FitModel::Log);

    const bool pass = crit.c_fit >= tol.c_fit_low && crit.c_fit <= tol.c_fit_high &&
                      gap.r_squared_log < crit.r_squared_log;
    std::ostringstream d;
    d.precision(4);
    d << "c_fit " << crit.c_fit << ", r2_log " << crit.r_squared_log
      << " (critical) vs " << gap.r_squared_log << " (gapped)";
    return {"critical_scaling", pass, d.str()};
}

CriterionResult check_log_linear_crossover() {
    ModelParams params{8, 1.0, 1.0, 1.0};
    std::vector<int> left(8);
    for (int i = 0; i < 8; ++i) left[i] = i;

    const StateVector tfd = prepare_tfd_state(8, params, 1.0, true);
    const FitResult tfd_fit = critical_fit(run_entropy_curve(tfd, left), FitModel::Linear);

    const StateVector ground = prepare_ground_state_circuit(params);
    const FitResult gs_fit = critical_fit(run_entropy_curve(ground, left), FitModel::Log);

    const bool pass = tfd_fit.r_squared_linear >= tfd_fit.r_squared_log &&
                      gs_fit.r_squared_log >= gs_fit.r_squared_linear;
    std::ostringstream d;
    d.precision(4);
    d << "tfd r2(lin/log) " << tfd_fit.r_squared_linear << "/" << tfd_fit.r_squared_log
      << ", ground r2(log/lin) " << gs_fit.r_squared_log << "/"
      << gs_fit.r_squared_linear;
    return {"log_linear_crossover", pass, d.str()};
}

CriterionResult check_coarse_graining(unsigned long long seed) {
    ModelParams params{8, 1.0, 1.0, 1.0};
    const double cutoff = 0.25;
    std::mt19937_64 rng(seed);
    double worst_iso = 0, worst_purity = 0;
    for (int rep = 0; rep < 10; ++rep) {
        const StateVector a = random_below_cutoff_state(params, cutoff, rng);
        const StateVector b = random_below_cutoff_state(params, cutoff, rng);
        const DensityMatrix ra = coarse_grain(a, params, cutoff);
        const DensityMatrix rb = coarse_grain(b, params, cutoff);
        const double want = std::norm(a.overlap(b));
        const double got = (ra.entries() * rb.entries()).trace().real();
        worst_iso = std::max(worst_iso, std::abs(got - want));
        worst_purity = std::max(worst_purity, std::abs(ra.purity() - 1.0));
    }

    // fine-grid regression against the dense evolution oracle
    const Eigen::MatrixXcd h = build_hamiltonian(params, HamiltonianForm::Fermionic);
    const std::vector<double> times{0.0, 0.5, 1.0, 2.0, 4.0};
    const SpacetimeGrid fine = run_expz_spacetime(params, 2, times);
    double worst_grid = 0;
    for (std::size_t ti = 0; ti < times.size(); ++ti) {
        const Eigen::MatrixXcd u = hermitian_function(
            h, [&](double e) { return std::exp(cplx(0, -0.5 * e * times[ti])); });
        Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(256);
        psi(std::uint64_t{1} << (8 - 1 - 2)) = 1.0;
        psi = u * psi;
        for (int site = 0; site < 8; ++site) {
            double z = 0;
            for (Eigen::Index x = 0; x < 256; ++x) {
                const int bit = static_cast<int>((x >> (7 - site)) & 1);
                z += (bit ? -1.0 : 1.0) * std::norm(psi(x));
            }
            worst_grid = std::max(worst_grid, std::abs(fine.values[ti][site] - z));
        }
    }

    // the coarse grid must exist and stay within Z-expectation bounds
    const StateVector init = StateVector::single_excitation(8, 2);
    const SpacetimeGrid coarse = run_expz_coarse(params, cutoff, init, times);
    bool bounded = true;
    for (const auto& row : coarse.values) {
        for (double v : row) bounded = bounded && std::abs(v) <= 1.0 + 1e-9;
    }

    const bool pass = worst_iso < tol.isometry && worst_purity < tol.purity &&
                      worst_grid < tol.spectrum_match && bounded;
    return {"coarse_graining",
            pass,
            "isometry dev " + fmt(worst_iso) + ", purity dev " + fmt(worst_purity) +
                ", fine-grid dev " + fmt(worst_grid)};
}

bool run_verification(std::ostream& out, unsigned long long seed) {
    const std::vector<CriterionResult> results = {
        check_diagonalization(),    check_gate_decompositions(),
        check_fourier_dft(),        check_time_evolution(),
        check_tfd_gibbs(),          check_critical_scaling(),
        check_log_linear_crossover(), check_coarse_graining(seed),
    };
    bool all = true;
    for (const auto& r : results) {
        out << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  (" << r.detail
            << ")\n";
        all = all && r.pass;
    }
    return all;
}

}  // namespace xyc
