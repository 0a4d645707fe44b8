#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "oracles.hpp"
#include "xycirc/eig.hpp"
#include "xycirc/experiments.hpp"
#include "xycirc/gates.hpp"
#include "xycirc/output.hpp"

using namespace xyc;

TEST_CASE("spacetime grid at t = 0 reads the initial configuration") {
    ModelParams params{8, 1.0, 1.0, 1.0};
    const SpacetimeGrid grid = run_expz_spacetime(params, 3, {0.0});
    for (int i = 0; i < 8; ++i) {
        CHECK(std::abs(grid.values[0][i] - (i == 3 ? -1.0 : 1.0)) < 1e-10);
    }
}

TEST_CASE("decoupled chain grid is time independent") {
    ModelParams params{8, 0.0, 1.0, 1.0};
    const SpacetimeGrid grid = run_expz_spacetime(params, 1, {0.0, 0.7, 2.5});
    for (std::size_t t = 1; t < grid.times.size(); ++t) {
        for (int i = 0; i < 8; ++i) {
            CHECK(std::abs(grid.values[t][i] - grid.values[0][i]) < 1e-9);
        }
    }
}

TEST_CASE("fine grid matches the dense evolution oracle") {
    ModelParams params{8, 1.0, 1.0, 1.0};
    const std::vector<double> times{0.5, 1.5};
    const SpacetimeGrid grid = run_expz_spacetime(params, 2, times);
    const Eigen::MatrixXcd h = build_hamiltonian(params, HamiltonianForm::Fermionic);
    for (std::size_t ti = 0; ti < times.size(); ++ti) {
        const Eigen::MatrixXcd u =
            oracle::expm_hermitian(h, cplx(0, -0.5 * times[ti]));
        Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(256);
        psi(std::uint64_t{1} << 5) = 1.0;  // site 2
        psi = u * psi;
        for (int site = 0; site < 8; ++site) {
            double z = 0;
            for (Eigen::Index x = 0; x < 256; ++x) {
                z += (((x >> (7 - site)) & 1) ? -1.0 : 1.0) * std::norm(psi(x));
            }
            CHECK(std::abs(grid.values[ti][site] - z) < 1e-8);
        }
    }
}

TEST_CASE("coarse grid basics") {
    // The empty register is stationary wherever it is an eigenstate: in the
    // decoupled limit and whenever the couplings conserve particle number.
    for (auto [lambda, gamma] :
         std::vector<std::pair<double, double>>{{0.0, 1.0}, {1.0, 0.0}}) {
        ModelParams params{8, lambda, gamma, 1.0};
        const SpacetimeGrid vac =
            run_expz_coarse(params, 0.25, StateVector(8), {0.0, 1.0, 3.0});
        for (const auto& row : vac.values) {
            for (double v : row) CHECK(std::abs(v - 1.0) < 1e-9);
        }
    }

    ModelParams params{8, 1.0, 1.0, 1.0};
    const SpacetimeGrid t0 =
        run_expz_coarse(params, 0.25, StateVector(8), {0.0});
    for (double v : t0.values[0]) CHECK(std::abs(v - 1.0) < 1e-9);

    const StateVector particle = StateVector::single_excitation(8, 2);
    const SpacetimeGrid grid =
        run_expz_coarse(params, 0.25, particle, {0.0, 0.8, 2.0});
    CHECK(grid.sites.size() == 4);
    for (const auto& row : grid.values) {
        for (double v : row) {
            CHECK(v <= 1.0 + 1e-9);
            CHECK(v >= -1.0 - 1e-9);
        }
    }
}

TEST_CASE("coarse dynamics agree with the reduced-theory oracle") {
    // A one-particle state built purely from kept momenta evolves, after the
    // reduction, exactly like a four-site chain with the inherited mode
    // frequencies. The oracle builds that evolution densely.
    ModelParams params{8, 1.0, 1.0, 1.0};
    const double cutoff = 0.25;
    const MomentumLayout lay8 = MomentumLayout::canonical(8);
    StateVector init(8);
    {
        // particle on the lowest kept pair, wire of k = 1
        StateVector mom = StateVector::single_excitation(8, lay8.qubit_of(1));
        apply_circuit(build_fourier(8), mom);
        init = mom;
    }
    const std::vector<double> times{0.0, 0.7, 3.0};
    const SpacetimeGrid grid = run_expz_coarse(params, cutoff, init, times);

    ModelParams coarse = params;
    coarse.n = 4;
    const Eigen::MatrixXcd u4 = circuit_to_unitary(build_udis(coarse), 4);
    // inherited frequencies on the coarse wires: labels (1, 3, 0, 2) on the
    // half grid map back to (1, 7, 0, 4) on the full grid
    const std::vector<double> w{dispersion(params, 1.0 / 8), dispersion(params, 7.0 / 8),
                                dispersion(params, 0.0), dispersion(params, 4.0 / 8)};
    const DensityMatrix rho0 = coarse_grain(init, params, cutoff);
    for (std::size_t ti = 0; ti < times.size(); ++ti) {
        Eigen::MatrixXcd phases = Eigen::MatrixXcd::Zero(16, 16);
        for (int x = 0; x < 16; ++x) {
            double e = 0;
            for (int q = 0; q < 4; ++q) {
                if ((x >> (3 - q)) & 1) e += w[q];
            }
            phases(x, x) = std::exp(cplx(0, -0.5 * e * times[ti]));
        }
        const Eigen::MatrixXcd evo = u4 * phases * u4.adjoint();
        const Eigen::MatrixXcd rho_t = evo * rho0.entries() * evo.adjoint();
        for (int site = 0; site < 4; ++site) {
            double z = 0;
            for (int x = 0; x < 16; ++x) {
                z += (((x >> (3 - site)) & 1) ? -1.0 : 1.0) * rho_t(x, x).real();
            }
            CHECK(std::abs(grid.values[ti][site] - z) < 1e-8);
        }
    }
}

TEST_CASE("entropy curves") {
    StateVector bells(4);
    bells.apply_one_qubit(hadamard_gate(), 0);
    bells.apply_two_qubit(cnot_gate(), 0, 2);
    bells.apply_one_qubit(hadamard_gate(), 1);
    bells.apply_two_qubit(cnot_gate(), 1, 3);
    const EntropyCurve curve = run_entropy_curve(bells, {0, 1, 2, 3});
    CHECK(curve.entropies[0] == 0.0);
    CHECK(curve.entropies[2] == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(curve.entropies[4] == doctest::Approx(0.0).epsilon(1e-9));

    ModelParams params{8, 1.0, 1.0, 1.0};
    std::vector<int> sites{0, 1, 2, 3, 4, 5, 6, 7};
    const EntropyCurve gs =
        run_entropy_curve(prepare_ground_state_circuit(params), sites);
    for (int l = 0; l <= 8; ++l) {
        CHECK(std::abs(gs.entropies[l] - gs.entropies[8 - l]) < 1e-8);
    }
    for (int l = 2; l <= 6; ++l) {  // concavity on the interior
        CHECK(gs.entropies[l] >=
              (gs.entropies[l - 1] + gs.entropies[l + 1]) / 2 - 1e-9);
    }
}

TEST_CASE("fit recovers its own model exactly") {
    EntropyCurve synth;
    const int big_l = 10;
    for (int l = 0; l <= big_l; ++l) {
        synth.lengths.push_back(l);
        const double chord =
            l == 0 || l == big_l
                ? 0.0
                : std::log2(big_l / std::numbers::pi *
                            std::sin(std::numbers::pi * l / big_l));
        synth.entropies.push_back(0.5 / 3.0 * chord + 0.3);
    }
    const FitResult fit = critical_fit(synth, FitModel::Log);
    CHECK(std::abs(fit.c_fit - 0.5) < 1e-9);
    CHECK(std::abs(fit.c1 - 0.3) < 1e-9);
    CHECK(fit.r_squared_log == doctest::Approx(1.0));

    EntropyCurve tiny;
    for (int l = 0; l <= 4; ++l) {
        tiny.lengths.push_back(l);
        tiny.entropies.push_back(0.1 * l);
    }
    CHECK_THROWS_AS(critical_fit(tiny, FitModel::Log), std::invalid_argument);
}

TEST_CASE("critical fit lands on the Ising central charge") {
    ModelParams params{12, 1.0, 1.0, 1.0};
    std::vector<int> sites(12);
    for (int i = 0; i < 12; ++i) sites[i] = i;
    const EntropyCurve curve =
        run_entropy_curve(fermionic_ground_state(params), sites);
    const FitResult fit = critical_fit(curve, FitModel::Log);
    CHECK(fit.c_fit > 0.4);
    CHECK(fit.c_fit < 0.6);
    CHECK(fit.r_squared_log > 0.999);
}

TEST_CASE("thermal oracle") {
    ModelParams params{4, 1.0, 1.0, 1.0};
    const DensityMatrix hot = thermal_state_oracle(params, 0.0, ThermalBasis::Energy);
    CHECK(max_abs(hot.entries() - Eigen::MatrixXcd::Identity(16, 16) / 16.0) < 1e-14);

    for (ThermalBasis basis : {ThermalBasis::Energy, ThermalBasis::Position}) {
        const DensityMatrix rho = thermal_state_oracle(params, 1.3, basis);
        CHECK(std::abs(rho.trace_real() - 1.0) < 1e-12);
    }
    const DensityMatrix pos = thermal_state_oracle(params, 1.3, ThermalBasis::Position);
    const Eigen::MatrixXcd h = build_hamiltonian(params, HamiltonianForm::Fermionic);
    CHECK(max_abs(pos.entries() * h - h * pos.entries()) < 1e-10);

    CHECK_THROWS_AS(thermal_state_oracle(ModelParams{12}, 1.0, ThermalBasis::Energy),
                    std::length_error);
}

TEST_CASE("thermal consistency across temperatures") {
    ModelParams params{4, 1.0, 1.0, 1.0};
    for (double beta : {0.0, 0.5, 1.0, 2.0, 10.0}) {
        const StateVector tfd = prepare_tfd_state(4, params, beta, false);
        const DensityMatrix left = partial_trace(tfd, {0, 1, 2, 3});
        const DensityMatrix want =
            thermal_state_oracle(params, beta, ThermalBasis::Energy);
        CHECK(trace_distance(left, want) < 1e-8);
    }
}

TEST_CASE("phase evolution conserves the diagonal energy") {
    ModelParams params{4, 1.0, 1.0, 1.0};
    const std::vector<double> w = mode_energies(params);
    std::mt19937_64 rng(55);
    StateVector psi(4, oracle::random_state(4, rng));
    auto energy = [&](const StateVector& s) {
        double e = 0;
        for (std::uint64_t x = 0; x < 16; ++x) {
            double ex = 0;
            for (int q = 0; q < 4; ++q) {
                if ((x >> (3 - q)) & 1) ex += w[q];
            }
            e += ex * std::norm(s.amplitude(x));
        }
        return e;
    };
    const double e0 = energy(psi);
    for (double t : {0.3, 2.0, 40.0}) {
        StateVector evolved = psi;
        apply_circuit(build_time_evolution(params, t), evolved);
        CHECK(std::abs(energy(evolved) - e0) < 1e-9);
    }
}

TEST_CASE("thermal double entropy table") {
    ModelParams params{4, 1.5, 1.0, 1.0};
    const auto rows = run_tfd_entropy_vs_beta(params, {0.0, 50.0});
    CHECK(rows[0].s_half_cut == doctest::Approx(4.0).epsilon(1e-12));
    for (int l = 0; l <= 4; ++l) {
        CHECK(std::abs(rows[0].curve.entropies[l] - l) < 1e-9);
    }
    CHECK(rows[1].s_half_cut < 1e-6);
}

TEST_CASE("thermal double trades the chord profile for a linear one") {
    ModelParams params{8, 1.0, 1.0, 1.0};
    std::vector<int> left(8);
    for (int i = 0; i < 8; ++i) left[i] = i;
    const StateVector tfd = prepare_tfd_state(8, params, 1.0, true);
    const FitResult tfd_fit =
        critical_fit(run_entropy_curve(tfd, left), FitModel::Linear);
    CHECK(tfd_fit.r_squared_linear >= tfd_fit.r_squared_log);

    const FitResult gs_fit = critical_fit(
        run_entropy_curve(prepare_ground_state_circuit(params), left), FitModel::Log);
    CHECK(gs_fit.r_squared_log >= gs_fit.r_squared_linear);
}

TEST_CASE("csv and manifest formatting") {
    const std::string csv = to_csv({"a", "b"}, {{1.0 / 3.0, 2.0}});
    CHECK(csv == "a,b\n0.33333333333333331,2\n");
    const std::string manifest = manifest_json({{"n", 8.0}}, "evolve");
    CHECK(manifest.find("\"version\"") != std::string::npos);
    CHECK(manifest.find("\"evolve\"") != std::string::npos);
    CHECK(manifest.find("\"tolerances\"") != std::string::npos);
}
