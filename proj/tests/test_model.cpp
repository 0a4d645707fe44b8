#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <numbers>

#include "oracles.hpp"
#include "xycirc/eig.hpp"
#include "xycirc/model.hpp"

using namespace xyc;

namespace {
constexpr double kPi = std::numbers::pi;

Eigen::MatrixXcd parity_operator(int n) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        p(i, i) = (std::popcount(static_cast<std::uint64_t>(i)) & 1) ? -1.0 : 1.0;
    }
    return p;
}
}  // namespace

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(ModelParams{3}.validate(), std::invalid_argument);
    CHECK_THROWS_AS((ModelParams{4, 1.0, 1.0, -0.5}).validate(),
                    std::invalid_argument);
    ModelParams ok{12, 1.0, 1.0, 0.0};
    CHECK_NOTHROW(ok.validate());
    CHECK_FALSE(ok.n_power_of_two());
    CHECK(ModelParams{8}.n_power_of_two());
}

TEST_CASE("momentum layout") {
    const MomentumLayout lay = MomentumLayout::canonical(8);
    for (int k = 0; k < 8; ++k) {
        CHECK(lay.label_of(lay.qubit_of(k)) == k);
        CHECK(lay.pairing(lay.pairing(k)) == k);
    }
    CHECK(lay.pairing(0) == 0);
    CHECK(lay.pairing(4) == 4);
    for (int j = 0; j + 1 < 4; ++j) {
        const int upper = lay.label_of(2 * j);
        CHECK(lay.qubit_of(lay.pairing(upper)) == 2 * j + 1);
    }
    CHECK(lay.qubit_of(0) == 6);
    CHECK(lay.qubit_of(4) == 7);
}

TEST_CASE("dispersion values") {
    ModelParams free{8, 0.0, 1.0, 1.0};
    for (double p : {0.0, 0.13, 0.5, 0.99}) {
        CHECK(dispersion(free, p) == doctest::Approx(1.0));
    }
    ModelParams crit{8, 1.0, 1.0, 1.0};
    CHECK(dispersion(crit, 0.5) == doctest::Approx(2.0));
    // 2 sin(pi/8), direct evaluation
    CHECK(dispersion(crit, 0.125) ==
          doctest::Approx(0.76536686473017945).epsilon(1e-9));
}

TEST_CASE("dispersion symmetry across the grid") {
    ModelParams params{8, 1.3, 0.7, 1.0};
    for (int k = 0; k < 8; ++k) {
        const double p = k / 8.0;
        CHECK(std::abs(dispersion(params, p) - dispersion(params, 1.0 - p)) < 1e-12);
    }
}

TEST_CASE("mixing angle values") {
    ModelParams free{8, 0.0, 1.0, 1.0};
    CHECK(bogoliubov_angle(free, 0.3) == doctest::Approx(kPi));
    ModelParams crit{8, 1.0, 1.0, 1.0};
    CHECK(bogoliubov_angle(crit, 0.25) ==
          doctest::Approx(2.3561944901923448).epsilon(1e-12));  // 3 pi / 4
    CHECK(bogoliubov_angle(crit, 0.0) == doctest::Approx(kPi));  // zero-mode limit
}

TEST_CASE("fermionic form at lambda = 0 is a counting operator") {
    ModelParams params{2, 0.0, 1.0, 1.0};
    const auto ev =
        hermitian_eigenvalues(build_hamiltonian(params, HamiltonianForm::Fermionic));
    REQUIRE(ev.size() == 4);
    CHECK(ev[0] == doctest::Approx(0.0));
    CHECK(ev[1] == doctest::Approx(1.0));
    CHECK(ev[2] == doctest::Approx(1.0));
    CHECK(ev[3] == doctest::Approx(2.0));
}

TEST_CASE("both Hamiltonian forms are Hermitian") {
    ModelParams params{4, 1.2, 0.6, 1.0};
    for (auto form : {HamiltonianForm::Pauli, HamiltonianForm::Fermionic}) {
        const Eigen::MatrixXcd h = build_hamiltonian(params, form);
        CHECK(max_abs(h - h.adjoint()) < 1e-12);
    }
}

TEST_CASE("capacity limits") {
    CHECK_THROWS_AS(build_hamiltonian(ModelParams{14}, HamiltonianForm::Fermionic),
                    std::length_error);
    CHECK_THROWS_AS(exact_spectrum(ModelParams{22}), std::length_error);
}

TEST_CASE("subset-sum spectrum") {
    ModelParams free{2, 0.0, 1.0, 1.0};
    const Spectrum s = exact_spectrum(free);
    CHECK(s.levels == std::vector<double>{0.0, 1.0, 1.0, 2.0});

    ModelParams crit{4, 1.0, 1.0, 1.0};
    const Spectrum c = exact_spectrum(crit);
    CHECK(c.levels.front() == doctest::Approx(0.0));
    // frequencies {0, sqrt 2, 2, sqrt 2}: check a few sums directly
    std::vector<double> want;
    const double r2 = std::sqrt(2.0);
    for (int b0 : {0, 1})
        for (int b1 : {0, 1})
            for (int b2 : {0, 1})
                for (int b3 : {0, 1}) want.push_back(b1 * r2 + b2 * 2.0 + b3 * r2);
    std::sort(want.begin(), want.end());
    for (std::size_t i = 0; i < want.size(); ++i) {
        CHECK(c.levels[i] == doctest::Approx(want[i]).epsilon(1e-12));
    }
}

TEST_CASE("dense spectra equal subset sums across the coupling grid") {
    for (int n : {2, 4, 8}) {
        for (auto [lambda, gamma] : std::vector<std::pair<double, double>>{
                 {0, 1}, {0.5, 1}, {1, 1}, {1.5, 1}, {1, 0.5}}) {
            ModelParams params{n, lambda, gamma, 1.0};
            auto ev = hermitian_eigenvalues(
                build_hamiltonian(params, HamiltonianForm::Fermionic));
            const double ground = ev.front();
            CHECK(std::abs(ground) < 1e-9);  // analytic shift leaves 0
            const Spectrum s = exact_spectrum(params);
            double worst = 0;
            for (std::size_t i = 0; i < ev.size(); ++i) {
                worst = std::max(worst, std::abs((ev[i] - ground) - s.levels[i]));
            }
            CHECK(worst < 1e-8);
        }
    }
}

TEST_CASE("both forms commute with global parity") {
    ModelParams params{4, 0.8, 0.9, 1.0};
    const Eigen::MatrixXcd parity = parity_operator(4);
    for (auto form : {HamiltonianForm::Pauli, HamiltonianForm::Fermionic}) {
        const Eigen::MatrixXcd h = build_hamiltonian(params, form);
        CHECK(max_abs(h * parity - parity * h) < 1e-10);
    }
}

TEST_CASE("spin and fermionic forms coincide in the decoupled limit") {
    // At lambda = 0 both are diagonal; the spin form counts flipped sites at
    // twice the energy unit, so the shifted spectra differ by that factor.
    ModelParams params{4, 0.0, 1.0, 1.0};
    const Eigen::MatrixXcd hp = build_hamiltonian(params, HamiltonianForm::Pauli);
    const Eigen::MatrixXcd hf = build_hamiltonian(params, HamiltonianForm::Fermionic);
    const double e0 = hermitian_eigenvalues(hp).front();
    CHECK(max_abs((hp - e0 * Eigen::MatrixXcd::Identity(16, 16)) - 2.0 * hf) < 1e-12);
}

TEST_CASE("term-wise application matches the dense build") {
    ModelParams params{4, 0.7, 0.6, 1.0};
    const Eigen::MatrixXcd h = build_hamiltonian(params, HamiltonianForm::Fermionic);
    std::mt19937_64 rng(7);
    const std::vector<cplx> x = oracle::random_state(4, rng);
    std::vector<cplx> y(16, cplx{0.0});
    apply_fermionic_terms(params, x, y);
    const double e0 = fermionic_ground_energy(params);
    for (int i = 0; i < 16; ++i) {
        cplx hx = 0;
        for (int j = 0; j < 16; ++j) hx += h(i, j) * x[j];
        CHECK(std::abs((y[i] - e0 * x[i]) - hx) < 1e-12);
    }
}

TEST_CASE("iterative ground state matches dense diagonalization") {
    ModelParams params{8, 0.9, 1.0, 1.0};
    const StateVector gs = fermionic_ground_state(params);
    const Eigen::MatrixXcd h = build_hamiltonian(params, HamiltonianForm::Fermionic);
    Eigen::VectorXcd v(256);
    for (int i = 0; i < 256; ++i) v(i) = gs.amplitude(i);
    const double energy = (v.adjoint() * h * v)(0).real();
    CHECK(std::abs(energy) < 1e-9);
    CHECK((h * v - energy * v).cwiseAbs().maxCoeff() < 1e-8);
    CHECK(std::abs(gs.norm_sq() - 1.0) < 1e-12);
}

TEST_CASE("critical ground state sits in the even parity sector") {
    ModelParams params{8, 1.0, 1.0, 1.0};
    const StateVector gs = fermionic_ground_state(params);
    for (std::uint64_t i = 0; i < gs.dim(); ++i) {
        if (std::popcount(i) & 1) CHECK(std::abs(gs.amplitude(i)) < 1e-12);
    }
    const Eigen::MatrixXcd h = build_hamiltonian(params, HamiltonianForm::Fermionic);
    Eigen::VectorXcd v(256);
    for (int i = 0; i < 256; ++i) v(i) = gs.amplitude(i);
    CHECK(std::abs((v.adjoint() * h * v)(0).real()) < 1e-9);
}
