#include "xycirc/model.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "xycirc/eig.hpp"
#include "xycirc/tolerances.hpp"

namespace xyc {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr int kDenseCap = 12;   // dense oracle scale
constexpr int kSubsetCap = 20;  // 2^n subset-sum enumeration
}  // namespace

void ModelParams::validate() const {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("n must be even and >= 2");
    if (beta < 0) throw std::invalid_argument("beta must be nonnegative");
    if (!std::isfinite(lambda) || !std::isfinite(gamma) || !std::isfinite(beta)) {
        throw std::invalid_argument("model parameters must be finite");
    }
}

bool ModelParams::n_power_of_two() const {
    return n >= 2 && std::has_single_bit(static_cast<unsigned>(n));
}

MomentumLayout MomentumLayout::canonical(int n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("layout needs even n >= 2");
    MomentumLayout lay;
    lay.n = n;
    lay.qubit_of_k.assign(n, -1);
    for (int j = 0; j + 1 < n / 2; ++j) {
        lay.qubit_of_k[j + 1] = 2 * j;          // +k on the upper wire
        lay.qubit_of_k[n - (j + 1)] = 2 * j + 1;
    }
    lay.qubit_of_k[0] = n - 2;
    lay.qubit_of_k[n / 2] = n - 1;
    return lay;
}

int MomentumLayout::label_of(int qubit) const {
    for (int k = 0; k < n; ++k) {
        if (qubit_of_k[k] == qubit) return k;
    }
    throw std::invalid_argument("qubit not in layout");
}

double dispersion(const ModelParams& params, double p) {
    const double a = 1.0 - params.lambda * std::cos(2 * kPi * p);
    const double b = params.lambda * params.gamma * std::sin(2 * kPi * p);
    return std::sqrt(a * a + b * b);
}

double bogoliubov_angle(const ModelParams& params, double p) {
    const double w = dispersion(params, p);
    if (w <= tol.zero_frequency) return kPi;  // zero mode: ordered-side limit
    double c = (-1.0 + params.lambda * std::cos(2 * kPi * p)) / w;
    c = std::clamp(c, -1.0, 1.0);
    return std::acos(c);
}

void apply_fermionic_terms(const ModelParams& params, std::span<const cplx> x,
                           std::span<cplx> y) {
    const int n = params.n;
    const std::uint64_t dim = std::uint64_t{1} << n;
    if (x.size() != dim || y.size() != dim) {
        throw std::invalid_argument("vector length must be 2^n");
    }
    const double hop = params.lambda / 2;
    const double pair = params.lambda * params.gamma / 2;
    // occupied modes cost -1 each
    for (std::uint64_t i = 0; i < dim; ++i) {
        y[i] += -static_cast<double>(std::popcount(i)) * x[i];
    }
    // bulk bonds: adjacent ladder products carry no string
    for (int q = 0; q + 1 < n; ++q) {
        const std::uint64_t m1 = std::uint64_t{1} << (n - 1 - q);
        const std::uint64_t m2 = m1 >> 1;
        for (std::uint64_t i = 0; i < dim; ++i) {
            const bool b1 = i & m1, b2 = i & m2;
            const std::uint64_t j = i ^ m1 ^ m2;
            if (b1 != b2) y[j] += hop * x[i];
            else y[j] += -pair * x[i];
        }
    }
    // wrap-around bond: the ladder product strings through the chain interior
    const std::uint64_t mfirst = std::uint64_t{1} << (n - 1);
    const std::uint64_t mlast = 1;
    const std::uint64_t interior = (dim - 1) ^ mfirst ^ mlast;
    for (std::uint64_t i = 0; i < dim; ++i) {
        const double sgn = (std::popcount(i & interior) & 1) ? -1.0 : 1.0;
        const bool b1 = i & mfirst, b2 = i & mlast;
        const std::uint64_t j = i ^ mfirst ^ mlast;
        if (b1 != b2) y[j] += hop * sgn * x[i];
        else y[j] += pair * sgn * x[i];
    }
}

double fermionic_ground_energy(const ModelParams& params) {
    // Pair blocks contribute b_p - w_p; each self-paired mode contributes
    // min(b_p, 0), with b_p = lambda cos(2 pi p) - 1.
    const int n = params.n;
    double e = 0;
    for (int k = 1; k < n / 2; ++k) {
        const double p = static_cast<double>(k) / n;
        const double b = params.lambda * std::cos(2 * kPi * p) - 1.0;
        e += b - dispersion(params, p);
    }
    e += std::min(params.lambda - 1.0, 0.0);  // p = 0
    e += -(params.lambda + 1.0);              // p = 1/2
    return e;
}

Eigen::MatrixXcd build_hamiltonian(const ModelParams& params, HamiltonianForm form) {
    params.validate();
    const int n = params.n;
    if (n > kDenseCap) throw std::length_error("dense Hamiltonian capped at n = 12");
    const auto dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
    if (form == HamiltonianForm::Fermionic) {
        std::vector<cplx> col(dim), out(dim);
        const double e0 = fermionic_ground_energy(params);
        for (Eigen::Index c = 0; c < dim; ++c) {
            std::fill(col.begin(), col.end(), cplx{0.0});
            std::fill(out.begin(), out.end(), cplx{0.0});
            col[c] = 1.0;
            apply_fermionic_terms(params, col, out);
            for (Eigen::Index r = 0; r < dim; ++r) h(r, c) = out[r];
            h(c, c) -= e0;
        }
        return h;
    }
    // Spin form: periodic XX/YY couplings, transverse field, -1/2 per site.
    const double cx = params.lambda * (1.0 + params.gamma) / 2.0;
    const double cy = params.lambda * (1.0 - params.gamma) / 2.0;
    for (int q = 0; q < n; ++q) {
        const int qn = (q + 1) % n;
        const std::uint64_t m1 = std::uint64_t{1} << (n - 1 - q);
        const std::uint64_t m2 = std::uint64_t{1} << (n - 1 - qn);
        for (Eigen::Index i = 0; i < dim; ++i) {
            const std::uint64_t u = static_cast<std::uint64_t>(i);
            const int b1 = (u & m1) ? 1 : 0, b2 = (u & m2) ? 1 : 0;
            const std::uint64_t j = u ^ m1 ^ m2;
            // X X flips both bits; Y Y flips with sign (-1)^{b1 + b2 + 1}
            h(j, i) += cx;
            h(j, i) += cy * ((b1 ^ b2) ? 1.0 : -1.0);
            h(i, i) += (b1 ? -1.0 : 1.0);  // field Z_q counted once per site q
            h(i, i) += -0.5;
        }
    }
    return h;
}

Spectrum exact_spectrum(const ModelParams& params) {
    params.validate();
    const int n = params.n;
    if (n > kSubsetCap) throw std::length_error("spectrum enumeration capped at n = 20");
    std::vector<double> w(n);
    for (int k = 0; k < n; ++k) w[k] = dispersion(params, static_cast<double>(k) / n);
    Spectrum s;
    const std::uint64_t dim = std::uint64_t{1} << n;
    s.levels.resize(dim);
    for (std::uint64_t m = 0; m < dim; ++m) {
        double e = 0;
        for (int k = 0; k < n; ++k) {
            if ((m >> k) & 1u) e += w[k];
        }
        s.levels[m] = e;
    }
    std::sort(s.levels.begin(), s.levels.end());
    return s;
}

std::vector<double> mode_energies(const ModelParams& params) {
    const MomentumLayout lay = MomentumLayout::canonical(params.n);
    std::vector<double> w(params.n);
    for (int q = 0; q < params.n; ++q) {
        w[q] = dispersion(params, static_cast<double>(lay.label_of(q)) / params.n);
    }
    return w;
}

StateVector fermionic_ground_state(const ModelParams& params) {
    params.validate();
    const int n = params.n;
    if (n > 16) throw std::length_error("ground-state solver capped at n = 16");
    const std::uint64_t dim = std::uint64_t{1} << n;

    auto apply_shifted = [&](const std::vector<cplx>& v) {
        std::vector<cplx> out(dim, cplx{0.0});
        apply_fermionic_terms(params, v, out);
        const double e0 = fermionic_ground_energy(params);
        for (std::uint64_t i = 0; i < dim; ++i) out[i] -= e0 * v[i];
        return out;
    };

    // Lanczos restricted to the even-parity sector (the Hamiltonian preserves
    // parity, so the Krylov space stays there). Full reorthogonalization.
    std::mt19937_64 rng(0x5eedULL);
    std::normal_distribution<double> gauss;
    std::vector<cplx> v(dim);
    for (std::uint64_t i = 0; i < dim; ++i) {
        v[i] = (std::popcount(i) & 1) ? cplx{0.0} : cplx(gauss(rng), gauss(rng));
    }
    auto norm_of = [&](const std::vector<cplx>& x) {
        double s = 0;
        for (const cplx& a : x) s += std::norm(a);
        return std::sqrt(s);
    };
    auto dot = [&](const std::vector<cplx>& a, const std::vector<cplx>& b) {
        cplx s = 0;
        for (std::uint64_t i = 0; i < dim; ++i) s += std::conj(a[i]) * b[i];
        return s;
    };
    {
        const double nv = norm_of(v);
        for (auto& a : v) a /= nv;
    }

    const int max_iters = 160;
    std::vector<std::vector<cplx>> basis{v};
    std::vector<double> alphas, betas;
    std::vector<cplx> w = apply_shifted(v);
    for (int it = 0; it < max_iters; ++it) {
        const double a = dot(basis.back(), w).real();
        alphas.push_back(a);
        for (std::uint64_t i = 0; i < dim; ++i) w[i] -= a * basis.back()[i];
        if (!betas.empty()) {
            const auto& prev = basis[basis.size() - 2];
            for (std::uint64_t i = 0; i < dim; ++i) w[i] -= betas.back() * prev[i];
        }
        for (const auto& u : basis) {
            const cplx c = dot(u, w);
            for (std::uint64_t i = 0; i < dim; ++i) w[i] -= c * u[i];
        }
        const double b = norm_of(w);
        if (b < 1e-13) break;
        betas.push_back(b);
        for (auto& a2 : w) a2 /= b;
        basis.push_back(w);
        w = apply_shifted(basis.back());
    }

    const auto m = static_cast<Eigen::Index>(alphas.size());
    Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        t(i, i) = alphas[i];
        if (i + 1 < m) {
            t(i, i + 1) = betas[i];
            t(i + 1, i) = betas[i];
        }
    }
    const Eigensystem es = hermitian_eigensystem(t);
    std::vector<cplx> gs(dim, cplx{0.0});
    for (Eigen::Index i = 0; i < m; ++i) {
        const cplx coef = es.vectors(i, 0);
        for (std::uint64_t j = 0; j < dim; ++j) gs[j] += coef * basis[i][j];
    }
    // scrub numerical leakage into the odd sector, then renormalize
    for (std::uint64_t i = 0; i < dim; ++i) {
        if (std::popcount(i) & 1) gs[i] = 0.0;
    }
    double nv = 0;
    for (const cplx& a : gs) nv += std::norm(a);
    nv = std::sqrt(nv);
    for (auto& a : gs) a /= nv;

    StateVector psi(n, std::move(gs));
    // convergence check: residual of the shifted Hamiltonian
    std::vector<cplx> res = apply_shifted(psi.amplitudes());
    const double e = [&] {
        cplx s = 0;
        for (std::uint64_t i = 0; i < dim; ++i) {
            s += std::conj(psi.amplitudes()[i]) * res[i];
        }
        return s.real();
    }();
    double rmax = 0;
    for (std::uint64_t i = 0; i < dim; ++i) {
        rmax = std::max(rmax, std::abs(res[i] - e * psi.amplitudes()[i]));
    }
    if (rmax > 1e-8) throw std::runtime_error("ground-state iteration did not converge");
    return psi;
}

}  // namespace xyc
