#include "xycirc/builders.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "xycirc/gates.hpp"
#include "xycirc/tolerances.hpp"

namespace xyc {

namespace {

constexpr double kPi = std::numbers::pi;

void require_power_of_two(int n, const char* what) {
    if (n < 2 || (n & (n - 1)) != 0) {
        throw std::invalid_argument(std::string(what) + " requires a power-of-two size");
    }
}

// Adjacent-transposition routing: perm[i] is the target position of the wire
// currently at position i. Emits fswaps onto circuit wires wires[q].
void route(Circuit& c, const std::vector<int>& wires, const std::vector<int>& perm) {
    std::vector<int> cur(perm);
    const int m = static_cast<int>(cur.size());
    for (int target = 0; target < m; ++target) {
        int src = -1;
        for (int i = target; i < m; ++i) {
            if (cur[i] == target) {
                src = i;
                break;
            }
        }
        for (int q = src - 1; q >= target; --q) {
            c.fswap(wires[q], wires[q + 1]);
            std::swap(cur[q], cur[q + 1]);
        }
    }
}

// Radix-2 synthesis on the wire block: input mode k of an m-mode subchain on
// wires[k], output subchain site j on wires[j - 1].
void synthesis_stage(Circuit& c, const std::vector<int>& wires) {
    const int m = static_cast<int>(wires.size());
    if (m == 1) return;
    // bring (k, k + m/2) next to each other
    std::vector<int> perm(m);
    for (int k = 0; k < m / 2; ++k) {
        perm[k] = 2 * k;
        perm[k + m / 2] = 2 * k + 1;
    }
    route(c, wires, perm);
    // butterflies combine each pair into (even-mode k, odd-mode k)
    for (int k = 0; k < m / 2; ++k) {
        c.fourier(static_cast<double>(k) / m, wires[2 * k], wires[2 * k + 1]);
    }
    // deinterleave: even modes to the top half, odd modes to the bottom
    std::vector<int> perm2(m);
    for (int k = 0; k < m / 2; ++k) {
        perm2[2 * k] = k;
        perm2[2 * k + 1] = k + m / 2;
    }
    route(c, wires, perm2);
    std::vector<int> top(wires.begin(), wires.begin() + m / 2);
    std::vector<int> bottom(wires.begin() + m / 2, wires.end());
    synthesis_stage(c, top);     // even sites 2, 4, ..., m
    synthesis_stage(c, bottom);  // odd sites 1, 3, ..., m-1
    // interleave the two site blocks back into chain order
    std::vector<int> perm3(m);
    for (int k = 0; k < m / 2; ++k) {
        perm3[k] = 2 * k + 1;          // even site 2(k+1) -> position 2k+1
        perm3[k + m / 2] = 2 * k;      // odd site 2k+1    -> position 2k
    }
    route(c, wires, perm3);
}

// 2x2 single-particle block of a vacuum-preserving two-qubit gate, ordered
// (first wire occupied, second wire occupied).
Eigen::Matrix2cd one_particle_block(const Eigen::MatrixXcd& g) {
    Eigen::Matrix2cd b;
    b << g(2, 2), g(2, 1), g(1, 2), g(1, 1);
    return b;
}

}  // namespace

Eigen::MatrixXcd single_particle_matrix(const Circuit& circuit) {
    const int n = circuit.num_qubits;
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Identity(n, n);
    for (const auto& op : circuit.ops) {
        const Eigen::MatrixXcd g = op.matrix().entries();
        if (op.arity == 1) {
            if (std::abs(g(0, 0) - cplx{1.0}) > 1e-12) {
                throw std::invalid_argument("gate does not preserve the vacuum");
            }
            s.row(op.targets[0]) *= g(1, 1);
            continue;
        }
        if (std::abs(g(0, 0) - cplx{1.0}) > 1e-12) {
            throw std::invalid_argument("gate does not preserve the vacuum");
        }
        const Eigen::Matrix2cd b = one_particle_block(g);
        const Eigen::RowVectorXcd r1 = s.row(op.targets[0]);
        const Eigen::RowVectorXcd r2 = s.row(op.targets[1]);
        s.row(op.targets[0]) = b(0, 0) * r1 + b(0, 1) * r2;
        s.row(op.targets[1]) = b(1, 0) * r1 + b(1, 1) * r2;
    }
    return s;
}

Eigen::MatrixXcd fourier_target_matrix(const MomentumLayout& layout) {
    const int n = layout.n;
    Eigen::MatrixXcd t(n, n);
    const cplx i2pi(0.0, 2.0 * kPi);
    for (int w = 0; w < n; ++w) {
        const double p = static_cast<double>(layout.label_of(w)) / n;
        for (int j = 1; j <= n; ++j) {
            t(j - 1, w) = std::exp(i2pi * p * static_cast<double>(j)) / std::sqrt(n);
        }
    }
    return t;
}

Circuit build_fourier(int n) {
    require_power_of_two(n, "fourier circuit");
    if (n > 16) throw std::invalid_argument("fourier circuit capped at n = 16");
    const MomentumLayout layout = MomentumLayout::canonical(n);

    Circuit core(n);
    // canonical layout -> ascending momentum order
    std::vector<int> wires(n), perm(n);
    for (int q = 0; q < n; ++q) {
        wires[q] = q;
        perm[q] = layout.label_of(q);
    }
    route(core, wires, perm);
    synthesis_stage(core, wires);

    // The raw recursion realizes the transform up to wire phases on both
    // ends. Factor the residue S = D_row . T . D_col and cancel it with
    // phase rotations, leaving the exact single-particle matrix.
    const Eigen::MatrixXcd s = single_particle_matrix(core);
    const Eigen::MatrixXcd t = fourier_target_matrix(layout);
    Eigen::MatrixXcd ratio = s.cwiseQuotient(t);
    Eigen::VectorXcd row = ratio.col(0);
    Eigen::VectorXcd col = ratio.row(0).transpose() / ratio(0, 0);
    if (max_abs(ratio - row * col.transpose()) > 1e-9 ||
        (ratio.cwiseAbs().array() - 1.0).abs().maxCoeff() > 1e-9) {
        throw std::logic_error("fourier phase residue is not separable");
    }

    Circuit full(n);
    for (int w = 0; w < n; ++w) {
        if (std::abs(col(w) - cplx{1.0}) > 1e-14) {
            full.phase_r(-std::arg(col(w)), w, (w + 1) % n);
        }
    }
    full.append(core);
    for (int j = 0; j < n; ++j) {
        if (std::abs(row(j) - cplx{1.0}) > 1e-14) {
            full.phase_r(-std::arg(row(j)), j, (j + 1) % n);
        }
    }
    return full;
}

Circuit build_bog_layer(const ModelParams& params, const MomentumLayout& layout) {
    params.validate();
    const int n = params.n;
    if (layout.n != n) throw std::invalid_argument("layout size mismatch");
    for (int j = 0; j + 1 < n / 2; ++j) {
        if (std::abs(layout.qubit_of(j + 1) - layout.qubit_of(n - (j + 1))) != 1) {
            throw std::invalid_argument("layout must pair opposite momenta adjacently");
        }
    }
    Circuit c(n);
    for (int j = 0; j + 1 < n / 2; ++j) {
        const double theta = bogoliubov_angle(params, static_cast<double>(j + 1) / n);
        c.bog(theta, layout.qubit_of(j + 1), layout.qubit_of(n - (j + 1)));
    }
    // Self-paired modes take no rotation partner; an occupation flip when the
    // angle saturates at pi keeps excitations counted upward from the ground
    // configuration sector by sector.
    const bool flip0 = bogoliubov_angle(params, 0.0) > kPi / 2;
    const bool fliph = bogoliubov_angle(params, 0.5) > kPi / 2;
    const Eigen::Matrix2cd x = pauli_gate(PauliAxis::X).entries();
    const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    Eigen::Matrix4cd g = Eigen::Matrix4cd::Zero();
    const Eigen::Matrix2cd a = flip0 ? x : id;
    const Eigen::Matrix2cd b = fliph ? x : id;
    for (int r1 = 0; r1 < 2; ++r1) {
        for (int c1 = 0; c1 < 2; ++c1) {
            for (int r2 = 0; r2 < 2; ++r2) {
                for (int c2 = 0; c2 < 2; ++c2) {
                    g(2 * r1 + r2, 2 * c1 + c2) = a(r1, c1) * b(r2, c2);
                }
            }
        }
    }
    c.dense_two(g, layout.qubit_of(0), layout.qubit_of(n / 2));
    return c;
}

Circuit build_udis(const ModelParams& params) {
    params.validate();
    if (!params.n_power_of_two()) {
        throw std::invalid_argument("diagonalizing circuit requires power-of-two n");
    }
    const MomentumLayout layout = MomentumLayout::canonical(params.n);
    Circuit c = build_bog_layer(params, layout);
    c.append(build_fourier(params.n));
    return c;
}

Circuit build_time_evolution(const ModelParams& params, double t) {
    params.validate();
    if (!std::isfinite(t)) throw std::invalid_argument("time must be finite");
    const std::vector<double> w = mode_energies(params);
    Circuit c(params.n);
    for (int q = 0; q < params.n; ++q) {
        c.phase_r(-w[q] * t / 2, q, (q + 1) % params.n);
    }
    return c;
}

StateVector evolve_position_state(const ModelParams& params, int site, double t) {
    if (site < 0 || site >= params.n) throw std::invalid_argument("site out of range");
    StateVector psi = StateVector::single_excitation(params.n, site);
    const Circuit udis = build_udis(params);
    Circuit seq = udis.inverted();
    seq.append(build_time_evolution(params, t));
    seq.append(udis);
    apply_circuit(seq, psi);
    return psi;
}

std::vector<int> kept_momenta(const ModelParams& params, double cutoff) {
    const int n = params.n;
    std::vector<int> kept{0, n / 2};
    for (int k = 1; k < n / 2; ++k) {
        if (static_cast<double>(k) / n < cutoff) {
            kept.push_back(k);
            kept.push_back(n - k);
        }
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

Circuit build_rg(const ModelParams& params, double cutoff) {
    params.validate();
    if (!params.n_power_of_two()) {
        throw std::invalid_argument("coarse-graining circuit requires power-of-two n");
    }
    const int n = params.n;
    const std::vector<int> kept = kept_momenta(params, cutoff);
    const int m = static_cast<int>(kept.size());
    if (m < 2 || (m & (m - 1)) != 0 || m >= n) {
        throw std::invalid_argument("cutoff must keep a power-of-two block");
    }

    Circuit c(n);
    c.append(build_fourier(n).inverted());  // position -> canonical momentum

    // Send each kept mode to the coarse chain's canonical position: label k
    // maps to k on the half grid, n - k to m - k, and the self-paired pair
    // (0, n/2) to the coarse pair (0, m/2).
    const MomentumLayout big = MomentumLayout::canonical(n);
    const MomentumLayout small = MomentumLayout::canonical(m);
    std::vector<int> perm(n, -1);
    for (int k : kept) {
        int small_label;
        if (k == 0) small_label = 0;
        else if (k == n / 2) small_label = m / 2;
        else if (k < n / 2) small_label = k;
        else small_label = m - (n - k);
        perm[big.qubit_of(k)] = small.qubit_of(small_label);
    }
    int next = m;
    for (int q = 0; q < n; ++q) {
        if (perm[q] < 0) perm[q] = next++;
    }
    std::vector<int> wires(n);
    for (int q = 0; q < n; ++q) wires[q] = q;
    route(c, wires, perm);

    c.append(build_fourier(m));  // kept block back to position space
    return c;
}

DensityMatrix coarse_grain(const StateVector& state, const ModelParams& params,
                           double cutoff) {
    if (state.num_qubits() != params.n) {
        throw std::invalid_argument("state size does not match the model");
    }
    const int m = static_cast<int>(kept_momenta(params, cutoff).size());
    StateVector psi = state;
    apply_circuit(build_rg(params, cutoff), psi);
    std::vector<int> keep(m);
    for (int q = 0; q < m; ++q) keep[q] = q;
    return partial_trace(psi, keep);
}

Circuit build_laplacian(const ModelParams& params, double beta) {
    params.validate();
    if (beta < 0) throw std::invalid_argument("beta must be nonnegative");
    const std::vector<double> w = mode_energies(params);
    Circuit c(params.n);
    // The rotation's occupied/vacuum amplitude ratio is e^{-2 x} in its
    // argument x, so half the target exponent goes into each gate.
    for (int q = 0; q < params.n; ++q) {
        c.laplace(beta / 2, w[q], q);
    }
    return c;
}

Circuit build_tfd(int m, const ModelParams& params, double beta) {
    params.validate();
    if (m != params.n) throw std::invalid_argument("mode count must match the model");
    Circuit c(2 * m);
    c.append(build_laplacian(params, beta));
    for (int q = 0; q < m; ++q) c.cnot(q, q + m);
    return c;
}

Circuit momentum_reorder_network(const MomentumLayout& from, const MomentumLayout& to) {
    if (from.n != to.n) throw std::invalid_argument("layout sizes differ");
    Circuit c(from.n);
    std::vector<int> wires(from.n), perm(from.n);
    for (int q = 0; q < from.n; ++q) {
        wires[q] = q;
        perm[q] = to.qubit_of(from.label_of(q));
    }
    route(c, wires, perm);
    return c;
}

}  // namespace xyc
