#include "xycirc/circuit.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "xycirc/gates.hpp"
#include "xycirc/output.hpp"

namespace xyc {

namespace {

void check_finite(const std::vector<double>& params) {
    for (double p : params) {
        if (!std::isfinite(p)) throw std::invalid_argument("gate parameter not finite");
    }
}

const char* kind_name(GateKind k) {
    switch (k) {
        case GateKind::Fourier: return "fourier";
        case GateKind::Bog: return "bog";
        case GateKind::Fswap: return "fswap";
        case GateKind::PhaseR: return "phase_r";
        case GateKind::Laplace: return "laplace";
        case GateKind::Cnot: return "cnot";
        case GateKind::Hadamard: return "h";
        case GateKind::SGate: return "s";
        case GateKind::SdagGate: return "sdag";
        case GateKind::Zrot: return "zrot";
        case GateKind::Dense1: return "dense1";
        case GateKind::Dense2: return "dense2";
    }
    return "?";
}

}  // namespace

GateMatrix GateOp::matrix() const {
    auto base = [&]() -> GateMatrix {
        switch (kind) {
            case GateKind::Fourier: return fourier_gate(params[0]);
            case GateKind::Bog: return bog_gate(params[0]);
            case GateKind::Fswap: return fswap_gate();
            case GateKind::PhaseR: return phase_gate_r(params[0]);
            case GateKind::Laplace: return laplace_gate(params[0], params[1]);
            case GateKind::Cnot: return cnot_gate();
            case GateKind::Hadamard: return hadamard_gate();
            case GateKind::SGate: return s_gate();
            case GateKind::SdagGate: return sdag_gate();
            case GateKind::Zrot: return zrot_gate(params[0]);
            case GateKind::Dense1:
            case GateKind::Dense2: return GateMatrix(dense);
        }
        throw std::logic_error("unknown gate kind");
    }();
    return adjoint ? base.adjoint() : base;
}

GateOp GateOp::inverted() const {
    GateOp inv = *this;
    switch (kind) {
        case GateKind::Fourier: inv.adjoint = !adjoint; break;
        case GateKind::Bog:
        case GateKind::PhaseR:
        case GateKind::Zrot: inv.params[0] = -params[0]; break;
        case GateKind::Fswap:
        case GateKind::Laplace:
        case GateKind::Cnot:
        case GateKind::Hadamard: break;  // self-inverse
        case GateKind::SGate: inv.kind = GateKind::SdagGate; break;
        case GateKind::SdagGate: inv.kind = GateKind::SGate; break;
        case GateKind::Dense1:
        case GateKind::Dense2: inv.dense = dense.adjoint(); break;
    }
    return inv;
}

void Circuit::push(GateOp op) {
    check_finite(op.params);
    if (op.targets[0] < 0 || op.targets[0] >= num_qubits ||
        (op.arity == 2 &&
         (op.targets[1] < 0 || op.targets[1] >= num_qubits ||
          op.targets[1] == op.targets[0]))) {
        throw std::invalid_argument("gate targets out of range or not distinct");
    }
    ops.push_back(std::move(op));
}

void Circuit::fourier(double p, int q1, int q2) {
    push({GateKind::Fourier, {p}, {q1, q2}, 2, false, {}});
}
void Circuit::bog(double theta, int q1, int q2) {
    push({GateKind::Bog, {theta}, {q1, q2}, 2, false, {}});
}
void Circuit::fswap(int q1, int q2) { push({GateKind::Fswap, {}, {q1, q2}, 2, false, {}}); }
void Circuit::phase_r(double theta, int q1, int q2) {
    push({GateKind::PhaseR, {theta}, {q1, q2}, 2, false, {}});
}
void Circuit::laplace(double beta, double w, int q) {
    push({GateKind::Laplace, {beta, w}, {q, -1}, 1, false, {}});
}
void Circuit::cnot(int control, int target) {
    push({GateKind::Cnot, {}, {control, target}, 2, false, {}});
}
void Circuit::hadamard(int q) { push({GateKind::Hadamard, {}, {q, -1}, 1, false, {}}); }
void Circuit::s_gate(int q) { push({GateKind::SGate, {}, {q, -1}, 1, false, {}}); }
void Circuit::sdag_gate(int q) { push({GateKind::SdagGate, {}, {q, -1}, 1, false, {}}); }
void Circuit::zrot(double alpha, int q) {
    push({GateKind::Zrot, {alpha}, {q, -1}, 1, false, {}});
}
void Circuit::dense_one(const Eigen::MatrixXcd& u, int q) {
    GateOp op{GateKind::Dense1, {}, {q, -1}, 1, false, {}};
    op.dense = u;
    push(std::move(op));
}
void Circuit::dense_two(const Eigen::MatrixXcd& u, int q1, int q2) {
    GateOp op{GateKind::Dense2, {}, {q1, q2}, 2, false, {}};
    op.dense = u;
    push(std::move(op));
}

Circuit Circuit::inverted() const {
    Circuit inv(num_qubits);
    inv.ops.reserve(ops.size());
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        inv.ops.push_back(it->inverted());
    }
    return inv;
}

void Circuit::append(const Circuit& other, int offset) {
    for (GateOp op : other.ops) {
        op.targets[0] += offset;
        if (op.arity == 2) op.targets[1] += offset;
        push(std::move(op));
    }
}

std::size_t Circuit::count_kind(GateKind k) const {
    std::size_t c = 0;
    for (const auto& op : ops) c += op.kind == k;
    return c;
}

void apply_circuit(const Circuit& circuit, StateVector& psi) {
    if (psi.num_qubits() < circuit.num_qubits) {
        throw std::invalid_argument("state is smaller than the circuit");
    }
    for (const auto& op : circuit.ops) {
        const GateMatrix g = op.matrix();
        if (op.arity == 1) psi.apply_one_qubit(g, op.targets[0]);
        else psi.apply_two_qubit(g, op.targets[0], op.targets[1]);
    }
}

void apply_circuit(const Circuit& circuit, DensityMatrix& rho) {
    if (rho.num_qubits() < circuit.num_qubits) {
        throw std::invalid_argument("state is smaller than the circuit");
    }
    for (const auto& op : circuit.ops) {
        const GateMatrix g = op.matrix();
        if (op.arity == 1) rho.apply_one_qubit(g, op.targets[0]);
        else rho.apply_two_qubit(g, op.targets[0], op.targets[1]);
    }
}

Eigen::MatrixXcd circuit_to_unitary(const Circuit& circuit, int n) {
    for (const auto& op : circuit.ops) {
        if (op.targets[0] >= n || (op.arity == 2 && op.targets[1] >= n)) {
            throw std::invalid_argument("circuit target exceeds qubit count");
        }
    }
    const auto dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd u(dim, dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
        StateVector e = StateVector::basis_state(n, static_cast<std::uint64_t>(c));
        Circuit widened = circuit;
        widened.num_qubits = n;
        apply_circuit(widened, e);
        for (Eigen::Index r = 0; r < dim; ++r) {
            u(r, c) = e.amplitude(static_cast<std::uint64_t>(r));
        }
    }
    return u;
}

std::string serialize_circuit(const Circuit& circuit) {
    std::ostringstream out;
    out << "qubits " << circuit.num_qubits << "\n";
    for (const auto& op : circuit.ops) {
        out << kind_name(op.kind);
        if (op.adjoint) out << "_dag";
        for (double p : op.params) out << ' ' << format_double(p);
        if (op.kind == GateKind::Dense1 || op.kind == GateKind::Dense2) {
            for (Eigen::Index r = 0; r < op.dense.rows(); ++r) {
                for (Eigen::Index c = 0; c < op.dense.cols(); ++c) {
                    out << ' ' << format_double(op.dense(r, c).real()) << ' '
                        << format_double(op.dense(r, c).imag());
                }
            }
        }
        out << ' ' << op.targets[0];
        if (op.arity == 2) out << ' ' << op.targets[1];
        out << "\n";
    }
    return out.str();
}

Circuit parse_circuit(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Circuit circuit(0);
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string kind;
        ls >> kind;
        if (!have_header) {
            if (kind != "qubits") throw std::invalid_argument("missing qubits header");
            ls >> circuit.num_qubits;
            if (circuit.num_qubits < 1) throw std::invalid_argument("bad qubit count");
            have_header = true;
            continue;
        }
        bool adjoint = false;
        if (kind.size() > 4 && kind.ends_with("_dag")) {
            adjoint = true;
            kind = kind.substr(0, kind.size() - 4);
        }
        auto read_op = [&](GateKind k, int nparams, int arity) {
            GateOp op{k, {}, {-1, -1}, arity, adjoint, {}};
            for (int i = 0; i < nparams; ++i) {
                double v;
                ls >> v;
                op.params.push_back(v);
            }
            if (k == GateKind::Dense1 || k == GateKind::Dense2) {
                const int d = arity == 1 ? 2 : 4;
                op.dense.resize(d, d);
                for (int r = 0; r < d; ++r) {
                    for (int c = 0; c < d; ++c) {
                        double re, im;
                        ls >> re >> im;
                        op.dense(r, c) = cplx(re, im);
                    }
                }
            }
            ls >> op.targets[0];
            if (arity == 2) ls >> op.targets[1];
            if (!ls) throw std::invalid_argument("malformed gate line: " + line);
            circuit.push(std::move(op));
        };
        if (kind == "fourier") read_op(GateKind::Fourier, 1, 2);
        else if (kind == "bog") read_op(GateKind::Bog, 1, 2);
        else if (kind == "fswap") read_op(GateKind::Fswap, 0, 2);
        else if (kind == "phase_r") read_op(GateKind::PhaseR, 1, 2);
        else if (kind == "laplace") read_op(GateKind::Laplace, 2, 1);
        else if (kind == "cnot") read_op(GateKind::Cnot, 0, 2);
        else if (kind == "h") read_op(GateKind::Hadamard, 0, 1);
        else if (kind == "s") read_op(GateKind::SGate, 0, 1);
        else if (kind == "sdag") read_op(GateKind::SdagGate, 0, 1);
        else if (kind == "zrot") read_op(GateKind::Zrot, 1, 1);
        else if (kind == "dense1") read_op(GateKind::Dense1, 0, 1);
        else if (kind == "dense2") read_op(GateKind::Dense2, 0, 2);
        else throw std::invalid_argument("unknown gate kind: " + kind);
    }
    if (!have_header) throw std::invalid_argument("empty circuit text");
    return circuit;
}

}  // namespace xyc
