#include "qosc/qsim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qosc {

namespace {

constexpr int kMaxSimQubits = 24;  // 2^24 amplitudes = 256 MiB; ample headroom

void require_qubit_count(int q) {
    if (q < 1 || q > kMaxSimQubits) {
        throw std::invalid_argument("qubit count " + std::to_string(q) +
                                    " outside [1, " +
                                    std::to_string(kMaxSimQubits) + "]");
    }
}

void require_qubit_index(int index, int q, const char* what) {
    if (index < 0 || index >= q) {
        throw std::invalid_argument(std::string(what) + " qubit " +
                                    std::to_string(index) +
                                    " out of range for " + std::to_string(q) +
                                    " qubits");
    }
}

// 2x2 unitary of a single-qubit gate.
void gate_matrix(const Gate& gate, Complex u[2][2]) {
    const double half = gate.theta / 2.0;
    switch (gate.kind) {
        case GateKind::rx:
            u[0][0] = {std::cos(half), 0};
            u[0][1] = {0, -std::sin(half)};
            u[1][0] = {0, -std::sin(half)};
            u[1][1] = {std::cos(half), 0};
            break;
        case GateKind::ry:
            u[0][0] = {std::cos(half), 0};
            u[0][1] = {-std::sin(half), 0};
            u[1][0] = {std::sin(half), 0};
            u[1][1] = {std::cos(half), 0};
            break;
        case GateKind::rz:
            u[0][0] = {std::cos(half), -std::sin(half)};
            u[0][1] = {0, 0};
            u[1][0] = {0, 0};
            u[1][1] = {std::cos(half), std::sin(half)};
            break;
        case GateKind::h: {
            const double s = 1.0 / std::numbers::sqrt2;
            u[0][0] = {s, 0};
            u[0][1] = {s, 0};
            u[1][0] = {s, 0};
            u[1][1] = {-s, 0};
            break;
        }
        case GateKind::x:
            u[0][0] = {0, 0};
            u[0][1] = {1, 0};
            u[1][0] = {1, 0};
            u[1][1] = {0, 0};
            break;
        case GateKind::cnot:
            throw std::logic_error("gate_matrix: CNOT is not single-qubit");
    }
}

}  // namespace

Gate rx_gate(int target, double theta) {
    return {GateKind::rx, target, -1, theta, -1};
}

Gate ry_gate(int target, double theta) {
    return {GateKind::ry, target, -1, theta, -1};
}

Gate rz_gate(int target, double theta) {
    return {GateKind::rz, target, -1, theta, -1};
}

Gate h_gate(int target) { return {GateKind::h, target, -1, 0.0, -1}; }

Gate x_gate(int target) { return {GateKind::x, target, -1, 0.0, -1}; }

Gate cnot_gate(int control, int target) {
    return {GateKind::cnot, target, control, 0.0, -1};
}

Gate ry_param_gate(int target, int param) {
    return {GateKind::ry, target, -1, 0.0, param};
}

QuantumState zero_state(int q) {
    require_qubit_count(q);
    QuantumState state;
    state.q = q;
    state.amplitudes = Vector::Zero(Eigen::Index{1} << q);
    state.amplitudes[0] = 1.0;
    return state;
}

QuantumState apply_gate(const QuantumState& state, const Gate& gate) {
    require_qubit_count(state.q);
    require_qubit_index(gate.target, state.q, "target");

    QuantumState out = state;
    const std::size_t dim = std::size_t{1} << state.q;
    // Qubit 0 is the slowest amplitude index bit.
    const std::size_t target_bit = std::size_t{1}
                                   << (state.q - 1 - gate.target);

    if (gate.kind == GateKind::cnot) {
        require_qubit_index(gate.control, state.q, "control");
        if (gate.control == gate.target) {
            throw std::invalid_argument(
                "CNOT control and target must differ, both are " +
                std::to_string(gate.target));
        }
        const std::size_t control_bit = std::size_t{1}
                                        << (state.q - 1 - gate.control);
        for (std::size_t i = 0; i < dim; ++i) {
            if ((i & control_bit) != 0 && (i & target_bit) == 0) {
                std::swap(out.amplitudes[static_cast<Eigen::Index>(i)],
                          out.amplitudes[static_cast<Eigen::Index>(
                              i | target_bit)]);
            }
        }
        return out;
    }

    Complex u[2][2];
    gate_matrix(gate, u);
    for (std::size_t i = 0; i < dim; ++i) {
        if ((i & target_bit) != 0) continue;
        const Eigen::Index i0 = static_cast<Eigen::Index>(i);
        const Eigen::Index i1 = static_cast<Eigen::Index>(i | target_bit);
        const Complex a0 = out.amplitudes[i0];
        const Complex a1 = out.amplitudes[i1];
        out.amplitudes[i0] = u[0][0] * a0 + u[0][1] * a1;
        out.amplitudes[i1] = u[1][0] * a0 + u[1][1] * a1;
    }
    return out;
}

QuantumState run_circuit(const Circuit& circuit,
                         const std::vector<double>& params) {
    if (static_cast<int>(params.size()) != circuit.n_params) {
        throw std::invalid_argument(
            "run_circuit: expected " + std::to_string(circuit.n_params) +
            " parameters, got " + std::to_string(params.size()));
    }
    QuantumState state = zero_state(circuit.q);
    for (const Gate& gate : circuit.gates) {
        if (gate.param >= 0) {
            if (gate.param >= circuit.n_params) {
                throw std::invalid_argument(
                    "run_circuit: gate binds parameter " +
                    std::to_string(gate.param) + " but the circuit has " +
                    std::to_string(circuit.n_params));
            }
            Gate bound = gate;
            bound.theta = params[static_cast<std::size_t>(gate.param)];
            state = apply_gate(state, bound);
        } else {
            state = apply_gate(state, gate);
        }
    }
    return state;
}

Circuit hardware_efficient_ansatz(const AnsatzSpec& spec) {
    require_qubit_count(spec.q);
    if (spec.depth < 0) {
        throw std::invalid_argument("ansatz depth must be >= 0, got " +
                                    std::to_string(spec.depth));
    }
    Circuit circuit;
    circuit.q = spec.q;
    circuit.n_params = spec.n_params();
    // Parameters are layer-major, qubit-minor: layer l, qubit t -> l*q + t.
    for (int t = 0; t < spec.q; ++t) {
        circuit.gates.push_back(ry_param_gate(t, t));
    }
    for (int layer = 1; layer <= spec.depth; ++layer) {
        for (int t = 0; t + 1 < spec.q; ++t) {
            circuit.gates.push_back(cnot_gate(t, t + 1));
        }
        for (int t = 0; t < spec.q; ++t) {
            circuit.gates.push_back(ry_param_gate(t, layer * spec.q + t));
        }
    }
    return circuit;
}

std::string render_circuit(const Circuit& circuit) {
    std::vector<std::string> labels(circuit.gates.size());
    for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
        const Gate& g = circuit.gates[i];
        std::ostringstream label;
        switch (g.kind) {
            case GateKind::rx: label << "RX"; break;
            case GateKind::ry: label << "RY"; break;
            case GateKind::rz: label << "RZ"; break;
            case GateKind::h: label << "H"; break;
            case GateKind::x: label << "X"; break;
            case GateKind::cnot: label << "+"; break;
        }
        if (g.kind == GateKind::rx || g.kind == GateKind::ry ||
            g.kind == GateKind::rz) {
            if (g.param >= 0) {
                label << "(t" << g.param << ")";
            } else {
                label << "(" << g.theta << ")";
            }
        }
        labels[i] = label.str();
    }

    std::vector<std::string> lines(circuit.q);
    for (int t = 0; t < circuit.q; ++t) {
        lines[t] = "q" + std::to_string(t) + ": ";
    }
    // Pad the prefixes to a common width (qubit numbers may differ in length).
    std::size_t prefix = 0;
    for (const auto& line : lines) prefix = std::max(prefix, line.size());
    for (auto& line : lines) line.resize(prefix, ' ');

    for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
        const Gate& g = circuit.gates[i];
        const std::size_t width = labels[i].size() + 2;
        for (int t = 0; t < circuit.q; ++t) {
            std::string cell;
            if (t == g.target) {
                cell = labels[i];
            } else if (g.kind == GateKind::cnot && t == g.control) {
                cell = "o";
            }
            cell.insert(0, "-");
            cell.resize(width, '-');
            lines[t] += cell;
        }
    }

    std::string out;
    for (auto& line : lines) {
        out += line;
        out += '\n';
    }
    return out;
}

}  // namespace qosc
