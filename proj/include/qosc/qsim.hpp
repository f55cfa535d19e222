#pragma once

#include "qosc/matrix.hpp"

#include <string>
#include <vector>

namespace qosc {

// Full statevector of a q-qubit register. Qubit 0 is the SLOWEST amplitude
// index bit (amplitude index = q0 q1 ... q_{q-1} read as binary), matching
// the leftmost-letter convention of the Pauli labels.
struct QuantumState {
    int q = 0;
    Vector amplitudes;
};

enum class GateKind { rx, ry, rz, h, x, cnot };

// One gate. Rotations either carry a fixed angle (param < 0) or bind to the
// circuit parameter vector at index `param`.
struct Gate {
    GateKind kind = GateKind::x;
    int target = 0;
    int control = -1;  // CNOT only
    double theta = 0.0;
    int param = -1;
};

struct Circuit {
    int q = 0;
    std::vector<Gate> gates;
    int n_params = 0;
};

// Hardware-efficient ansatz shape: an RY layer on every qubit, then `depth`
// repetitions of [linear CNOT chain, RY layer]. q*(depth+1) parameters.
struct AnsatzSpec {
    int q = 1;
    int depth = 0;

    int n_params() const { return q * (depth + 1); }
};

// Fixed-angle gate constructors.
Gate rx_gate(int target, double theta);
Gate ry_gate(int target, double theta);
Gate rz_gate(int target, double theta);
Gate h_gate(int target);
Gate x_gate(int target);
Gate cnot_gate(int control, int target);

// Rotation bound to parameter slot `param`.
Gate ry_param_gate(int target, int param);

QuantumState zero_state(int q);

// Returns U * state with the gate's unitary embedded on its target qubit(s).
QuantumState apply_gate(const QuantumState& state, const Gate& gate);

// Applies all gates to |0...0> with rotation parameters bound from `params`.
QuantumState run_circuit(const Circuit& circuit,
                         const std::vector<double>& params);

Circuit hardware_efficient_ansatz(const AnsatzSpec& spec);

// Text diagram: one line per qubit, gates in column order.
std::string render_circuit(const Circuit& circuit);

}  // namespace qosc
