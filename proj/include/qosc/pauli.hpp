#pragma once

#include "qosc/matrix.hpp"

#include <string>
#include <vector>

namespace qosc {

struct QuantumState;  // qsim.hpp

// One Pauli string: label over {I, X, Y, Z}, leftmost letter = qubit 0 =
// slowest tensor factor, with a real weight.
struct PauliTerm {
    std::string label;
    double coefficient = 0.0;
};

// Weighted Pauli strings over q qubits; labels unique, kept in lexicographic
// order. `threshold` records the magnitude below which terms were dropped.
struct PauliSum {
    int q = 0;
    std::vector<PauliTerm> terms;
    double threshold = 0.0;
};

// Throws std::invalid_argument when labels have the wrong length/alphabet or
// repeat.
void validate(const PauliSum& sum);

// Coefficients c_P = Tr(P * H) / 2^q for every label P; terms with
// |c_P| > threshold are retained in lexicographic label order. Rejects
// dimensions that are not a power of two and non-Hermitian input.
PauliSum decompose(const OperatorMatrix& h, double threshold = 1e-12);

// Dense sum c_P * (sigma_{P[0]} (x) ... (x) sigma_{P[q-1]}).
OperatorMatrix reconstruct(const PauliSum& sum);

// <psi| sum |psi> evaluated term by term without materializing the matrix.
double pauli_expectation(const PauliSum& sum, const QuantumState& state);

}  // namespace qosc
