#include "qosc/pauli.hpp"

#include "qosc/qsim.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace qosc {

namespace {

constexpr int kMaxQubits = 12;
const char kLetters[4] = {'I', 'X', 'Y', 'Z'};

int letter_code(char c) {
    switch (c) {
        case 'I': return 0;
        case 'X': return 1;
        case 'Y': return 2;
        case 'Z': return 3;
    }
    return -1;
}

// Every Pauli string has exactly one nonzero entry per row. For row index
// `row` the nonzero column and its value are built per qubit from the row
// bit: I keeps the bit (factor 1), X flips it (factor 1), Y flips it
// (factor -i for bit 0, +i for bit 1), Z keeps it (factor +1/-1).
// Qubit 0 is the leftmost label letter and the MOST significant index bit.
struct RowAction {
    std::size_t column;
    Complex factor;
};

RowAction pauli_row(const std::string& label, std::size_t row) {
    const int q = static_cast<int>(label.size());
    std::size_t column = row;
    Complex factor(1.0, 0.0);
    for (int t = 0; t < q; ++t) {
        const std::size_t bit = std::size_t{1} << (q - 1 - t);
        const bool set = (row & bit) != 0;
        switch (label[t]) {
            case 'I':
                break;
            case 'X':
                column ^= bit;
                break;
            case 'Y':
                column ^= bit;
                factor *= set ? Complex(0, 1) : Complex(0, -1);
                break;
            case 'Z':
                if (set) factor = -factor;
                break;
        }
    }
    return {column, factor};
}

std::string label_from_index(std::size_t index, int q) {
    std::string label(q, 'I');
    for (int t = q - 1; t >= 0; --t) {
        label[t] = kLetters[index & 3];
        index >>= 2;
    }
    return label;
}

int qubit_count_for_dim(Eigen::Index dim) {
    if (dim < 2 || (dim & (dim - 1)) != 0) {
        throw std::invalid_argument(
            "dimension " + std::to_string(dim) +
            " is not a power of two (2^q with q >= 1)");
    }
    int q = 0;
    for (Eigen::Index d = dim; d > 1; d >>= 1) ++q;
    if (q > kMaxQubits) {
        throw std::invalid_argument("dimension " + std::to_string(dim) +
                                    " exceeds the " +
                                    std::to_string(kMaxQubits) +
                                    "-qubit decomposition limit");
    }
    return q;
}

}  // namespace

void validate(const PauliSum& sum) {
    if (sum.q < 1) {
        throw std::invalid_argument("PauliSum: q must be >= 1");
    }
    std::unordered_set<std::string> seen;
    for (const PauliTerm& term : sum.terms) {
        if (static_cast<int>(term.label.size()) != sum.q) {
            throw std::invalid_argument("PauliSum: label '" + term.label +
                                        "' does not have length " +
                                        std::to_string(sum.q));
        }
        for (char c : term.label) {
            if (letter_code(c) < 0) {
                throw std::invalid_argument("PauliSum: label '" + term.label +
                                            "' has letters outside {I,X,Y,Z}");
            }
        }
        if (!seen.insert(term.label).second) {
            throw std::invalid_argument("PauliSum: duplicate label '" +
                                        term.label + "'");
        }
        if (!std::isfinite(term.coefficient)) {
            throw std::invalid_argument("PauliSum: coefficient of '" +
                                        term.label + "' is not finite");
        }
    }
}

PauliSum decompose(const OperatorMatrix& h, double threshold) {
    const int q = qubit_count_for_dim(h.dim());
    if (!is_hermitian(h.entries)) {
        throw std::invalid_argument(
            "decompose: input is not Hermitian (asymmetry " +
            std::to_string(hermiticity_defect(h.entries)) + ")");
    }
    if (threshold < 0.0 || !std::isfinite(threshold)) {
        throw std::invalid_argument("decompose: threshold must be >= 0");
    }

    const std::size_t dim = std::size_t{1} << q;
    const std::size_t n_labels = std::size_t{1} << (2 * q);
    const double imag_tol = 1e-10 * (1.0 + h.entries.cwiseAbs().maxCoeff());

    PauliSum sum;
    sum.q = q;
    sum.threshold = threshold;

    // Label indices count in base 4 over I<X<Y<Z, which is exactly
    // lexicographic label order.
    for (std::size_t li = 0; li < n_labels; ++li) {
        const std::string label = label_from_index(li, q);
        Complex trace(0.0, 0.0);
        for (std::size_t row = 0; row < dim; ++row) {
            const RowAction act = pauli_row(label, row);
            // (P*H)(row,row) = P(row, col) * H(col, row)
            trace += act.factor *
                     h.entries(static_cast<Eigen::Index>(act.column),
                               static_cast<Eigen::Index>(row));
        }
        const Complex coeff = trace / static_cast<double>(dim);
        if (std::abs(coeff.imag()) > imag_tol) {
            throw std::invalid_argument(
                "decompose: coefficient of '" + label +
                "' has imaginary part " + std::to_string(coeff.imag()) +
                " (non-Hermitian input?)");
        }
        if (std::abs(coeff.real()) > threshold) {
            sum.terms.push_back({label, coeff.real()});
        }
    }
    return sum;
}

OperatorMatrix reconstruct(const PauliSum& sum) {
    validate(sum);
    const std::size_t dim = std::size_t{1} << sum.q;
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim),
                            static_cast<Eigen::Index>(dim));
    for (const PauliTerm& term : sum.terms) {
        for (std::size_t row = 0; row < dim; ++row) {
            const RowAction act = pauli_row(term.label, row);
            m(static_cast<Eigen::Index>(row),
              static_cast<Eigen::Index>(act.column)) +=
                term.coefficient * act.factor;
        }
    }
    return {std::move(m), true};
}

double pauli_expectation(const PauliSum& sum, const QuantumState& state) {
    validate(sum);
    if (sum.q != state.q) {
        throw std::invalid_argument(
            "pauli_expectation: sum has " + std::to_string(sum.q) +
            " qubits but state has " + std::to_string(state.q));
    }
    const std::size_t dim = std::size_t{1} << sum.q;
    double total = 0.0;
    for (const PauliTerm& term : sum.terms) {
        Complex acc(0.0, 0.0);
        for (std::size_t row = 0; row < dim; ++row) {
            const RowAction act = pauli_row(term.label, row);
            // <psi|P|psi> accumulates conj(psi_row) * P(row, col) * psi_col.
            acc += std::conj(state.amplitudes[static_cast<Eigen::Index>(row)]) *
                   act.factor *
                   state.amplitudes[static_cast<Eigen::Index>(act.column)];
        }
        // Pauli strings are Hermitian, so the expectation is real up to
        // rounding noise.
        total += term.coefficient * acc.real();
    }
    return total;
}

}  // namespace qosc
