#pragma once

#include "qosc/matrix.hpp"

#include <string>
#include <vector>

namespace qosc {

enum class Basis { position, energy };

enum class HamiltonianKind {
    harmonic_xp,
    harmonic_ladder,
    harmonic_corrected,
    anharmonic_cubic,
    anharmonic_quartic,
    general_potential,
    susy_musin,
};

enum class AnharmonicKind { cubic, quartic };

// Full description of a Hamiltonian to build; the CLI maps flags onto this.
struct HamiltonianSpec {
    HamiltonianKind kind = HamiltonianKind::harmonic_ladder;
    Basis basis = Basis::energy;
    int n = 2;                             // bosonic dimension
    double alpha = 0.0;                    // cubic coupling
    double beta = 0.0;                     // quartic coupling
    double g = 0.0;                        // SUSY coupling
    double omega0 = 1.0;                   // SUSY base frequency
    std::vector<double> potential_coeffs;  // c_0..c_d for V(X) = sum_k c_k X^k
};

// Throws std::invalid_argument when the spec violates its invariants
// (n >= 2, omega0 > 0 for SUSY, couplings of other kinds left at zero, ...).
void validate(const HamiltonianSpec& spec);

// H = P^2/2 + X^2/2 with the chosen basis's operators.
OperatorMatrix build_harmonic_xp(Basis basis, int n);

// H = A^dag A + I/2 with the basis's ladder operator.
OperatorMatrix build_harmonic_ladder(Basis basis, int n);

// H = (X^2 + P^2 - [A, A^dag] + I)/2; in the energy basis this equals the
// ladder form identically, giving the exact k + 1/2 spectrum.
OperatorMatrix build_harmonic_corrected(Basis basis, int n);

// Harmonic core plus the anharmonic term: -coupling * X^3 (cubic) or
// +coupling * X^4 (quartic). Energy basis uses A^dag A + I/2 as the core,
// position basis uses P^2/2 + X^2/2.
OperatorMatrix build_anharmonic(Basis basis, int n, AnharmonicKind kind,
                                double coupling);

// H = P^2/2 + sum_k c_k X^k.
OperatorMatrix build_general(Basis basis, int n,
                             const std::vector<double>& potential_coeffs);

// Supersymmetric oscillator on boson dimension n_b (x) fermion dimension 2:
// H = omega0 (A~^dag A~ + I/2)
//     + (1/2) (2 omega0 g X~^3 + g^2 X~^4 + (omega0 I + 2 g X~) [C~^dag, C~])
// where tildes are the Kronecker-extended energy-basis operators. Dim 2*n_b.
OperatorMatrix build_susy_musin(int n_b, double g, double omega0);

// Dispatch over a validated spec.
OperatorMatrix build_hamiltonian(const HamiltonianSpec& spec);

// Hyphenated names used by the CLI and output directories
// ("harmonic-ladder", "susy-musin", "energy", ...).
std::string to_string(HamiltonianKind kind);
std::string to_string(Basis basis);
HamiltonianKind hamiltonian_kind_from_string(const std::string& name);
Basis basis_from_string(const std::string& name);

}  // namespace qosc
