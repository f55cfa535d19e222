#pragma once

#include "qosc/matrix.hpp"

namespace qosc {

// Centered lattice index: site a of an n-site lattice sits at (2a - 1 - n)/2,
// so the sites run over -(n-1)/2, ..., (n-1)/2 in unit steps. 1-based a.
double lattice_index(int a, int n);

// Diagonal position operator in the position basis:
// X(j,j) = sqrt(2*pi/n) * lattice_index(j, n).
OperatorMatrix position_operator_pos(int n);

// Centered discrete Fourier matrix:
// F(j,k) = (1/sqrt(n)) * exp((2*pi*i/n) * l(j) * l(k)).  Unitary.
OperatorMatrix fourier_matrix(int n);

// Momentum in the position basis by Fourier conjugation: P = F^dag X F.
OperatorMatrix momentum_operator_pos(int n);

// Energy-basis annihilation operator: superdiagonal sqrt(1), ..., sqrt(n-1).
OperatorMatrix annihilation_energy(int n);

struct XpPair {
    OperatorMatrix x;
    OperatorMatrix p;
};

struct LadderPair {
    OperatorMatrix a;
    OperatorMatrix a_dagger;
};

struct FermionPair {
    OperatorMatrix c;
    OperatorMatrix c_dagger;
};

// X = (A^dag + A)/sqrt(2), P = i(A^dag - A)/sqrt(2).
XpPair xp_from_ladder(const OperatorMatrix& a);

// A = (X + iP)/sqrt(2), A^dag = (X - iP)/sqrt(2). Inverse of xp_from_ladder.
LadderPair ladder_from_xp(const OperatorMatrix& x, const OperatorMatrix& p);

// diag(1, 1, ..., 1, -(n-1)); equals the commutator [A, A^dag] of the
// energy-basis annihilation operator. Trace is exactly zero.
OperatorMatrix traceless_identity(int n);

// Two-state fermionic ladder pair C = [[0,1],[0,0]], C^dag = [[0,0],[1,0]].
FermionPair fermionic_ladder();

// Kronecker extension O_B (x) I_F; the fermion index varies fastest.
OperatorMatrix extend_bosonic(const OperatorMatrix& op_b, int dim_f);

// Kronecker extension I_B (x) O_F.
OperatorMatrix extend_fermionic(int dim_b, const OperatorMatrix& op_f);

}  // namespace qosc
