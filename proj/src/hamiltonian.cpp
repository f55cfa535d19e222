#include "qosc/hamiltonian.hpp"

#include "qosc/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qosc {

namespace {

void require_oscillator_dim(int n, const char* what) {
    if (n < 2) {
        throw std::invalid_argument(std::string(what) +
                                    ": oscillator dimension must be >= 2, got " +
                                    std::to_string(n));
    }
}

// X and P of the requested basis.
XpPair basis_xp(Basis basis, int n) {
    if (basis == Basis::energy) {
        return xp_from_ladder(annihilation_energy(n));
    }
    return {position_operator_pos(n), momentum_operator_pos(n)};
}

Matrix matrix_power(const Matrix& m, int k) {
    Matrix result = Matrix::Identity(m.rows(), m.cols());
    for (int i = 0; i < k; ++i) result = result * m;
    return result;
}

void require_zero(double value, const char* name, const char* kind) {
    if (value != 0.0) {
        throw std::invalid_argument(std::string("HamiltonianSpec: ") + name +
                                    " is unused by kind " + kind +
                                    " and must be zero");
    }
}

}  // namespace

OperatorMatrix build_harmonic_xp(Basis basis, int n) {
    require_oscillator_dim(n, "build_harmonic_xp");
    const XpPair xp = basis_xp(basis, n);
    const Matrix& x = xp.x.entries;
    const Matrix& p = xp.p.entries;
    return {0.5 * (p * p + x * x), true};
}

OperatorMatrix build_harmonic_ladder(Basis basis, int n) {
    require_oscillator_dim(n, "build_harmonic_ladder");
    Matrix a;
    if (basis == Basis::energy) {
        a = annihilation_energy(n).entries;
    } else {
        const XpPair xp = basis_xp(Basis::position, n);
        a = ladder_from_xp(xp.x, xp.p).a.entries;
    }
    Matrix h = a.adjoint() * a + 0.5 * Matrix::Identity(n, n);
    return {std::move(h), true};
}

OperatorMatrix build_harmonic_corrected(Basis basis, int n) {
    require_oscillator_dim(n, "build_harmonic_corrected");
    const XpPair xp = basis_xp(basis, n);
    const Matrix& x = xp.x.entries;
    const Matrix& p = xp.p.entries;
    const LadderPair ladder = ladder_from_xp(xp.x, xp.p);
    const Matrix& a = ladder.a.entries;
    const Matrix& a_dag = ladder.a_dagger.entries;
    const Matrix comm = a * a_dag - a_dag * a;
    Matrix h = 0.5 * (x * x + p * p - comm + Matrix::Identity(n, n));
    return {std::move(h), true};
}

OperatorMatrix build_anharmonic(Basis basis, int n, AnharmonicKind kind,
                                double coupling) {
    require_oscillator_dim(n, "build_anharmonic");
    if (!std::isfinite(coupling)) {
        throw std::invalid_argument("build_anharmonic: coupling must be finite");
    }
    const XpPair xp = basis_xp(basis, n);
    const Matrix& x = xp.x.entries;

    Matrix core;
    if (basis == Basis::energy) {
        const Matrix a = annihilation_energy(n).entries;
        core = a.adjoint() * a + 0.5 * Matrix::Identity(n, n);
    } else {
        const Matrix& p = xp.p.entries;
        core = 0.5 * (p * p + x * x);
    }

    Matrix h;
    if (kind == AnharmonicKind::cubic) {
        h = core - coupling * matrix_power(x, 3);
    } else {
        h = core + coupling * matrix_power(x, 4);
    }
    return {std::move(h), true};
}

OperatorMatrix build_general(Basis basis, int n,
                             const std::vector<double>& potential_coeffs) {
    require_oscillator_dim(n, "build_general");
    if (potential_coeffs.empty()) {
        throw std::invalid_argument(
            "build_general: potential_coeffs must be non-empty");
    }
    for (double c : potential_coeffs) {
        if (!std::isfinite(c)) {
            throw std::invalid_argument(
                "build_general: potential coefficients must be finite");
        }
    }
    const XpPair xp = basis_xp(basis, n);
    const Matrix& x = xp.x.entries;
    const Matrix& p = xp.p.entries;

    Matrix h = 0.5 * (p * p);
    Matrix x_power = Matrix::Identity(n, n);
    for (std::size_t k = 0; k < potential_coeffs.size(); ++k) {
        if (k > 0) x_power = x_power * x;
        if (potential_coeffs[k] != 0.0) h += potential_coeffs[k] * x_power;
    }
    return {std::move(h), true};
}

OperatorMatrix build_susy_musin(int n_b, double g, double omega0) {
    require_oscillator_dim(n_b, "build_susy_musin");
    if (!(omega0 > 0.0) || !std::isfinite(omega0)) {
        throw std::invalid_argument("build_susy_musin: omega0 must be > 0");
    }
    if (!std::isfinite(g)) {
        throw std::invalid_argument("build_susy_musin: g must be finite");
    }

    // Energy-basis bosonic operators, Kronecker-extended with the fermion as
    // the trailing (fast) factor.
    const OperatorMatrix a_b = annihilation_energy(n_b);
    const XpPair xp = xp_from_ladder(a_b);
    const Matrix a = extend_bosonic(a_b, 2).entries;
    const Matrix x = extend_bosonic(xp.x, 2).entries;

    const FermionPair f = fermionic_ladder();
    const Matrix c = extend_fermionic(n_b, f.c).entries;
    const Matrix c_dag = extend_fermionic(n_b, f.c_dagger).entries;
    const Matrix fcomm = c_dag * c - c * c_dag;

    const int dim = 2 * n_b;
    const Matrix identity = Matrix::Identity(dim, dim);
    const Matrix x2 = x * x;
    const Matrix x3 = x2 * x;
    const Matrix x4 = x2 * x2;

    Matrix h = omega0 * (a.adjoint() * a + 0.5 * identity) +
               0.5 * (2.0 * omega0 * g * x3 + g * g * x4 +
                      (omega0 * identity + 2.0 * g * x) * fcomm);
    return {std::move(h), true};
}

void validate(const HamiltonianSpec& spec) {
    const std::string kind_str = to_string(spec.kind);
    const char* kind_name = kind_str.c_str();
    require_oscillator_dim(spec.n, "HamiltonianSpec");
    for (double v : {spec.alpha, spec.beta, spec.g, spec.omega0}) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument(
                "HamiltonianSpec: couplings must be finite");
        }
    }
    switch (spec.kind) {
        case HamiltonianKind::harmonic_xp:
        case HamiltonianKind::harmonic_ladder:
        case HamiltonianKind::harmonic_corrected:
            require_zero(spec.alpha, "alpha", kind_name);
            require_zero(spec.beta, "beta", kind_name);
            require_zero(spec.g, "g", kind_name);
            break;
        case HamiltonianKind::anharmonic_cubic:
            require_zero(spec.beta, "beta", kind_name);
            require_zero(spec.g, "g", kind_name);
            break;
        case HamiltonianKind::anharmonic_quartic:
            require_zero(spec.alpha, "alpha", kind_name);
            require_zero(spec.g, "g", kind_name);
            break;
        case HamiltonianKind::general_potential:
            require_zero(spec.alpha, "alpha", kind_name);
            require_zero(spec.beta, "beta", kind_name);
            require_zero(spec.g, "g", kind_name);
            if (spec.potential_coeffs.empty()) {
                throw std::invalid_argument(
                    "HamiltonianSpec: general-potential needs potential_coeffs");
            }
            break;
        case HamiltonianKind::susy_musin:
            require_zero(spec.alpha, "alpha", kind_name);
            require_zero(spec.beta, "beta", kind_name);
            if (!(spec.omega0 > 0.0)) {
                throw std::invalid_argument(
                    "HamiltonianSpec: susy-musin needs omega0 > 0");
            }
            break;
    }
    if (spec.kind != HamiltonianKind::general_potential &&
        !spec.potential_coeffs.empty()) {
        throw std::invalid_argument(
            "HamiltonianSpec: potential_coeffs only apply to general-potential");
    }
}

OperatorMatrix build_hamiltonian(const HamiltonianSpec& spec) {
    validate(spec);
    switch (spec.kind) {
        case HamiltonianKind::harmonic_xp:
            return build_harmonic_xp(spec.basis, spec.n);
        case HamiltonianKind::harmonic_ladder:
            return build_harmonic_ladder(spec.basis, spec.n);
        case HamiltonianKind::harmonic_corrected:
            return build_harmonic_corrected(spec.basis, spec.n);
        case HamiltonianKind::anharmonic_cubic:
            return build_anharmonic(spec.basis, spec.n, AnharmonicKind::cubic,
                                    spec.alpha);
        case HamiltonianKind::anharmonic_quartic:
            return build_anharmonic(spec.basis, spec.n, AnharmonicKind::quartic,
                                    spec.beta);
        case HamiltonianKind::general_potential:
            return build_general(spec.basis, spec.n, spec.potential_coeffs);
        case HamiltonianKind::susy_musin:
            return build_susy_musin(spec.n, spec.g, spec.omega0);
    }
    throw std::logic_error("build_hamiltonian: unreachable kind");
}

std::string to_string(HamiltonianKind kind) {
    switch (kind) {
        case HamiltonianKind::harmonic_xp: return "harmonic-xp";
        case HamiltonianKind::harmonic_ladder: return "harmonic-ladder";
        case HamiltonianKind::harmonic_corrected: return "harmonic-corrected";
        case HamiltonianKind::anharmonic_cubic: return "anharmonic-cubic";
        case HamiltonianKind::anharmonic_quartic: return "anharmonic-quartic";
        case HamiltonianKind::general_potential: return "general-potential";
        case HamiltonianKind::susy_musin: return "susy-musin";
    }
    throw std::logic_error("to_string: unreachable HamiltonianKind");
}

std::string to_string(Basis basis) {
    return basis == Basis::position ? "position" : "energy";
}

HamiltonianKind hamiltonian_kind_from_string(const std::string& name) {
    for (HamiltonianKind kind :
         {HamiltonianKind::harmonic_xp, HamiltonianKind::harmonic_ladder,
          HamiltonianKind::harmonic_corrected, HamiltonianKind::anharmonic_cubic,
          HamiltonianKind::anharmonic_quartic,
          HamiltonianKind::general_potential, HamiltonianKind::susy_musin}) {
        if (to_string(kind) == name) return kind;
    }
    throw std::invalid_argument("unknown Hamiltonian kind: " + name);
}

Basis basis_from_string(const std::string& name) {
    if (name == "position") return Basis::position;
    if (name == "energy") return Basis::energy;
    throw std::invalid_argument("unknown basis: " + name);
}

}  // namespace qosc
