#include "qosc/operators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

namespace qosc {

namespace {

void require_positive_dim(int n, const char* what) {
    if (n < 1) {
        throw std::invalid_argument(std::string(what) +
                                    ": dimension must be >= 1, got " +
                                    std::to_string(n));
    }
}

}  // namespace

double hermiticity_defect(const Matrix& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& m, double rel_tol) {
    if (m.rows() != m.cols()) return false;
    if (m.size() == 0) return true;
    const double scale = 1.0 + m.cwiseAbs().maxCoeff();
    return hermiticity_defect(m) <= rel_tol * scale;
}

OperatorMatrix::OperatorMatrix(Matrix m, bool hermitian)
    : entries(std::move(m)), hermitian_hint(hermitian) {
    if (entries.rows() != entries.cols()) {
        throw std::invalid_argument(
            "operator matrix must be square, got " +
            std::to_string(entries.rows()) + "x" +
            std::to_string(entries.cols()));
    }
    if (hermitian_hint && !is_hermitian(entries)) {
        throw std::invalid_argument(
            "matrix marked Hermitian has asymmetry " +
            std::to_string(hermiticity_defect(entries)));
    }
}

double lattice_index(int a, int n) {
    require_positive_dim(n, "lattice_index");
    if (a < 1 || a > n) {
        throw std::invalid_argument("lattice_index: site " + std::to_string(a) +
                                    " outside [1, " + std::to_string(n) + "]");
    }
    // 2a - 1 - n is an exact integer; halving it is exact in binary floating
    // point, so the half-integer site values carry no rounding error.
    return static_cast<double>(2 * a - 1 - n) / 2.0;
}

OperatorMatrix position_operator_pos(int n) {
    require_positive_dim(n, "position_operator_pos");
    const double scale = std::sqrt(2.0 * std::numbers::pi / n);
    Matrix x = Matrix::Zero(n, n);
    for (int j = 1; j <= n; ++j) {
        x(j - 1, j - 1) = scale * lattice_index(j, n);
    }
    return {std::move(x), true};
}

OperatorMatrix fourier_matrix(int n) {
    require_positive_dim(n, "fourier_matrix");
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    const double step = 2.0 * std::numbers::pi / n;
    Matrix f(n, n);
    for (int j = 1; j <= n; ++j) {
        for (int k = 1; k <= n; ++k) {
            const double phase = step * lattice_index(j, n) * lattice_index(k, n);
            f(j - 1, k - 1) = norm * Complex(std::cos(phase), std::sin(phase));
        }
    }
    return {std::move(f), false};
}

OperatorMatrix momentum_operator_pos(int n) {
    const Matrix f = fourier_matrix(n).entries;
    const Matrix x = position_operator_pos(n).entries;
    return {f.adjoint() * x * f, true};
}

OperatorMatrix annihilation_energy(int n) {
    require_positive_dim(n, "annihilation_energy");
    Matrix a = Matrix::Zero(n, n);
    for (int j = 1; j < n; ++j) {
        a(j - 1, j) = std::sqrt(static_cast<double>(j));
    }
    return {std::move(a), false};
}

XpPair xp_from_ladder(const OperatorMatrix& a) {
    const Matrix& m = a.entries;
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    Matrix x = inv_sqrt2 * (m.adjoint() + m);
    Matrix p = Complex(0, 1) * inv_sqrt2 * (Matrix(m.adjoint()) - m);
    return {OperatorMatrix(std::move(x), true), OperatorMatrix(std::move(p), true)};
}

LadderPair ladder_from_xp(const OperatorMatrix& x, const OperatorMatrix& p) {
    if (x.dim() != p.dim()) {
        throw std::invalid_argument(
            "ladder_from_xp: dimension mismatch " + std::to_string(x.dim()) +
            " vs " + std::to_string(p.dim()));
    }
    if (!is_hermitian(x.entries) || !is_hermitian(p.entries)) {
        throw std::invalid_argument("ladder_from_xp: inputs must be Hermitian");
    }
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    Matrix a = inv_sqrt2 * (x.entries + Complex(0, 1) * p.entries);
    Matrix a_dag = inv_sqrt2 * (x.entries - Complex(0, 1) * p.entries);
    return {OperatorMatrix(std::move(a), false),
            OperatorMatrix(std::move(a_dag), false)};
}

OperatorMatrix traceless_identity(int n) {
    require_positive_dim(n, "traceless_identity");
    Matrix m = Matrix::Identity(n, n);
    m(n - 1, n - 1) = -static_cast<double>(n - 1);
    return {std::move(m), true};
}

FermionPair fermionic_ladder() {
    Matrix c = Matrix::Zero(2, 2);
    c(0, 1) = 1.0;
    Matrix c_dag = Matrix::Zero(2, 2);
    c_dag(1, 0) = 1.0;
    return {OperatorMatrix(std::move(c), false),
            OperatorMatrix(std::move(c_dag), false)};
}

OperatorMatrix extend_bosonic(const OperatorMatrix& op_b, int dim_f) {
    require_positive_dim(dim_f, "extend_bosonic");
    Matrix ext = Eigen::kroneckerProduct(op_b.entries,
                                         Matrix::Identity(dim_f, dim_f));
    return {std::move(ext), op_b.hermitian_hint};
}

OperatorMatrix extend_fermionic(int dim_b, const OperatorMatrix& op_f) {
    require_positive_dim(dim_b, "extend_fermionic");
    Matrix ext = Eigen::kroneckerProduct(Matrix::Identity(dim_b, dim_b),
                                         op_f.entries);
    return {std::move(ext), op_f.hermitian_hint};
}

}  // namespace qosc
