#pragma once

#include <Eigen/Dense>
#include <complex>

namespace qosc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Relative tolerance for all Hermiticity checks.
inline constexpr double kHermiticityTol = 1e-12;

// Small relative-error floor: |a - b| / max(|b|, kRelativeErrorFloor).
inline constexpr double kRelativeErrorFloor = 1e-12;

// Measured asymmetry max |M(j,k) - conj(M(k,j))| over all entries.
double hermiticity_defect(const Matrix& m);

// True when the asymmetry is within rel_tol * (1 + max|M|).
bool is_hermitian(const Matrix& m, double rel_tol = kHermiticityTol);

// Dense complex square matrix with a Hermiticity tag. Construction validates
// squareness, and when the tag is set, the Hermiticity invariant
//   max |M(j,k) - conj(M(k,j))| <= 1e-12 * (1 + max|M|).
struct OperatorMatrix {
    Matrix entries;
    bool hermitian_hint = false;

    OperatorMatrix() = default;
    OperatorMatrix(Matrix m, bool hermitian);

    Eigen::Index dim() const { return entries.rows(); }
};

}  // namespace qosc
