#pragma once

#include "qosc/matrix.hpp"

#include <string>
#include <vector>

namespace qosc {

// Ascending eigenvalues with matching orthonormal eigenvector columns.
struct Spectrum {
    Eigen::VectorXd eigenvalues;
    Matrix eigenvectors;  // column k pairs with eigenvalues[k]

    Eigen::Index dim() const { return eigenvalues.size(); }
};

enum class ReferenceModel {
    exact_ho,
    heisenberg_cubic,
    heisenberg_quartic,
    musin_susy,
};

// Closed-form reference energies evaluated per spectral index.
struct ReferenceCurve {
    ReferenceModel model = ReferenceModel::exact_ho;
    double coupling = 0.0;  // lambda for the anharmonic models, g for SUSY
    double mass = 1.0;
    double omega0 = 1.0;
    double hbar = 1.0;

    double evaluate(int index) const;
};

struct ComparisonRow {
    int index;
    double computed;
    double reference;
    double relative_error;
};

struct ComparisonReport {
    std::vector<ComparisonRow> rows;
    double threshold = 0.0;
    double fraction_within = 0.0;  // fraction of rows with error <= threshold
};

struct DensityPoint {
    double x;
    double density;
};

// |computed - reference| / max(|reference|, 1e-12).
double relative_error(double computed, double reference);

// Dense Hermitian eigendecomposition. Rejects input whose measured asymmetry
// exceeds tol * (1 + max|H|); reports solver non-convergence diagnostically.
Spectrum eigendecompose(const OperatorMatrix& h, double tol = kHermiticityTol);

// Harmonic oscillator level k + 1/2 (unit constants).
double exact_ho_energy(int k);

// Perturbative cubic-oscillator level:
// hbar w0 (k + 1/2) - (5 lambda^2 hbar^2 / (12 m w0^4)) (k^2 + k + 11/30).
double heisenberg_cubic_energy(int k, double lambda, double mass = 1.0,
                               double omega0 = 1.0, double hbar = 1.0);

// Perturbative quartic-oscillator level:
// hbar w0 (k + 1/2) + (3 lambda hbar^2 / (8 m w0^2)) (k^2 + k + 1/2)
//   - (lambda^2 hbar^2 / (64 m^2 w0^5)) (17 k^3 + 51/2 k^2 + 59/2 k + 21/2).
double heisenberg_quartic_energy(int k, double lambda, double mass = 1.0,
                                 double omega0 = 1.0, double hbar = 1.0);

// Perturbative SUSY oscillator level for boson number n_b, fermion number n_f:
// hbar w0 (n_b + n_f) + (3 hbar^2 / (4 w0^2)) g^2 (n_b^2 + n_b + 1/2)
//   - (15 hbar^2 / (4 w0^2)) g^2 (n_b^2 + n_b + 11/30).
double musin_susy_energy(int n_b, int n_f, double g, double omega0 = 1.0,
                         double hbar = 1.0);

// Relative errors of the lowest `count` eigenvalues against the reference at
// indices 0..count-1. The SUSY reference enumerates (n_b, n_f) pairs in
// ascending unperturbed energy with n_f varying fastest within ties.
ComparisonReport compare_spectrum(const Spectrum& spec,
                                  const ReferenceCurve& ref, int count,
                                  double threshold);

// (x_j, |v_k[j]|^2) pairs over the n-site lattice for eigenvector k, with the
// global phase fixed so the largest-magnitude component is real nonnegative.
std::vector<DensityPoint> wavefunction_density(const Spectrum& spec, int k,
                                               int lattice_n);

std::string to_string(ReferenceModel model);
ReferenceModel reference_model_from_string(const std::string& name);

}  // namespace qosc
