#include "qosc/spectra.hpp"

#include "qosc/operators.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qosc {

namespace {

// Spectral index -> (n_b, n_f) in ascending unperturbed energy n_b + n_f,
// with n_f varying fastest within each degenerate pair:
// (0,0), (1,0), (0,1), (2,0), (1,1), (3,0), (2,1), ...
std::pair<int, int> susy_level(int index) {
    if (index == 0) return {0, 0};
    const int i = index - 1;
    const int total = i / 2 + 1;
    const int n_f = i % 2;
    return {total - n_f, n_f};
}

}  // namespace

double relative_error(double computed, double reference) {
    return std::abs(computed - reference) /
           std::max(std::abs(reference), kRelativeErrorFloor);
}

Spectrum eigendecompose(const OperatorMatrix& h, double tol) {
    if (h.dim() < 1) {
        throw std::invalid_argument("eigendecompose: empty matrix");
    }
    if (!is_hermitian(h.entries, tol)) {
        std::ostringstream msg;
        msg << "eigendecompose: matrix is not Hermitian; measured asymmetry "
            << hermiticity_defect(h.entries) << " exceeds tolerance " << tol
            << " * (1 + max|H|)";
        throw std::invalid_argument(msg.str());
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h.entries);
    if (solver.info() != Eigen::Success) {
        std::ostringstream msg;
        msg << "eigendecompose: iterative reduction failed to converge within "
            << Eigen::SelfAdjointEigenSolver<Matrix>::m_maxIterations
            << " sweeps per off-diagonal element (dim " << h.dim() << ")";
        throw std::runtime_error(msg.str());
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

double exact_ho_energy(int k) {
    if (k < 0) throw std::invalid_argument("exact_ho_energy: k must be >= 0");
    return k + 0.5;
}

double heisenberg_cubic_energy(int k, double lambda, double mass,
                               double omega0, double hbar) {
    if (k < 0) {
        throw std::invalid_argument("heisenberg_cubic_energy: k must be >= 0");
    }
    if (!(mass > 0.0) || !(omega0 > 0.0) || !(hbar > 0.0)) {
        throw std::invalid_argument(
            "heisenberg_cubic_energy: mass, omega0, hbar must be > 0");
    }
    const double kk = static_cast<double>(k);
    return hbar * omega0 * (kk + 0.5) -
           (5.0 * lambda * lambda * hbar * hbar /
            (12.0 * mass * std::pow(omega0, 4))) *
               (kk * kk + kk + 11.0 / 30.0);
}

double heisenberg_quartic_energy(int k, double lambda, double mass,
                                 double omega0, double hbar) {
    if (k < 0) {
        throw std::invalid_argument("heisenberg_quartic_energy: k must be >= 0");
    }
    if (!(mass > 0.0) || !(omega0 > 0.0) || !(hbar > 0.0)) {
        throw std::invalid_argument(
            "heisenberg_quartic_energy: mass, omega0, hbar must be > 0");
    }
    const double kk = static_cast<double>(k);
    return hbar * omega0 * (kk + 0.5) +
           (3.0 * lambda * hbar * hbar / (8.0 * mass * omega0 * omega0)) *
               (kk * kk + kk + 0.5) -
           (lambda * lambda * hbar * hbar /
            (64.0 * mass * mass * std::pow(omega0, 5))) *
               (17.0 * kk * kk * kk + 25.5 * kk * kk + 29.5 * kk + 10.5);
}

double musin_susy_energy(int n_b, int n_f, double g, double omega0,
                         double hbar) {
    if (n_b < 0) {
        throw std::invalid_argument("musin_susy_energy: n_b must be >= 0");
    }
    if (n_f != 0 && n_f != 1) {
        throw std::invalid_argument("musin_susy_energy: n_f must be 0 or 1, got " +
                                    std::to_string(n_f));
    }
    if (!(omega0 > 0.0)) {
        throw std::invalid_argument("musin_susy_energy: omega0 must be > 0");
    }
    const double nb = static_cast<double>(n_b);
    const double quad = hbar * hbar * g * g / (4.0 * omega0 * omega0);
    return hbar * omega0 * (nb + n_f) + 3.0 * quad * (nb * nb + nb + 0.5) -
           15.0 * quad * (nb * nb + nb + 11.0 / 30.0);
}

double ReferenceCurve::evaluate(int index) const {
    switch (model) {
        case ReferenceModel::exact_ho:
            return hbar * omega0 * exact_ho_energy(index);
        case ReferenceModel::heisenberg_cubic:
            return heisenberg_cubic_energy(index, coupling, mass, omega0, hbar);
        case ReferenceModel::heisenberg_quartic:
            return heisenberg_quartic_energy(index, coupling, mass, omega0,
                                             hbar);
        case ReferenceModel::musin_susy: {
            const auto [n_b, n_f] = susy_level(index);
            return musin_susy_energy(n_b, n_f, coupling, omega0, hbar);
        }
    }
    throw std::logic_error("ReferenceCurve: unreachable model");
}

ComparisonReport compare_spectrum(const Spectrum& spec,
                                  const ReferenceCurve& ref, int count,
                                  double threshold) {
    if (count < 1) {
        throw std::invalid_argument("compare_spectrum: count must be >= 1");
    }
    if (count > spec.dim()) {
        throw std::invalid_argument(
            "compare_spectrum: count " + std::to_string(count) +
            " exceeds spectrum dimension " + std::to_string(spec.dim()));
    }
    ComparisonReport report;
    report.threshold = threshold;
    report.rows.reserve(count);
    int within = 0;
    for (int i = 0; i < count; ++i) {
        const double computed = spec.eigenvalues[i];
        const double reference = ref.evaluate(i);
        const double err = relative_error(computed, reference);
        report.rows.push_back({i, computed, reference, err});
        if (err <= threshold) ++within;
    }
    report.fraction_within = static_cast<double>(within) / count;
    return report;
}

std::vector<DensityPoint> wavefunction_density(const Spectrum& spec, int k,
                                               int lattice_n) {
    if (k < 0 || k >= spec.dim()) {
        throw std::invalid_argument("wavefunction_density: state index " +
                                    std::to_string(k) + " outside [0, " +
                                    std::to_string(spec.dim()) + ")");
    }
    if (lattice_n != spec.dim()) {
        throw std::invalid_argument(
            "wavefunction_density: lattice size " + std::to_string(lattice_n) +
            " does not match spectrum dimension " + std::to_string(spec.dim()));
    }

    Vector v = spec.eigenvectors.col(k);

    // Fix the arbitrary global phase: rotate so the largest-magnitude
    // component (lowest index on exact ties) is real and nonnegative.
    Eigen::Index largest = 0;
    double largest_abs = 0.0;
    for (Eigen::Index j = 0; j < v.size(); ++j) {
        const double a = std::abs(v[j]);
        if (a > largest_abs) {
            largest_abs = a;
            largest = j;
        }
    }
    if (largest_abs > 0.0) {
        v *= std::conj(v[largest]) / std::abs(v[largest]);
    }

    std::vector<DensityPoint> points;
    points.reserve(lattice_n);
    const double scale = std::sqrt(2.0 * std::numbers::pi / lattice_n);
    for (int j = 1; j <= lattice_n; ++j) {
        const double x = scale * lattice_index(j, lattice_n);
        points.push_back({x, std::norm(v[j - 1])});
    }
    return points;
}

std::string to_string(ReferenceModel model) {
    switch (model) {
        case ReferenceModel::exact_ho: return "exact-ho";
        case ReferenceModel::heisenberg_cubic: return "heisenberg-cubic";
        case ReferenceModel::heisenberg_quartic: return "heisenberg-quartic";
        case ReferenceModel::musin_susy: return "musin-susy";
    }
    throw std::logic_error("to_string: unreachable ReferenceModel");
}

ReferenceModel reference_model_from_string(const std::string& name) {
    for (ReferenceModel model :
         {ReferenceModel::exact_ho, ReferenceModel::heisenberg_cubic,
          ReferenceModel::heisenberg_quartic, ReferenceModel::musin_susy}) {
        if (to_string(model) == name) return model;
    }
    throw std::invalid_argument("unknown reference model: " + name);
}

}  // namespace qosc
