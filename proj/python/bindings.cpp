#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qosc/cli.hpp"
#include "qosc/hamiltonian.hpp"
#include "qosc/pauli.hpp"
#include "qosc/qsim.hpp"
#include "qosc/spectra.hpp"
#include "qosc/vqe.hpp"

#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;

namespace {

using namespace qosc;

HamiltonianSpec make_spec(const std::string& kind, const std::string& basis,
                          int n, double alpha, double beta, double g,
                          double omega0, std::vector<double> coeffs) {
    HamiltonianSpec spec;
    spec.kind = hamiltonian_kind_from_string(kind);
    spec.basis = basis_from_string(basis);
    spec.n = n;
    spec.alpha = alpha;
    spec.beta = beta;
    spec.g = g;
    spec.omega0 = omega0;
    spec.potential_coeffs = std::move(coeffs);
    if (spec.kind == HamiltonianKind::susy_musin) {
        spec.basis = Basis::energy;
    }
    return spec;
}

OperatorMatrix wrap(const Matrix& m) { return {m, is_hermitian(m)}; }

ReferenceCurve make_curve(const std::string& model, double coupling,
                          double mass, double omega0, double hbar) {
    ReferenceCurve curve;
    curve.model = reference_model_from_string(model);
    curve.coupling = coupling;
    curve.mass = mass;
    curve.omega0 = omega0;
    curve.hbar = hbar;
    return curve;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Finite-matrix quantum oscillators: Hamiltonian builders, spectra, "
        "Pauli decomposition, and a statevector VQE.";
    m.attr("__version__") = kVersion;

    m.def(
        "build_hamiltonian",
        [](const std::string& kind, const std::string& basis, int n,
           double alpha, double beta, double g, double omega0,
           std::vector<double> coeffs) -> Matrix {
            return build_hamiltonian(make_spec(kind, basis, n, alpha, beta, g,
                                               omega0, std::move(coeffs)))
                .entries;
        },
        py::arg("kind"), py::arg("basis") = "energy", py::arg("n") = 2,
        py::arg("alpha") = 0.0, py::arg("beta") = 0.0, py::arg("g") = 0.0,
        py::arg("omega0") = 1.0, py::arg("coeffs") = std::vector<double>{},
        "Build a Hamiltonian matrix; returns a dense complex array.");

    m.def(
        "eigenvalues",
        [](const Matrix& h) -> Eigen::VectorXd {
            return eigendecompose(wrap(h)).eigenvalues;
        },
        py::arg("matrix"), "Ascending eigenvalues of a Hermitian matrix.");

    m.def(
        "eigensystem",
        [](const Matrix& h) {
            Spectrum s = eigendecompose(wrap(h));
            return py::make_tuple(std::move(s.eigenvalues),
                                  std::move(s.eigenvectors));
        },
        py::arg("matrix"),
        "(eigenvalues, eigenvector columns) of a Hermitian matrix.");

    m.def(
        "decompose",
        [](const Matrix& h, double threshold) {
            const PauliSum sum = decompose(wrap(h), threshold);
            std::vector<std::pair<std::string, double>> terms;
            terms.reserve(sum.terms.size());
            for (const PauliTerm& term : sum.terms) {
                terms.emplace_back(term.label, term.coefficient);
            }
            return terms;
        },
        py::arg("matrix"), py::arg("threshold") = 1e-12,
        "Pauli coefficients [(label, weight), ...] with |weight| above the "
        "threshold, labels in lexicographic order.");

    m.def(
        "reconstruct",
        [](const std::vector<std::pair<std::string, double>>& terms,
           int qubits) -> Matrix {
            PauliSum sum;
            sum.q = qubits;
            for (const auto& [label, coefficient] : terms) {
                sum.terms.push_back({label, coefficient});
            }
            validate(sum);
            return reconstruct(sum).entries;
        },
        py::arg("terms"), py::arg("qubits"),
        "Dense matrix of a [(label, weight), ...] Pauli sum.");

    m.def(
        "reference_energy",
        [](const std::string& model, int index, double coupling, double mass,
           double omega0, double hbar) {
            return make_curve(model, coupling, mass, omega0, hbar)
                .evaluate(index);
        },
        py::arg("model"), py::arg("index"), py::arg("coupling") = 0.0,
        py::arg("mass") = 1.0, py::arg("omega0") = 1.0, py::arg("hbar") = 1.0,
        "Closed-form reference energy at a spectral index. Models: exact-ho, "
        "heisenberg-cubic, heisenberg-quartic, musin-susy.");

    m.def(
        "compare_spectrum",
        [](const Matrix& h, const std::string& model, double coupling,
           int count, double threshold, double mass, double omega0,
           double hbar) {
            const Spectrum spectrum = eigendecompose(wrap(h));
            const int effective =
                count > 0 ? count : static_cast<int>(spectrum.dim());
            const ComparisonReport report = compare_spectrum(
                spectrum, make_curve(model, coupling, mass, omega0, hbar),
                effective, threshold);
            py::list rows;
            for (const ComparisonRow& row : report.rows) {
                py::dict d;
                d["index"] = row.index;
                d["computed"] = row.computed;
                d["reference"] = row.reference;
                d["relative_error"] = row.relative_error;
                rows.append(d);
            }
            py::dict out;
            out["rows"] = rows;
            out["threshold"] = report.threshold;
            out["fraction_within"] = report.fraction_within;
            return out;
        },
        py::arg("matrix"), py::arg("model"), py::arg("coupling") = 0.0,
        py::arg("count") = 0, py::arg("threshold") = 0.02,
        py::arg("mass") = 1.0, py::arg("omega0") = 1.0, py::arg("hbar") = 1.0,
        "Compare the lowest eigenvalues against a reference curve; count=0 "
        "compares the full spectrum.");

    m.def(
        "wavefunction_density",
        [](const Matrix& h, int k) {
            const Spectrum spectrum = eigendecompose(wrap(h));
            const auto points = wavefunction_density(
                spectrum, k, static_cast<int>(spectrum.dim()));
            std::vector<std::pair<double, double>> out;
            out.reserve(points.size());
            for (const DensityPoint& point : points) {
                out.emplace_back(point.x, point.density);
            }
            return out;
        },
        py::arg("matrix"), py::arg("k"),
        "[(x, |psi|^2), ...] for eigenstate k on the position lattice.");

    m.def(
        "vqe",
        [](const std::vector<std::pair<std::string, double>>& terms,
           int qubits, int depth, const std::string& optimizer,
           int max_iterations, double tolerance, std::uint64_t seed,
           const std::string& init, int stall_window) {
            PauliSum sum;
            sum.q = qubits;
            for (const auto& [label, coefficient] : terms) {
                sum.terms.push_back({label, coefficient});
            }
            validate(sum);

            VqeConfig config;
            config.ansatz = {qubits, depth};
            config.optimizer = optimizer_kind_from_string(optimizer);
            config.max_iterations = max_iterations;
            config.energy_tolerance = tolerance;
            config.seed = seed;
            config.initial_params = initial_params_from_string(init);
            config.stall_window = stall_window;

            const VqeResult result = vqe_run(sum, config);
            py::list trace;
            for (const TracePoint& point : result.trace) {
                trace.append(py::make_tuple(point.iteration, point.energy));
            }
            py::dict out;
            out["best_energy"] = result.best_energy;
            out["best_params"] = result.best_params;
            out["trace"] = trace;
            out["evaluations"] = result.evaluations;
            out["converged"] = result.converged;
            out["exact_ground"] = result.exact_ground;
            out["relative_error"] = result.relative_error;
            out["wall_seconds"] = result.wall_seconds;
            return out;
        },
        py::arg("terms"), py::arg("qubits"), py::arg("depth") = 1,
        py::arg("optimizer") = "nelder-mead", py::arg("max_iterations") = 500,
        py::arg("tolerance") = 1e-6, py::arg("seed") = 0,
        py::arg("init") = "seeded-uniform", py::arg("stall_window") = 50,
        "Variational ground-energy minimization of a Pauli sum on the exact "
        "statevector simulator.");
}
