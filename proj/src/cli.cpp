#include "qosc/cli.hpp"

#include "qosc/formats.hpp"
#include "qosc/hamiltonian.hpp"
#include "qosc/pauli.hpp"
#include "qosc/qsim.hpp"
#include "qosc/spectra.hpp"
#include "qosc/vqe.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace qosc {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string timestamp_utc() {
    const std::time_t now =
        std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buffer[32];
    std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buffer;
}

void write_manifest(const fs::path& path, const std::string& command,
                    const json& parameters,
                    const std::vector<fs::path>& inputs,
                    const std::vector<fs::path>& outputs) {
    json manifest;
    manifest["command"] = command;
    manifest["tool_version"] = kVersion;
    manifest["timestamp"] = timestamp_utc();
    manifest["parameters"] = parameters;
    json in = json::array();
    for (const auto& p : inputs) in.push_back(p.string());
    json out = json::array();
    for (const auto& p : outputs) out.push_back(p.string());
    manifest["inputs"] = in;
    manifest["outputs"] = out;
    write_text_file(path, manifest.dump(2) + "\n");
}

fs::path default_out_dir(const fs::path& input, const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    const fs::path parent = input.parent_path();
    return parent.empty() ? fs::path(".") : parent;
}

// ---------------------------------------------------------------------------
// build
// ---------------------------------------------------------------------------

struct BuildArgs {
    std::string kind;
    std::string basis = "energy";
    int n = 2;
    double alpha = 0.0;
    double beta = 0.0;
    double g = 0.0;
    double omega0 = 1.0;
    std::vector<double> coeffs;
    std::string out_dir = "out";
};

int run_build(const BuildArgs& args) {
    HamiltonianSpec spec;
    spec.kind = hamiltonian_kind_from_string(args.kind);
    spec.basis = basis_from_string(args.basis);
    spec.n = args.n;
    spec.alpha = args.alpha;
    spec.beta = args.beta;
    spec.g = args.g;
    spec.omega0 = args.omega0;
    spec.potential_coeffs = args.coeffs;
    if (spec.kind == HamiltonianKind::susy_musin) {
        spec.basis = Basis::energy;  // the SUSY builder has no basis choice
    }

    const OperatorMatrix h = build_hamiltonian(spec);

    const fs::path dir = fs::path(args.out_dir) / to_string(spec.kind);
    const fs::path matrix_path = dir / "matrix.txt";
    write_matrix_file(matrix_path, h);

    json params;
    params["kind"] = to_string(spec.kind);
    params["basis"] = to_string(spec.basis);
    params["n"] = spec.n;
    params["alpha"] = spec.alpha;
    params["beta"] = spec.beta;
    params["g"] = spec.g;
    params["omega0"] = spec.omega0;
    params["potential_coeffs"] = spec.potential_coeffs;
    write_manifest(dir / "build-manifest.json", "build", params, {},
                   {matrix_path});

    std::cout << "wrote " << matrix_path.string() << " (dim " << h.dim()
              << ")\n";
    return 0;
}

// ---------------------------------------------------------------------------
// decompose
// ---------------------------------------------------------------------------

struct DecomposeArgs {
    std::string input;
    double threshold = 1e-12;
    std::string out_dir;
};

int run_decompose(const DecomposeArgs& args) {
    const fs::path input(args.input);
    const OperatorMatrix h = read_matrix_file(input);

    // Full decomposition once; the kept set is exactly |c| > threshold, and
    // the remainder is reported as dropped mass.
    const PauliSum full = decompose(h, 0.0);
    PauliSum kept;
    kept.q = full.q;
    kept.threshold = args.threshold;
    double dropped_mass = 0.0;
    for (const PauliTerm& term : full.terms) {
        if (std::abs(term.coefficient) > args.threshold) {
            kept.terms.push_back(term);
        } else {
            dropped_mass += std::abs(term.coefficient);
        }
    }

    const fs::path dir = default_out_dir(input, args.out_dir);
    const fs::path pauli_path = dir / "pauli.txt";
    write_pauli_file(pauli_path, kept);

    json params;
    params["threshold"] = args.threshold;
    write_manifest(dir / "decompose-manifest.json", "decompose", params,
                   {input}, {pauli_path});

    const long n_labels = 1L << (2 * kept.q);
    std::cout << "wrote " << pauli_path.string() << "\n"
              << "terms kept: " << kept.terms.size() << " of " << n_labels
              << " labels\n"
              << "dropped coefficient mass: " << format_double(dropped_mass)
              << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// reconstruct
// ---------------------------------------------------------------------------

struct ReconstructArgs {
    std::string input;
    std::string out_dir;
};

int run_reconstruct(const ReconstructArgs& args) {
    const fs::path input(args.input);
    const PauliSum sum = read_pauli_file(input);
    const OperatorMatrix m = reconstruct(sum);

    const fs::path dir = default_out_dir(input, args.out_dir);
    const fs::path matrix_path = dir / "matrix-reconstructed.txt";
    write_matrix_file(matrix_path, m);

    write_manifest(dir / "reconstruct-manifest.json", "reconstruct",
                   json::object(), {input}, {matrix_path});

    std::cout << "wrote " << matrix_path.string() << " (dim " << m.dim()
              << ")\n";
    return 0;
}

// ---------------------------------------------------------------------------
// vqe
// ---------------------------------------------------------------------------

struct VqeArgs {
    std::string input;
    int depth = 1;
    std::string optimizer = "nelder-mead";
    int max_iterations = 500;
    double tolerance = 1e-6;
    std::uint64_t seed = 0;
    std::string init = "seeded-uniform";
    int stall_window = 50;
    std::string out_dir;
};

int run_vqe(const VqeArgs& args) {
    const fs::path input(args.input);
    const PauliSum hamiltonian = read_pauli_file(input);

    VqeConfig config;
    config.ansatz = {hamiltonian.q, args.depth};
    config.optimizer = optimizer_kind_from_string(args.optimizer);
    config.max_iterations = args.max_iterations;
    config.energy_tolerance = args.tolerance;
    config.seed = args.seed;
    config.initial_params = initial_params_from_string(args.init);
    config.stall_window = args.stall_window;

    const VqeResult result = vqe_run(hamiltonian, config);
    const int iterations =
        result.trace.empty() ? 0 : result.trace.back().iteration;

    const fs::path dir = default_out_dir(input, args.out_dir);

    // Result JSON.
    json out;
    out["best_energy"] = result.best_energy;
    out["best_params"] = result.best_params;
    out["iterations"] = iterations;
    out["evaluations"] = result.evaluations;
    out["converged"] = result.converged;
    out["exact_ground"] = result.exact_ground;
    out["relative_error"] = result.relative_error;
    out["wall_seconds"] = result.wall_seconds;
    out["optimizer"] = to_string(config.optimizer);
    out["seed"] = config.seed;
    out["qubits"] = hamiltonian.q;
    out["depth"] = args.depth;
    const fs::path result_path = dir / "vqe-result.json";
    write_text_file(result_path, out.dump(2) + "\n");

    // Convergence trace CSV.
    std::string trace_csv = "# qosc vqe-trace v1\niteration,energy\n";
    for (const TracePoint& point : result.trace) {
        trace_csv += std::to_string(point.iteration) + "," +
                     format_double(point.energy) + "\n";
    }
    const fs::path trace_path = dir / "vqe-trace.csv";
    write_text_file(trace_path, trace_csv);

    // Circuit diagram.
    const Circuit circuit = hardware_efficient_ansatz(config.ansatz);
    const fs::path circuit_path = dir / "vqe-circuit.txt";
    write_text_file(circuit_path, "# qosc circuit v1\n" +
                                      render_circuit(circuit));

    // Appending run log.
    const fs::path log_path = dir / "vqe-log.tsv";
    std::string log_line;
    if (!fs::exists(log_path)) {
        log_line +=
            "# qosc vqe-log v1\n"
            "# timestamp\thamiltonian\tansatz\toptimizer\tseed\titerations\t"
            "best_energy\texact_ground\trelative_error\twall_seconds\n";
    }
    log_line += timestamp_utc() + "\t" + input.string() + "\t" +
                std::to_string(hamiltonian.q) + "/" +
                std::to_string(args.depth) + "\t" +
                to_string(config.optimizer) + "\t" +
                std::to_string(config.seed) + "\t" +
                std::to_string(iterations) + "\t" +
                format_double(result.best_energy) + "\t" +
                format_double(result.exact_ground) + "\t" +
                format_double(result.relative_error) + "\t" +
                format_double(result.wall_seconds) + "\n";
    {
        std::ofstream log(log_path, std::ios::app | std::ios::binary);
        if (!log) {
            throw std::runtime_error("cannot write file: " +
                                     log_path.string());
        }
        log.write(log_line.data(),
                  static_cast<std::streamsize>(log_line.size()));
    }

    json params;
    params["depth"] = args.depth;
    params["optimizer"] = args.optimizer;
    params["max_iterations"] = args.max_iterations;
    params["tolerance"] = args.tolerance;
    params["seed"] = args.seed;
    params["init"] = args.init;
    params["stall_window"] = args.stall_window;
    write_manifest(dir / "vqe-manifest.json", "vqe", params, {input},
                   {result_path, trace_path, circuit_path, log_path});

    std::cout << "best_energy " << format_double(result.best_energy) << "\n"
              << "exact_ground " << format_double(result.exact_ground) << "\n"
              << "relative_error " << format_double(result.relative_error)
              << "\n"
              << "converged " << (result.converged ? "true" : "false")
              << " after " << iterations << " iterations ("
              << result.evaluations << " evaluations)\n";
    return result.converged ? 0 : 1;
}

// ---------------------------------------------------------------------------
// spectrum
// ---------------------------------------------------------------------------

struct SpectrumArgs {
    std::string input;
    std::string reference = "exact-ho";
    double coupling = 0.0;
    double mass = 1.0;
    double omega0 = 1.0;
    double hbar = 1.0;
    int count = 0;  // 0 = full dimension
    double threshold = 0.02;
    std::string out_dir;
};

int run_spectrum(const SpectrumArgs& args) {
    const fs::path input(args.input);
    const OperatorMatrix h = read_matrix_file(input);
    const Spectrum spectrum = eigendecompose(h);

    ReferenceCurve curve;
    curve.model = reference_model_from_string(args.reference);
    curve.coupling = args.coupling;
    curve.mass = args.mass;
    curve.omega0 = args.omega0;
    curve.hbar = args.hbar;

    const int count = args.count > 0 ? args.count
                                     : static_cast<int>(spectrum.dim());
    const ComparisonReport report =
        compare_spectrum(spectrum, curve, count, args.threshold);

    std::string csv = "# qosc spectrum v1\nindex,computed,reference,relative_error\n";
    for (const ComparisonRow& row : report.rows) {
        csv += std::to_string(row.index) + "," + format_double(row.computed) +
               "," + format_double(row.reference) + "," +
               format_double(row.relative_error) + "\n";
    }
    csv += "# fraction_within_threshold " +
           format_double(report.fraction_within) + "\n";

    const fs::path dir = default_out_dir(input, args.out_dir);
    const fs::path csv_path = dir / "spectrum.csv";
    write_text_file(csv_path, csv);

    json params;
    params["reference"] = args.reference;
    params["coupling"] = args.coupling;
    params["mass"] = args.mass;
    params["omega0"] = args.omega0;
    params["hbar"] = args.hbar;
    params["count"] = count;
    params["threshold"] = args.threshold;
    write_manifest(dir / "spectrum-manifest.json", "spectrum", params, {input},
                   {csv_path});

    int within = 0;
    for (const ComparisonRow& row : report.rows) {
        if (row.relative_error <= report.threshold) ++within;
    }
    std::cout << "wrote " << csv_path.string() << "\n"
              << "fraction within threshold " << format_double(args.threshold)
              << ": " << format_double(report.fraction_within) << " (" << within
              << " of " << count << ")\n";
    return 0;
}

// ---------------------------------------------------------------------------
// wavefunction
// ---------------------------------------------------------------------------

struct WavefunctionArgs {
    std::string input;
    int k = 0;
    std::string out_dir;
};

int run_wavefunction(const WavefunctionArgs& args) {
    const fs::path input(args.input);
    const OperatorMatrix h = read_matrix_file(input);
    const Spectrum spectrum = eigendecompose(h);
    const auto density = wavefunction_density(spectrum, args.k,
                                              static_cast<int>(spectrum.dim()));

    std::string csv = "# qosc wavefunction v1\nx,density\n";
    for (const DensityPoint& point : density) {
        csv += format_double(point.x) + "," + format_double(point.density) +
               "\n";
    }

    const fs::path dir = default_out_dir(input, args.out_dir);
    const fs::path csv_path = dir / "wavefunction.csv";
    write_text_file(csv_path, csv);

    json params;
    params["k"] = args.k;
    write_manifest(dir / "wavefunction-manifest.json", "wavefunction", params,
                   {input}, {csv_path});

    std::cout << "wrote " << csv_path.string() << "\n";
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{
        "Finite-matrix quantum oscillators: Hamiltonian builders, spectra, "
        "Pauli decomposition, and a VQE on an exact statevector simulator"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    const std::vector<std::string> kind_names = {
        "harmonic-xp",      "harmonic-ladder",    "harmonic-corrected",
        "anharmonic-cubic", "anharmonic-quartic", "general-potential",
        "susy-musin"};

    BuildArgs build_args;
    CLI::App* build = app.add_subcommand("build", "Build a Hamiltonian matrix");
    build->add_option("--kind", build_args.kind, "Hamiltonian kind")
        ->required()
        ->check(CLI::IsMember(kind_names));
    build->add_option("--basis", build_args.basis,
                      "Operator basis (ignored by susy-musin)")
        ->check(CLI::IsMember({"position", "energy"}))
        ->capture_default_str();
    build->add_option("--n,--nB", build_args.n, "Bosonic dimension")
        ->capture_default_str();
    build->add_option("--alpha", build_args.alpha, "Cubic coupling")
        ->capture_default_str();
    build->add_option("--beta", build_args.beta, "Quartic coupling")
        ->capture_default_str();
    build->add_option("--g", build_args.g, "SUSY coupling")
        ->capture_default_str();
    build->add_option("--omega0", build_args.omega0, "SUSY base frequency")
        ->capture_default_str();
    build
        ->add_option("--coeffs", build_args.coeffs,
                     "Potential coefficients c0,c1,... for general-potential")
        ->delimiter(',');
    build->add_option("--out-dir", build_args.out_dir,
                      "Output root; files land in <out-dir>/<kind>/")
        ->capture_default_str();

    DecomposeArgs decompose_args;
    CLI::App* decompose_cmd = app.add_subcommand(
        "decompose", "Decompose a matrix file into a Pauli sum file");
    decompose_cmd->add_option("input", decompose_args.input, "Matrix file")
        ->required();
    decompose_cmd
        ->add_option("--threshold", decompose_args.threshold,
                     "Drop coefficients with |c| <= threshold")
        ->capture_default_str();
    decompose_cmd->add_option("--out-dir", decompose_args.out_dir,
                              "Output directory (default: input's directory)");

    ReconstructArgs reconstruct_args;
    CLI::App* reconstruct_cmd = app.add_subcommand(
        "reconstruct", "Rebuild the dense matrix from a Pauli sum file");
    reconstruct_cmd
        ->add_option("input", reconstruct_args.input, "Pauli sum file")
        ->required();
    reconstruct_cmd->add_option("--out-dir", reconstruct_args.out_dir,
                                "Output directory (default: input's directory)");

    VqeArgs vqe_args;
    CLI::App* vqe_cmd = app.add_subcommand(
        "vqe", "Minimize the ground energy of a Pauli sum file");
    vqe_cmd->add_option("input", vqe_args.input, "Pauli sum file")->required();
    vqe_cmd->add_option("--depth", vqe_args.depth, "Ansatz depth")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    vqe_cmd->add_option("--optimizer", vqe_args.optimizer, "Classical optimizer")
        ->check(CLI::IsMember({"nelder-mead", "spsa"}))
        ->capture_default_str();
    vqe_cmd
        ->add_option("--max-iterations", vqe_args.max_iterations,
                     "Optimizer iteration cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    vqe_cmd
        ->add_option("--tolerance", vqe_args.tolerance,
                     "Energy stability tolerance")
        ->capture_default_str();
    vqe_cmd->add_option("--seed", vqe_args.seed, "RNG seed")
        ->capture_default_str();
    vqe_cmd
        ->add_option("--init", vqe_args.init,
                     "Initial parameters: zeros or seeded-uniform in (-pi, pi)")
        ->check(CLI::IsMember({"zeros", "seeded-uniform"}))
        ->capture_default_str();
    vqe_cmd
        ->add_option("--stall-window", vqe_args.stall_window,
                     "Stop after this many iterations without a tolerance-sized "
                     "improvement")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    vqe_cmd->add_option("--out-dir", vqe_args.out_dir,
                        "Output directory (default: input's directory)");

    SpectrumArgs spectrum_args;
    CLI::App* spectrum_cmd = app.add_subcommand(
        "spectrum", "Compare eigenvalues against a closed-form reference");
    spectrum_cmd->add_option("input", spectrum_args.input, "Matrix file")
        ->required();
    spectrum_cmd
        ->add_option("--reference", spectrum_args.reference, "Reference model")
        ->check(CLI::IsMember({"exact-ho", "heisenberg-cubic",
                               "heisenberg-quartic", "musin-susy"}))
        ->capture_default_str();
    spectrum_cmd
        ->add_option("--coupling", spectrum_args.coupling,
                     "Reference coupling (lambda or g)")
        ->capture_default_str();
    spectrum_cmd->add_option("--mass", spectrum_args.mass, "Mass")
        ->capture_default_str();
    spectrum_cmd->add_option("--omega0", spectrum_args.omega0, "Base frequency")
        ->capture_default_str();
    spectrum_cmd->add_option("--hbar", spectrum_args.hbar, "hbar")
        ->capture_default_str();
    spectrum_cmd
        ->add_option("--count", spectrum_args.count,
                     "Number of lowest eigenvalues to compare (default: all)")
        ->check(CLI::NonNegativeNumber);
    spectrum_cmd
        ->add_option("--threshold", spectrum_args.threshold,
                     "Relative-error threshold for the summary fraction")
        ->capture_default_str();
    spectrum_cmd->add_option("--out-dir", spectrum_args.out_dir,
                             "Output directory (default: input's directory)");

    WavefunctionArgs wavefunction_args;
    CLI::App* wavefunction_cmd = app.add_subcommand(
        "wavefunction", "Emit the probability density of an eigenstate");
    wavefunction_cmd
        ->add_option("input", wavefunction_args.input, "Matrix file")
        ->required();
    wavefunction_cmd
        ->add_option("--k", wavefunction_args.k, "Eigenstate index")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    wavefunction_cmd->add_option("--out-dir", wavefunction_args.out_dir,
                                 "Output directory (default: input's directory)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // non-zero parse failures are usage errors
    }

    try {
        if (build->parsed()) return run_build(build_args);
        if (decompose_cmd->parsed()) return run_decompose(decompose_args);
        if (reconstruct_cmd->parsed()) return run_reconstruct(reconstruct_args);
        if (vqe_cmd->parsed()) return run_vqe(vqe_args);
        if (spectrum_cmd->parsed()) return run_spectrum(spectrum_args);
        if (wavefunction_cmd->parsed()) return run_wavefunction(wavefunction_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace qosc
