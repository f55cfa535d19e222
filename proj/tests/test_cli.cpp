#include <doctest.h>

#include "qosc/cli.hpp"
#include "qosc/formats.hpp"
#include "qosc/matrix.hpp"

#include <Eigen/Eigenvalues>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace qosc;
namespace fs = std::filesystem;

namespace {

int run(std::initializer_list<std::string> args) {
    std::vector<std::string> storage{"qosc"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(storage.size());
    for (const std::string& s : storage) argv.push_back(s.c_str());
    // Silence the subcommand chatter while keeping assertions on files and
    // exit codes.
    std::ostringstream sink;
    std::streambuf* old_out = std::cout.rdbuf(sink.rdbuf());
    std::streambuf* old_err = std::cerr.rdbuf(sink.rdbuf());
    const int code = run_cli(static_cast<int>(argv.size()), argv.data());
    std::cout.rdbuf(old_out);
    std::cerr.rdbuf(old_err);
    return code;
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "qosc-cli-tests" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

int count_data_lines(const fs::path& path) {
    std::ifstream in(path);
    std::string line;
    int count = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '#') ++count;
    }
    return count;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("build writes the matrix, a manifest, and reports the path") {
    const fs::path dir = scratch("build");
    REQUIRE(run({"build", "--kind", "harmonic-ladder", "--basis", "energy",
                 "--n", "4", "--out-dir", dir.string()}) == 0);
    const fs::path matrix_path = dir / "harmonic-ladder" / "matrix.txt";
    REQUIRE(fs::exists(matrix_path));
    const OperatorMatrix m = read_matrix_file(matrix_path);
    REQUIRE(m.dim() == 4);
    for (int k = 0; k < 4; ++k) {
        CHECK(m.entries(k, k).real() == doctest::Approx(k + 0.5));
    }
    const fs::path manifest = dir / "harmonic-ladder" / "build-manifest.json";
    REQUIRE(fs::exists(manifest));
    const std::string text = slurp(manifest);
    CHECK(text.find("\"command\": \"build\"") != std::string::npos);
    CHECK(text.find("\"kind\": \"harmonic-ladder\"") != std::string::npos);
    CHECK(text.find("matrix.txt") != std::string::npos);
}

TEST_CASE("build accepts the --nB alias used for the susy kind") {
    const fs::path dir = scratch("susy");
    REQUIRE(run({"build", "--kind", "susy-musin", "--nB", "8", "--g", "0",
                 "--omega0", "1", "--out-dir", dir.string()}) == 0);
    const OperatorMatrix m =
        read_matrix_file(dir / "susy-musin" / "matrix.txt");
    REQUIRE(m.dim() == 16);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m.entries);
    CHECK(std::abs(solver.eigenvalues()[0]) <= 1e-10);
}

TEST_CASE("build rejects unknown kinds and bad couplings") {
    const fs::path dir = scratch("badbuild");
    CHECK(run({"build", "--kind", "bogus", "--out-dir", dir.string()}) == 2);
    CHECK(run({"build", "--out-dir", dir.string()}) == 2);  // missing --kind
    // alpha on a harmonic kind violates the spec invariants.
    CHECK(run({"build", "--kind", "harmonic-ladder", "--alpha", "0.1",
               "--out-dir", dir.string()}) == 2);
}

TEST_CASE("decompose emits the expected 1-qubit terms") {
    const fs::path dir = scratch("decompose");
    REQUIRE(run({"build", "--kind", "harmonic-ladder", "--n", "2",
                 "--out-dir", dir.string()}) == 0);
    const fs::path matrix_path = dir / "harmonic-ladder" / "matrix.txt";
    REQUIRE(run({"decompose", matrix_path.string()}) == 0);
    const std::string pauli = slurp(dir / "harmonic-ladder" / "pauli.txt");
    CHECK(pauli.find("I 1\n") != std::string::npos);
    CHECK(pauli.find("Z -0.5\n") != std::string::npos);
    CHECK(pauli.find("# qosc pauli v1") == 0);
    CHECK(fs::exists(dir / "harmonic-ladder" / "decompose-manifest.json"));
}

TEST_CASE("decompose rejects non-power-of-two dimensions") {
    const fs::path dir = scratch("pow2");
    REQUIRE(run({"build", "--kind", "harmonic-xp", "--basis", "position",
                 "--n", "3", "--out-dir", dir.string()}) == 0);
    CHECK(run({"decompose",
               (dir / "harmonic-xp" / "matrix.txt").string()}) == 2);
}

TEST_CASE("reconstruct inverts decompose through the file formats") {
    const fs::path dir = scratch("roundtrip");
    REQUIRE(run({"build", "--kind", "anharmonic-cubic", "--n", "8", "--alpha",
                 "0.05", "--out-dir", dir.string()}) == 0);
    const fs::path matrix_path = dir / "anharmonic-cubic" / "matrix.txt";
    REQUIRE(run({"decompose", matrix_path.string()}) == 0);
    REQUIRE(run({"reconstruct",
                 (dir / "anharmonic-cubic" / "pauli.txt").string()}) == 0);
    const OperatorMatrix original = read_matrix_file(matrix_path);
    const OperatorMatrix rebuilt = read_matrix_file(
        dir / "anharmonic-cubic" / "matrix-reconstructed.txt");
    REQUIRE(rebuilt.dim() == original.dim());
    CHECK((rebuilt.entries - original.entries).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("vqe pipeline produces results, trace, circuit, and log") {
    const fs::path dir = scratch("vqe");
    REQUIRE(run({"build", "--kind", "harmonic-ladder", "--n", "4",
                 "--out-dir", dir.string()}) == 0);
    const fs::path matrix_path = dir / "harmonic-ladder" / "matrix.txt";
    REQUIRE(run({"decompose", matrix_path.string()}) == 0);
    const fs::path pauli_path = dir / "harmonic-ladder" / "pauli.txt";
    REQUIRE(run({"vqe", pauli_path.string(), "--depth", "3", "--seed",
                 "1"}) == 0);

    const fs::path base = dir / "harmonic-ladder";
    const std::string result = slurp(base / "vqe-result.json");
    CHECK(result.find("\"converged\": true") != std::string::npos);
    CHECK(result.find("\"exact_ground\": 0.5") != std::string::npos);

    const std::string trace = slurp(base / "vqe-trace.csv");
    CHECK(trace.find("# qosc vqe-trace v1") == 0);
    CHECK(trace.find("iteration,energy") != std::string::npos);
    CHECK(count_data_lines(base / "vqe-trace.csv") > 10);

    const std::string circuit = slurp(base / "vqe-circuit.txt");
    CHECK(circuit.find("q0:") != std::string::npos);
    CHECK(circuit.find("RY(t") != std::string::npos);

    // The log accumulates one line per run.
    CHECK(count_data_lines(base / "vqe-log.tsv") == 1);
    REQUIRE(run({"vqe", pauli_path.string(), "--depth", "3", "--seed",
                 "2"}) == 0);
    CHECK(count_data_lines(base / "vqe-log.tsv") == 2);
    const std::string log = slurp(base / "vqe-log.tsv");
    CHECK(log.find("nelder-mead") != std::string::npos);
    CHECK(log.find("2/3") != std::string::npos);  // ansatz q/depth column
}

TEST_CASE("vqe exits 1 when the iteration cap halts the run") {
    const fs::path dir = scratch("vqecap");
    REQUIRE(run({"build", "--kind", "harmonic-ladder", "--n", "4",
                 "--out-dir", dir.string()}) == 0);
    REQUIRE(run({"decompose",
                 (dir / "harmonic-ladder" / "matrix.txt").string()}) == 0);
    CHECK(run({"vqe", (dir / "harmonic-ladder" / "pauli.txt").string(),
               "--depth", "3", "--seed", "1", "--max-iterations", "1"}) == 1);
    CHECK(count_data_lines(dir / "harmonic-ladder" / "vqe-trace.csv") == 2);
    // Header column line plus exactly one trace row.
    const std::string trace =
        slurp(dir / "harmonic-ladder" / "vqe-trace.csv");
    CHECK(trace.find("1,") != std::string::npos);
}

TEST_CASE("spectrum compares against the closed-form reference") {
    const fs::path dir = scratch("spectrum");
    REQUIRE(run({"build", "--kind", "harmonic-ladder", "--n", "8",
                 "--out-dir", dir.string()}) == 0);
    const fs::path matrix_path = dir / "harmonic-ladder" / "matrix.txt";
    REQUIRE(run({"spectrum", matrix_path.string(), "--reference", "exact-ho",
                 "--threshold", "0.02"}) == 0);
    const std::string csv = slurp(dir / "harmonic-ladder" / "spectrum.csv");
    CHECK(csv.find("# qosc spectrum v1") == 0);
    CHECK(csv.find("index,computed,reference,relative_error") !=
          std::string::npos);
    CHECK(csv.find("# fraction_within_threshold 1") != std::string::npos);
    CHECK(count_data_lines(dir / "harmonic-ladder" / "spectrum.csv") == 9);

    // count beyond the dimension is a usage error.
    CHECK(run({"spectrum", matrix_path.string(), "--count", "99"}) == 2);
}

TEST_CASE("spectrum reproduces the frozen cubic comparison") {
    const fs::path dir = scratch("cubicspec");
    REQUIRE(run({"build", "--kind", "anharmonic-cubic", "--n", "16",
                 "--alpha", "0.05", "--out-dir", dir.string()}) == 0);
    REQUIRE(run({"spectrum",
                 (dir / "anharmonic-cubic" / "matrix.txt").string(),
                 "--reference", "heisenberg-cubic", "--coupling", "0.15",
                 "--count", "8", "--threshold", "0.01"}) == 0);
    const std::string csv =
        slurp(dir / "anharmonic-cubic" / "spectrum.csv");
    // Five of eight low levels sit inside 1%.
    CHECK(csv.find("# fraction_within_threshold 0.625") != std::string::npos);
}

TEST_CASE("wavefunction emits a density table over the lattice") {
    const fs::path dir = scratch("wavefunction");
    REQUIRE(run({"build", "--kind", "harmonic-xp", "--basis", "position",
                 "--n", "16", "--out-dir", dir.string()}) == 0);
    const fs::path matrix_path = dir / "harmonic-xp" / "matrix.txt";
    REQUIRE(run({"wavefunction", matrix_path.string(), "--k", "0"}) == 0);
    const fs::path csv_path = dir / "harmonic-xp" / "wavefunction.csv";
    const std::string csv = slurp(csv_path);
    CHECK(csv.find("# qosc wavefunction v1") == 0);
    CHECK(csv.find("x,density") != std::string::npos);
    CHECK(count_data_lines(csv_path) == 17);  // column header + 16 sites
    CHECK(csv.find("-4.699928014933126,") != std::string::npos);

    CHECK(run({"wavefunction", matrix_path.string(), "--k", "16"}) == 2);
}

TEST_CASE("out-dir defaults to the input file's directory") {
    const fs::path dir = scratch("default-out");
    REQUIRE(run({"build", "--kind", "harmonic-ladder", "--n", "2",
                 "--out-dir", dir.string()}) == 0);
    REQUIRE(run({"decompose",
                 (dir / "harmonic-ladder" / "matrix.txt").string()}) == 0);
    CHECK(fs::exists(dir / "harmonic-ladder" / "pauli.txt"));

    // An explicit --out-dir redirects the outputs.
    const fs::path other = dir / "elsewhere";
    REQUIRE(run({"decompose",
                 (dir / "harmonic-ladder" / "matrix.txt").string(),
                 "--out-dir", other.string()}) == 0);
    CHECK(fs::exists(other / "pauli.txt"));
}

TEST_CASE("file errors surface as exit code 2 with no partial outputs") {
    const fs::path dir = scratch("errors");
    CHECK(run({"decompose", (dir / "missing.txt").string()}) == 2);
    CHECK_FALSE(fs::exists(dir / "pauli.txt"));

    std::ofstream bad(dir / "bad.txt");
    bad << "# qosc matrix v1\ndim 2\n0 1\n0 0\n";  // not Hermitian
    bad.close();
    CHECK(run({"spectrum", (dir / "bad.txt").string()}) == 2);
    CHECK_FALSE(fs::exists(dir / "spectrum.csv"));
}

TEST_CASE("usage errors and --version behave conventionally") {
    CHECK(run({"--version"}) == 0);
    CHECK(run({"no-such-command"}) == 2);
    CHECK(run({}) == 2);  // a subcommand is required
    const fs::path dir = scratch("usage");
    CHECK(run({"vqe", "input.txt", "--optimizer", "adam"}) == 2);
}

}  // TEST_SUITE
