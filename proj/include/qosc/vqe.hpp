#pragma once

#include "qosc/pauli.hpp"
#include "qosc/qsim.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace qosc {

enum class OptimizerKind { nelder_mead, spsa };
enum class InitialParams { zeros, seeded_uniform };

// Configuration of one VQE run.
//
// Stopping: the loop ends at `max_iterations`, or earlier once the best
// energy has improved by less than `energy_tolerance` over `stall_window`
// consecutive iterations (the Nelder-Mead simplex collapsing below its
// diameter tolerance also ends the run). The window defaults to 50:
// mid-run simplex plateaus of up to ~30 iterations are routine on the
// ansatz landscape, so substantially smaller windows abort runs that
// would still converge.
struct VqeConfig {
    AnsatzSpec ansatz;
    OptimizerKind optimizer = OptimizerKind::nelder_mead;
    int max_iterations = 500;
    double energy_tolerance = 1e-6;
    std::uint64_t seed = 0;
    InitialParams initial_params = InitialParams::seeded_uniform;
    int stall_window = 50;
};

struct TracePoint {
    int iteration;  // 1-based
    double energy;
};

struct VqeResult {
    double best_energy = 0.0;
    std::vector<double> best_params;
    std::vector<TracePoint> trace;
    long evaluations = 0;
    bool converged = false;     // stopped before the iteration cap
    double exact_ground = 0.0;  // lowest eigenvalue of the reconstructed H
    double relative_error = 0.0;
    double wall_seconds = 0.0;
};

using Objective = std::function<double(const std::vector<double>&)>;

// Invoked after each optimizer iteration with (iteration, best value so
// far); returning false stops the optimizer (counts as an early stop, not a
// cap hit).
using IterationCallback = std::function<bool(int, double)>;

struct NelderMeadOptions {
    int max_iterations = 500;
    double initial_step = 0.5;   // offset of the initial simplex vertices
    double diameter_tol = 1e-8;  // stop when the simplex shrinks below this
    double f_tol = 0.0;          // stop when the value spread drops below
                                 // this; 0 disables the spread test
};

struct SpsaOptions {
    int max_iterations = 200;
    double a = 0.2;            // step gain: a_k = a / (k+1+A)^0.602
    double c = 0.1;            // perturbation gain: c_k = c / (k+1)^0.101
    double stability = -1.0;   // A; negative means max_iterations / 10
    std::uint64_t seed = 0;
};

struct OptimizerOutcome {
    std::vector<double> x_best;
    double f_best = 0.0;
    std::vector<TracePoint> trace;
    long evaluations = 0;
    bool hit_iteration_cap = false;
};

// Simplex method with reflection 1, expansion 2, contraction 0.5, shrink 0.5.
// The trace records the best vertex value after each iteration.
OptimizerOutcome nelder_mead_minimize(const Objective& objective,
                                      const std::vector<double>& x0,
                                      const NelderMeadOptions& options,
                                      const IterationCallback& callback = {});

// Simultaneous-perturbation stochastic approximation with Rademacher
// perturbations; deterministic per seed. The trace records f at the current
// iterate after each update.
OptimizerOutcome spsa_minimize(const Objective& objective,
                               const std::vector<double>& x0,
                               const SpsaOptions& options,
                               const IterationCallback& callback = {});

VqeResult vqe_run(const PauliSum& hamiltonian, const VqeConfig& config);

// Deterministic uniform double in [0, 1) built from the raw 64-bit engine
// output; identical across platforms, unlike uniform_real_distribution.
double uniform_unit(std::mt19937_64& gen);

std::string to_string(OptimizerKind kind);
OptimizerKind optimizer_kind_from_string(const std::string& name);
std::string to_string(InitialParams init);
InitialParams initial_params_from_string(const std::string& name);

}  // namespace qosc
