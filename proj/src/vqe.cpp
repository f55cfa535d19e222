#include "qosc/vqe.hpp"

#include "qosc/spectra.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qosc {

namespace {

std::string format_params(const std::vector<double>& x) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) out << ", ";
        out << x[i];
    }
    out << ")";
    return out.str();
}

// Wraps the raw objective with finiteness checking and evaluation counting.
class CheckedObjective {
public:
    CheckedObjective(const Objective& objective, long& evaluations)
        : objective_(objective), evaluations_(evaluations) {}

    double operator()(const std::vector<double>& x) const {
        const double value = objective_(x);
        ++evaluations_;
        if (!std::isfinite(value)) {
            throw std::runtime_error(
                "objective returned a non-finite value at " + format_params(x));
        }
        return value;
    }

private:
    const Objective& objective_;
    long& evaluations_;
};

double euclidean_distance(const std::vector<double>& a,
                          const std::vector<double>& b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

}  // namespace

double uniform_unit(std::mt19937_64& gen) {
    // Top 53 bits scaled by 2^-53: identical on every platform, unlike
    // std::uniform_real_distribution.
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

OptimizerOutcome nelder_mead_minimize(const Objective& objective,
                                      const std::vector<double>& x0,
                                      const NelderMeadOptions& options,
                                      const IterationCallback& callback) {
    if (x0.empty()) {
        throw std::invalid_argument("nelder_mead_minimize: empty start point");
    }
    if (options.max_iterations < 1) {
        throw std::invalid_argument(
            "nelder_mead_minimize: max_iterations must be >= 1");
    }

    OptimizerOutcome outcome;
    const CheckedObjective f(objective, outcome.evaluations);
    const std::size_t n = x0.size();

    // Initial simplex: x0 plus one vertex offset by initial_step per axis.
    std::vector<std::vector<double>> simplex;
    simplex.reserve(n + 1);
    simplex.push_back(x0);
    for (std::size_t i = 0; i < n; ++i) {
        simplex.push_back(x0);
        simplex.back()[i] += options.initial_step;
    }
    std::vector<double> fv(n + 1);
    for (std::size_t i = 0; i <= n; ++i) fv[i] = f(simplex[i]);

    outcome.hit_iteration_cap = true;
    for (int iter = 1; iter <= options.max_iterations; ++iter) {
        // Ascending stable order by objective value.
        std::vector<std::size_t> order(n + 1);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) {
                             return fv[a] < fv[b];
                         });
        {
            std::vector<std::vector<double>> s2;
            std::vector<double> f2;
            s2.reserve(n + 1);
            f2.reserve(n + 1);
            for (std::size_t i : order) {
                s2.push_back(std::move(simplex[i]));
                f2.push_back(fv[i]);
            }
            simplex = std::move(s2);
            fv = std::move(f2);
        }

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t d = 0; d < n; ++d) centroid[d] += simplex[i][d];
        }
        for (double& c : centroid) c /= static_cast<double>(n);

        // Reflection (coefficient 1).
        std::vector<double> xr(n);
        for (std::size_t d = 0; d < n; ++d) {
            xr[d] = centroid[d] + (centroid[d] - simplex[n][d]);
        }
        const double fr = f(xr);

        if (fr < fv[0]) {
            // Expansion (coefficient 2).
            std::vector<double> xe(n);
            for (std::size_t d = 0; d < n; ++d) {
                xe[d] = centroid[d] + 2.0 * (xr[d] - centroid[d]);
            }
            const double fe = f(xe);
            if (fe < fr) {
                simplex[n] = std::move(xe);
                fv[n] = fe;
            } else {
                simplex[n] = std::move(xr);
                fv[n] = fr;
            }
        } else if (fr < fv[n - 1]) {
            simplex[n] = std::move(xr);
            fv[n] = fr;
        } else {
            // Contraction (coefficient 0.5): outside toward the reflected
            // point when it improved on the worst vertex, inside otherwise.
            std::vector<double> xc(n);
            if (fr < fv[n]) {
                for (std::size_t d = 0; d < n; ++d) {
                    xc[d] = centroid[d] + 0.5 * (xr[d] - centroid[d]);
                }
            } else {
                for (std::size_t d = 0; d < n; ++d) {
                    xc[d] = centroid[d] + 0.5 * (simplex[n][d] - centroid[d]);
                }
            }
            const double fc = f(xc);
            if (fc < std::min(fr, fv[n])) {
                simplex[n] = std::move(xc);
                fv[n] = fc;
            } else {
                // Shrink (coefficient 0.5) toward the best vertex.
                for (std::size_t i = 1; i <= n; ++i) {
                    for (std::size_t d = 0; d < n; ++d) {
                        simplex[i][d] = simplex[0][d] +
                                        0.5 * (simplex[i][d] - simplex[0][d]);
                    }
                    fv[i] = f(simplex[i]);
                }
            }
        }

        const std::size_t best =
            static_cast<std::size_t>(std::min_element(fv.begin(), fv.end()) -
                                     fv.begin());
        outcome.trace.push_back({iter, fv[best]});

        double diameter = 0.0;
        for (std::size_t i = 0; i <= n; ++i) {
            diameter = std::max(diameter,
                                euclidean_distance(simplex[i], simplex[0]));
        }
        const double spread =
            *std::max_element(fv.begin(), fv.end()) - fv[best];
        if (diameter < options.diameter_tol || spread < options.f_tol) {
            outcome.hit_iteration_cap = false;
            break;
        }
        if (callback && !callback(iter, fv[best])) {
            outcome.hit_iteration_cap = false;
            break;
        }
    }

    const std::size_t best = static_cast<std::size_t>(
        std::min_element(fv.begin(), fv.end()) - fv.begin());
    outcome.x_best = simplex[best];
    outcome.f_best = fv[best];
    return outcome;
}

OptimizerOutcome spsa_minimize(const Objective& objective,
                               const std::vector<double>& x0,
                               const SpsaOptions& options,
                               const IterationCallback& callback) {
    if (x0.empty()) {
        throw std::invalid_argument("spsa_minimize: empty start point");
    }
    if (options.max_iterations < 1) {
        throw std::invalid_argument(
            "spsa_minimize: max_iterations must be >= 1");
    }
    if (!(options.c > 0.0)) {
        throw std::invalid_argument(
            "spsa_minimize: perturbation scale c must be > 0");
    }
    if (!(options.a > 0.0)) {
        throw std::invalid_argument("spsa_minimize: step gain a must be > 0");
    }

    OptimizerOutcome outcome;
    const CheckedObjective f(objective, outcome.evaluations);
    const std::size_t n = x0.size();
    const double stability = options.stability < 0.0
                                 ? options.max_iterations / 10.0
                                 : options.stability;

    std::mt19937_64 gen(options.seed);
    std::vector<double> theta = x0;
    outcome.x_best = x0;
    outcome.f_best = f(x0);

    std::vector<double> delta(n);
    std::vector<double> probe(n);
    outcome.hit_iteration_cap = true;
    for (int k = 0; k < options.max_iterations; ++k) {
        const double ak = options.a / std::pow(k + 1 + stability, 0.602);
        const double ck = options.c / std::pow(k + 1, 0.101);

        for (std::size_t i = 0; i < n; ++i) {
            delta[i] = uniform_unit(gen) < 0.5 ? -1.0 : 1.0;
        }
        for (std::size_t i = 0; i < n; ++i) probe[i] = theta[i] + ck * delta[i];
        const double f_plus = f(probe);
        for (std::size_t i = 0; i < n; ++i) probe[i] = theta[i] - ck * delta[i];
        const double f_minus = f(probe);

        // With +-1 perturbations, 1/delta_i = delta_i.
        const double slope = (f_plus - f_minus) / (2.0 * ck);
        for (std::size_t i = 0; i < n; ++i) theta[i] -= ak * slope * delta[i];

        const double fk = f(theta);
        outcome.trace.push_back({k + 1, fk});
        if (fk < outcome.f_best) {
            outcome.f_best = fk;
            outcome.x_best = theta;
        }
        if (callback && !callback(k + 1, outcome.f_best)) {
            outcome.hit_iteration_cap = false;
            break;
        }
    }
    return outcome;
}

VqeResult vqe_run(const PauliSum& hamiltonian, const VqeConfig& config) {
    validate(hamiltonian);
    if (hamiltonian.q != config.ansatz.q) {
        throw std::invalid_argument(
            "vqe_run: Hamiltonian acts on " + std::to_string(hamiltonian.q) +
            " qubits but the ansatz has " + std::to_string(config.ansatz.q));
    }
    if (config.max_iterations < 1) {
        throw std::invalid_argument("vqe_run: max_iterations must be >= 1");
    }
    if (!(config.energy_tolerance > 0.0)) {
        throw std::invalid_argument("vqe_run: energy_tolerance must be > 0");
    }
    if (config.stall_window < 1) {
        throw std::invalid_argument("vqe_run: stall_window must be >= 1");
    }

    const auto t_start = std::chrono::steady_clock::now();
    const Circuit circuit = hardware_efficient_ansatz(config.ansatz);

    std::vector<double> x0(static_cast<std::size_t>(circuit.n_params), 0.0);
    if (config.initial_params == InitialParams::seeded_uniform) {
        std::mt19937_64 gen(config.seed);
        for (double& v : x0) {
            v = -std::numbers::pi + 2.0 * std::numbers::pi * uniform_unit(gen);
        }
    }

    const Objective objective = [&](const std::vector<double>& params) {
        return pauli_expectation(hamiltonian, run_circuit(circuit, params));
    };

    // Stop once the best energy has improved by less than energy_tolerance
    // over the last stall_window iterations.
    std::vector<double> best_history;
    const IterationCallback stall_callback = [&](int, double best) {
        best_history.push_back(best);
        const std::size_t len = best_history.size();
        const auto window = static_cast<std::size_t>(config.stall_window);
        return len <= window ||
               best_history[len - 1 - window] - best_history[len - 1] >=
                   config.energy_tolerance;
    };

    OptimizerOutcome outcome;
    if (config.optimizer == OptimizerKind::nelder_mead) {
        NelderMeadOptions options;
        options.max_iterations = config.max_iterations;
        // ~pi/2 initial step: the objective is 2*pi-periodic per angle, and
        // small simplices stall far from the optimum.
        options.initial_step = 1.5;
        options.diameter_tol = 1e-8;
        options.f_tol = 0.0;  // the stall window is the stability rule
        outcome = nelder_mead_minimize(objective, x0, options, stall_callback);
    } else {
        SpsaOptions options;
        options.max_iterations = config.max_iterations;
        options.seed = config.seed;
        outcome = spsa_minimize(objective, x0, options, stall_callback);
    }

    VqeResult result;
    result.best_energy = outcome.f_best;
    result.best_params = std::move(outcome.x_best);
    result.trace = std::move(outcome.trace);
    result.evaluations = outcome.evaluations;
    result.converged = !outcome.hit_iteration_cap;

    const Spectrum spectrum = eigendecompose(reconstruct(hamiltonian));
    result.exact_ground = spectrum.eigenvalues[0];
    result.relative_error =
        relative_error(result.best_energy, result.exact_ground);

    const auto t_end = std::chrono::steady_clock::now();
    result.wall_seconds =
        std::chrono::duration<double>(t_end - t_start).count();
    return result;
}

std::string to_string(OptimizerKind kind) {
    return kind == OptimizerKind::nelder_mead ? "nelder-mead" : "spsa";
}

OptimizerKind optimizer_kind_from_string(const std::string& name) {
    if (name == "nelder-mead") return OptimizerKind::nelder_mead;
    if (name == "spsa") return OptimizerKind::spsa;
    throw std::invalid_argument("unknown optimizer: " + name);
}

std::string to_string(InitialParams init) {
    return init == InitialParams::zeros ? "zeros" : "seeded-uniform";
}

InitialParams initial_params_from_string(const std::string& name) {
    if (name == "zeros") return InitialParams::zeros;
    if (name == "seeded-uniform") return InitialParams::seeded_uniform;
    throw std::invalid_argument("unknown initial-parameter mode: " + name);
}

}  // namespace qosc
