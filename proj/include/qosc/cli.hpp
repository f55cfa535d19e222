#pragma once

namespace qosc {

inline constexpr const char* kVersion = "1.0.0";

// Entry point of the qosc tool; returns the process exit code.
// Commands: build, decompose, reconstruct, vqe, spectrum, wavefunction.
// Exit codes: 0 success (vqe: converged), 1 vqe ran but did not converge,
// 2 usage or input-file errors.
int run_cli(int argc, const char* const* argv);

}  // namespace qosc
