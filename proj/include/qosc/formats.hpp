#pragma once

#include "qosc/matrix.hpp"
#include "qosc/pauli.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>

namespace qosc {

// Malformed input file; carries the path and 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::filesystem::path path, int line, const std::string& message);

    const std::filesystem::path& path() const { return path_; }
    int line() const { return line_; }

private:
    std::filesystem::path path_;
    int line_;
};

// Shortest decimal string that parses back to the same double.
std::string format_double(double value);

// "re" when the imaginary part is zero, otherwise "re+imi" / "re-imi".
std::string format_complex(const Complex& value);

// Matrix file: a "# qosc matrix v1" header comment, "dim <n>", then n rows
// of n whitespace-separated entries.
std::string render_matrix_file(const OperatorMatrix& m);
OperatorMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path,
                       const OperatorMatrix& m);

// Pauli file: a "# qosc pauli v1" header comment, "qubits <q>",
// "threshold <t>", then "<label> <coefficient>" lines in lexicographic
// label order.
std::string render_pauli_file(const PauliSum& sum);
PauliSum read_pauli_file(const std::filesystem::path& path);
void write_pauli_file(const std::filesystem::path& path, const PauliSum& sum);

// Writes the fully rendered buffer in one call, creating parent directories;
// nothing is written on earlier error paths, so outputs are never partial.
void write_text_file(const std::filesystem::path& path,
                     const std::string& content);

}  // namespace qosc
