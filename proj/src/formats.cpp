#include "qosc/formats.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <string>
#include <string_view>
#include <system_error>
#include <unordered_set>
#include <vector>

namespace qosc {

namespace {

constexpr std::string_view kMatrixHeader = "# qosc matrix v1";
constexpr std::string_view kPauliHeader = "# qosc pauli v1";

bool is_blank_or_comment(std::string_view line) {
    const auto first = line.find_first_not_of(" \t\r");
    return first == std::string_view::npos || line[first] == '#';
}

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                                   line[i] == '\r')) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
               line[i] != '\r') {
            ++i;
        }
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

double parse_double_token(std::string_view token,
                          const std::filesystem::path& path, int line) {
    double value = 0.0;
    const auto [end, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || end != token.data() + token.size()) {
        throw ParseError(path, line,
                         "invalid number '" + std::string(token) + "'");
    }
    return value;
}

long parse_int_token(std::string_view token, const std::filesystem::path& path,
                     int line) {
    long value = 0;
    const auto [end, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || end != token.data() + token.size()) {
        throw ParseError(path, line,
                         "invalid integer '" + std::string(token) + "'");
    }
    return value;
}

// "re", "re+imi" or "re-imi"; also accepts a bare imaginary "imi".
Complex parse_complex_token(std::string_view token,
                            const std::filesystem::path& path, int line) {
    if (token.empty()) throw ParseError(path, line, "empty matrix entry");
    if (token.back() != 'i') {
        return {parse_double_token(token, path, line), 0.0};
    }
    std::string_view body = token.substr(0, token.size() - 1);
    // Split at the last sign that is not an exponent sign.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' &&
            body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string_view::npos) {
        return {0.0, parse_double_token(body, path, line)};
    }
    const double re = parse_double_token(body.substr(0, split), path, line);
    double im = parse_double_token(body.substr(split + 1), path, line);
    if (body[split] == '-') im = -im;
    return {re, im};
}

// Reads physical lines and hands back (1-based line number, payload) pairs
// with blank and comment lines skipped.
std::vector<std::pair<int, std::string>> read_payload_lines(
    const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open file: " + path.string());
    }
    std::vector<std::pair<int, std::string>> lines;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!is_blank_or_comment(line)) lines.emplace_back(number, line);
    }
    return lines;
}

}  // namespace

ParseError::ParseError(std::filesystem::path path, int line,
                       const std::string& message)
    : std::runtime_error(path.string() + ":" + std::to_string(line) + ": " +
                         message),
      path_(std::move(path)),
      line_(line) {}

std::string format_double(double value) {
    char buffer[64];
    const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
    if (ec != std::errc{}) {
        throw std::runtime_error("format_double: conversion failed");
    }
    return {buffer, end};
}

std::string format_complex(const Complex& value) {
    if (value.imag() == 0.0) return format_double(value.real());
    std::string out = format_double(value.real());
    if (value.imag() < 0.0) {
        out += "-";
        out += format_double(-value.imag());
    } else {
        out += "+";
        out += format_double(value.imag());
    }
    out += "i";
    return out;
}

std::string render_matrix_file(const OperatorMatrix& m) {
    std::string out(kMatrixHeader);
    out += "\ndim " + std::to_string(m.dim()) + "\n";
    for (Eigen::Index r = 0; r < m.dim(); ++r) {
        for (Eigen::Index c = 0; c < m.dim(); ++c) {
            if (c) out += ' ';
            out += format_complex(m.entries(r, c));
        }
        out += '\n';
    }
    return out;
}

OperatorMatrix read_matrix_file(const std::filesystem::path& path) {
    const auto lines = read_payload_lines(path);
    if (lines.empty()) {
        throw ParseError(path, 1, "missing 'dim <n>' line");
    }

    auto it = lines.begin();
    const auto head = split_tokens(it->second);
    if (head.size() != 2 || head[0] != "dim") {
        throw ParseError(path, it->first, "expected 'dim <n>', got '" +
                                              it->second + "'");
    }
    const long n = parse_int_token(head[1], path, it->first);
    if (n < 1 || n > 100000) {
        throw ParseError(path, it->first,
                         "dimension " + std::to_string(n) + " out of range");
    }
    ++it;

    Matrix m(n, n);
    for (long r = 0; r < n; ++r, ++it) {
        if (it == lines.end()) {
            throw ParseError(path, lines.back().first,
                             "matrix ends after " + std::to_string(r) +
                                 " of " + std::to_string(n) + " rows");
        }
        const auto tokens = split_tokens(it->second);
        if (static_cast<long>(tokens.size()) != n) {
            throw ParseError(path, it->first,
                             "expected " + std::to_string(n) +
                                 " entries, found " +
                                 std::to_string(tokens.size()));
        }
        for (long c = 0; c < n; ++c) {
            m(r, c) = parse_complex_token(tokens[c], path, it->first);
        }
    }
    if (it != lines.end()) {
        throw ParseError(path, it->first,
                         "unexpected content after the matrix rows");
    }
    const bool hermitian = is_hermitian(m);
    return {std::move(m), hermitian};
}

void write_matrix_file(const std::filesystem::path& path,
                       const OperatorMatrix& m) {
    write_text_file(path, render_matrix_file(m));
}

std::string render_pauli_file(const PauliSum& sum) {
    validate(sum);
    std::vector<const PauliTerm*> ordered;
    ordered.reserve(sum.terms.size());
    for (const PauliTerm& term : sum.terms) ordered.push_back(&term);
    std::sort(ordered.begin(), ordered.end(),
              [](const PauliTerm* a, const PauliTerm* b) {
                  return a->label < b->label;
              });

    std::string out(kPauliHeader);
    out += "\nqubits " + std::to_string(sum.q) + "\n";
    out += "threshold " + format_double(sum.threshold) + "\n";
    for (const PauliTerm* term : ordered) {
        out += term->label + " " + format_double(term->coefficient) + "\n";
    }
    return out;
}

PauliSum read_pauli_file(const std::filesystem::path& path) {
    const auto lines = read_payload_lines(path);
    if (lines.size() < 2) {
        throw ParseError(path, 1,
                         "missing 'qubits <q>' and 'threshold <t>' lines");
    }

    auto it = lines.begin();
    auto head = split_tokens(it->second);
    if (head.size() != 2 || head[0] != "qubits") {
        throw ParseError(path, it->first,
                         "expected 'qubits <q>', got '" + it->second + "'");
    }
    const long q = parse_int_token(head[1], path, it->first);
    if (q < 1 || q > 30) {
        throw ParseError(path, it->first,
                         "qubit count " + std::to_string(q) + " out of range");
    }
    ++it;

    head = split_tokens(it->second);
    if (head.size() != 2 || head[0] != "threshold") {
        throw ParseError(path, it->first,
                         "expected 'threshold <t>', got '" + it->second + "'");
    }
    PauliSum sum;
    sum.q = static_cast<int>(q);
    sum.threshold = parse_double_token(head[1], path, it->first);
    ++it;

    std::unordered_set<std::string> seen;
    for (; it != lines.end(); ++it) {
        const auto tokens = split_tokens(it->second);
        if (tokens.size() != 2) {
            throw ParseError(path, it->first,
                             "expected '<label> <coefficient>', got '" +
                                 it->second + "'");
        }
        PauliTerm term;
        term.label = std::string(tokens[0]);
        term.coefficient = parse_double_token(tokens[1], path, it->first);
        if (static_cast<long>(term.label.size()) != q) {
            throw ParseError(path, it->first,
                             "label '" + term.label + "' does not have " +
                                 std::to_string(q) + " letters");
        }
        for (char c : term.label) {
            if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
                throw ParseError(path, it->first,
                                 "label '" + term.label +
                                     "' has letters outside {I,X,Y,Z}");
            }
        }
        if (!seen.insert(term.label).second) {
            throw ParseError(path, it->first,
                             "duplicate label '" + term.label + "'");
        }
        sum.terms.push_back(std::move(term));
    }
    std::sort(sum.terms.begin(), sum.terms.end(),
              [](const PauliTerm& a, const PauliTerm& b) {
                  return a.label < b.label;
              });
    return sum;
}

void write_pauli_file(const std::filesystem::path& path, const PauliSum& sum) {
    write_text_file(path, render_pauli_file(sum));
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& content) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write file: " + path.string());
    }
    out.write(content.data(),
              static_cast<std::streamsize>(content.size()));
    if (!out) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

}  // namespace qosc
