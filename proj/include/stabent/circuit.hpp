#pragma once

// Gate lists over {H, S, CNOT, X, Y, Z} plus the non-Clifford {T, TDG}, and the
// line-oriented circuit text format:
//
//   # comment
//   qubits 3
//   H 1
//   CNOT 1 2
//   T 3
//
// Qubit indices in text are 1-based; in memory they are 0-based.

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stabent {

enum class GateKind { H, S, CNOT, X, Y, Z, T, TDG };

std::string_view gate_name(GateKind kind);
bool is_clifford(GateKind kind);
bool is_two_qubit(GateKind kind);

struct Gate {
    GateKind kind;
    std::size_t target;
    // Second operand of CNOT (the target qubit); `target` is the control.
    std::size_t second = 0;

    friend bool operator==(const Gate&, const Gate&) = default;
};

class CircuitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Circuit {
public:
    explicit Circuit(std::size_t n) : n_(n) {}

    std::size_t num_qubits() const noexcept { return n_; }
    const std::vector<Gate>& gates() const noexcept { return gates_; }

    // Validates qubit indices; throws CircuitError.
    Circuit& add(GateKind kind, std::size_t q);
    Circuit& add(GateKind kind, std::size_t control, std::size_t target);
    Circuit& add(const Gate& g);
    Circuit& append(const Circuit& other);

    // Number of T/TDG gates.
    std::size_t non_clifford_count() const;
    bool is_clifford() const { return non_clifford_count() == 0; }

    friend bool operator==(const Circuit&, const Circuit&) = default;

private:
    std::size_t n_;
    std::vector<Gate> gates_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

Circuit parse_circuit(std::istream& in);
Circuit parse_circuit(std::string_view text);
Circuit load_circuit(const std::string& path);
std::string print_circuit(const Circuit& c);

}  // namespace stabent
