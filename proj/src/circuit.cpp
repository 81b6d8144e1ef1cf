#include "stabent/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace stabent {

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H: return "H";
        case GateKind::S: return "S";
        case GateKind::CNOT: return "CNOT";
        case GateKind::X: return "X";
        case GateKind::Y: return "Y";
        case GateKind::Z: return "Z";
        case GateKind::T: return "T";
        case GateKind::TDG: return "TDG";
    }
    return "?";
}

bool is_clifford(GateKind kind) { return kind != GateKind::T && kind != GateKind::TDG; }

bool is_two_qubit(GateKind kind) { return kind == GateKind::CNOT; }

Circuit& Circuit::add(GateKind kind, std::size_t q) {
    if (is_two_qubit(kind)) {
        throw CircuitError(std::string(gate_name(kind)) + " needs two qubits");
    }
    if (q >= n_) {
        throw CircuitError("qubit " + std::to_string(q) + " out of range for " +
                           std::to_string(n_) + " qubits");
    }
    gates_.push_back({kind, q, 0});
    return *this;
}

Circuit& Circuit::add(GateKind kind, std::size_t control, std::size_t target) {
    if (!is_two_qubit(kind)) {
        throw CircuitError(std::string(gate_name(kind)) + " takes one qubit");
    }
    if (control >= n_ || target >= n_) {
        throw CircuitError("CNOT qubit out of range for " + std::to_string(n_) + " qubits");
    }
    if (control == target) {
        throw CircuitError("CNOT control and target coincide");
    }
    gates_.push_back({kind, control, target});
    return *this;
}

Circuit& Circuit::add(const Gate& g) {
    return is_two_qubit(g.kind) ? add(g.kind, g.target, g.second) : add(g.kind, g.target);
}

Circuit& Circuit::append(const Circuit& other) {
    if (other.n_ != n_) {
        throw CircuitError("cannot append circuits on different qubit counts");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    return *this;
}

std::size_t Circuit::non_clifford_count() const {
    return static_cast<std::size_t>(std::count_if(
        gates_.begin(), gates_.end(), [](const Gate& g) { return !stabent::is_clifford(g.kind); }));
}

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::size_t parse_index(std::string_view tok, std::size_t line) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
    }
    return value;
}

bool lookup_gate(std::string_view name, GateKind& kind) {
    static constexpr GateKind all[] = {GateKind::H, GateKind::S, GateKind::CNOT, GateKind::X,
                                       GateKind::Y, GateKind::Z, GateKind::T,    GateKind::TDG};
    for (GateKind k : all) {
        if (gate_name(k) == name) {
            kind = k;
            return true;
        }
    }
    return false;
}

}  // namespace

Circuit parse_circuit(std::istream& in) {
    std::string raw;
    std::size_t line_no = 0;
    std::size_t n = 0;
    bool have_header = false;
    Circuit circuit(0);

    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto tok = tokenize(line);
        if (tok.empty()) continue;

        if (!have_header) {
            if (tok[0] != "qubits" || tok.size() != 2) {
                throw ParseError(line_no, "expected header 'qubits N'");
            }
            n = parse_index(tok[1], line_no);
            if (n == 0) throw ParseError(line_no, "qubit count must be positive");
            circuit = Circuit(n);
            have_header = true;
            continue;
        }

        GateKind kind{};
        if (!lookup_gate(tok[0], kind)) {
            throw ParseError(line_no, "unknown gate '" + std::string(tok[0]) + "'");
        }
        std::size_t arity = is_two_qubit(kind) ? 2 : 1;
        if (tok.size() != arity + 1) {
            throw ParseError(line_no, std::string(gate_name(kind)) + " takes " +
                                          std::to_string(arity) + " qubit index(es)");
        }
        std::vector<std::size_t> q;
        for (std::size_t i = 1; i <= arity; ++i) {
            std::size_t idx = parse_index(tok[i], line_no);
            if (idx < 1 || idx > n) {
                throw ParseError(line_no, "qubit index " + std::to_string(idx) +
                                              " outside [1, " + std::to_string(n) + "]");
            }
            q.push_back(idx - 1);
        }
        try {
            if (arity == 2) {
                circuit.add(kind, q[0], q[1]);
            } else {
                circuit.add(kind, q[0]);
            }
        } catch (const CircuitError& e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (!have_header) {
        throw ParseError(line_no, "missing 'qubits N' header");
    }
    return circuit;
}

Circuit parse_circuit(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_circuit(in);
}

Circuit load_circuit(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(0, "cannot open '" + path + "'");
    }
    return parse_circuit(in);
}

std::string print_circuit(const Circuit& c) {
    std::ostringstream out;
    out << "qubits " << c.num_qubits() << '\n';
    for (const auto& g : c.gates()) {
        out << gate_name(g.kind) << ' ' << g.target + 1;
        if (is_two_qubit(g.kind)) out << ' ' << g.second + 1;
        out << '\n';
    }
    return out.str();
}

}  // namespace stabent
