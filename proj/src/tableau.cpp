#include "stabent/tableau.hpp"

namespace stabent {

namespace {

void require_clifford(const Gate& g) {
    if (!is_clifford(g.kind)) {
        throw CircuitError("gate " + std::string(gate_name(g.kind)) +
                           " is not supported by the tableau backend");
    }
}

// Phase-free conjugation of a single row.
void conjugate_in_place(SympVec& row, const Gate& g) {
    const std::size_t q = g.target;
    switch (g.kind) {
        case GateKind::H: {
            bool x = row.x(q);
            row.set_x(q, row.z(q));
            row.set_z(q, x);
            break;
        }
        case GateKind::S:
            if (row.x(q)) row.flip(row.num_qubits() + q);
            break;
        case GateKind::CNOT: {
            const std::size_t t = g.second;
            if (row.x(q)) row.flip(t);
            if (row.z(t)) row.flip(row.num_qubits() + q);
            break;
        }
        default: break;
    }
}

}  // namespace

Tableau::Tableau(std::size_t n) : n_(n), signs_(n, false) {
    rows_.reserve(n);
    for (std::size_t q = 0; q < n; ++q) rows_.push_back(SympVec::z_on(n, q));
}

void Tableau::apply(const Gate& g) {
    require_clifford(g);
    if (g.target >= n_ || (is_two_qubit(g.kind) && g.second >= n_)) {
        throw CircuitError("gate index out of range");
    }
    const std::size_t q = g.target;
    for (std::size_t r = 0; r < n_; ++r) {
        SympVec& row = rows_[r];
        const bool x = row.x(q);
        const bool z = row.z(q);
        switch (g.kind) {
            case GateKind::H:
            case GateKind::S:
                if (x && z) signs_[r] = !signs_[r];
                break;
            case GateKind::CNOT: {
                const std::size_t t = g.second;
                if (x && row.z(t) && (row.x(t) == z)) signs_[r] = !signs_[r];
                break;
            }
            case GateKind::X:
                if (z) signs_[r] = !signs_[r];
                break;
            case GateKind::Z:
                if (x) signs_[r] = !signs_[r];
                break;
            case GateKind::Y:
                if (x != z) signs_[r] = !signs_[r];
                break;
            default: break;
        }
        conjugate_in_place(row, g);
    }
}

Tableau simulate_clifford(const Circuit& c) {
    Tableau t(c.num_qubits());
    for (const auto& g : c.gates()) t.apply(g);
    return t;
}

StabilizerGroupEstimate weyl_group_from_tableau(const Tableau& t) {
    return {span(t.generators(), t.num_qubits()), Provenance::Tableau};
}

SympVec conjugate_vector(const Circuit& c, SympVec x) {
    if (x.num_qubits() != c.num_qubits()) {
        throw DimensionMismatch("vector and circuit disagree on n");
    }
    for (const auto& g : c.gates()) {
        require_clifford(g);
        conjugate_in_place(x, g);
    }
    return x;
}

}  // namespace stabent
