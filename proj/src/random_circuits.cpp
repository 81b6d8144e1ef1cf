#include "stabent/random_circuits.hpp"

#include <algorithm>
#include <vector>

namespace stabent {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Circuit random_local_clifford(std::size_t n, std::span<const std::size_t> qubits,
                              std::size_t gate_count, std::mt19937_64& rng) {
    if (qubits.empty()) throw CircuitError("random circuit needs at least one qubit");
    Circuit c(n);
    std::uniform_int_distribution<std::size_t> pick(0, qubits.size() - 1);
    std::uniform_int_distribution<int> kind(0, qubits.size() > 1 ? 2 : 1);
    for (std::size_t i = 0; i < gate_count; ++i) {
        switch (kind(rng)) {
            case 0: c.add(GateKind::H, qubits[pick(rng)]); break;
            case 1: c.add(GateKind::S, qubits[pick(rng)]); break;
            default: {
                std::size_t a = pick(rng);
                std::size_t b = pick(rng);
                while (b == a) b = pick(rng);
                c.add(GateKind::CNOT, qubits[a], qubits[b]);
            }
        }
    }
    return c;
}

Circuit random_clifford_circuit(std::size_t n, std::size_t gate_count, std::mt19937_64& rng) {
    std::vector<std::size_t> all(n);
    for (std::size_t q = 0; q < n; ++q) all[q] = q;
    return random_local_clifford(n, all, gate_count, rng);
}

Circuit random_clifford_t_circuit(std::size_t n, std::size_t clifford_gates, std::size_t t_count,
                                  std::mt19937_64& rng) {
    Circuit base = random_clifford_circuit(n, clifford_gates, rng);
    std::uniform_int_distribution<std::size_t> pos(0, clifford_gates);
    std::vector<std::size_t> slots(t_count);
    for (auto& s : slots) s = pos(rng);
    std::sort(slots.begin(), slots.end());

    std::uniform_int_distribution<std::size_t> qubit(0, n - 1);
    std::bernoulli_distribution dagger(0.5);
    Circuit out(n);
    std::size_t next = 0;
    for (std::size_t i = 0; i <= base.gates().size(); ++i) {
        while (next < slots.size() && slots[next] == i) {
            out.add(dagger(rng) ? GateKind::TDG : GateKind::T, qubit(rng));
            ++next;
        }
        if (i < base.gates().size()) out.add(base.gates()[i]);
    }
    return out;
}

}  // namespace stabent
