#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>

#include "stabent/circuit.hpp"

namespace stabent {

// Per-trial seed from a master seed (splitmix64 of master + index).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

// `gate_count` gates drawn uniformly from {H, S, CNOT} on uniform qubits.
Circuit random_clifford_circuit(std::size_t n, std::size_t gate_count, std::mt19937_64& rng);

// Random Clifford gates with exactly `t_count` T/TDG gates at uniform positions.
Circuit random_clifford_t_circuit(std::size_t n, std::size_t clifford_gates, std::size_t t_count,
                                  std::mt19937_64& rng);

// Random Clifford gates acting only on `qubits` (at least one qubit).
Circuit random_local_clifford(std::size_t n, std::span<const std::size_t> qubits,
                              std::size_t gate_count, std::mt19937_64& rng);

}  // namespace stabent
