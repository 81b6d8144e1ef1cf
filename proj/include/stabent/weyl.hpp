#pragma once

// Weyl operators W_x = i^{a.b} (X^{a_1} Z^{b_1}) (x) ... (x) (X^{a_n} Z^{b_n}),
// Hermitian and self-inverse, acting on dense states.

#include <cstddef>
#include <string_view>
#include <vector>

#include "stabent/statevector.hpp"
#include "stabent/symplectic.hpp"

namespace stabent {

enum class Provenance { ExactOracle, Tableau, Sampled };

std::string_view provenance_name(Provenance p);

// An estimate of the unsigned stabilizer group Weyl(|psi>).
struct StabilizerGroupEstimate {
    Subspace group;
    Provenance provenance;
};

// Index of x in a 4^n table: a as an n-bit integer (qubit 0 most significant)
// shifted above b.
std::size_t weyl_index(const SympVec& x);
SympVec weyl_from_index(std::size_t index, std::size_t n);

StateVector apply_weyl(const SympVec& v, const StateVector& psi);

// <psi|W_v|psi>. Throws std::domain_error if the imaginary part exceeds 1e-10.
double weyl_expectation(const SympVec& v, const StateVector& psi);

// All 4^n expectations <psi|W_x|psi>, indexed by weyl_index. Uses one
// Walsh-Hadamard transform per x-part, O(n 4^n) total.
std::vector<double> weyl_expectation_table(const StateVector& psi);

inline constexpr double kStabilizerTolerance = 1e-9;

// Brute-force Weyl(|psi>): every x with |<psi|W_x|psi>| >= 1 - 1e-9.
StabilizerGroupEstimate weyl_group_oracle(const StateVector& psi,
                                          std::size_t cap = kDefaultDenseCap);

}  // namespace stabent
