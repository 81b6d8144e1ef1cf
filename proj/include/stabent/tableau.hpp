#pragma once

// Stabilizer tableau for C|0^n>, updated with the Aaronson-Gottesman rules.
// Only the n stabilizer rows are kept; the estimator never measures.

#include <cstddef>
#include <vector>

#include "stabent/circuit.hpp"
#include "stabent/symplectic.hpp"
#include "stabent/weyl.hpp"

namespace stabent {

class Tableau {
public:
    // Stabilizers Z_1, ..., Z_n of |0^n>.
    explicit Tableau(std::size_t n);

    std::size_t num_qubits() const noexcept { return n_; }
    const std::vector<SympVec>& generators() const noexcept { return rows_; }
    // Sign bit of each generator (1 means -P). Tracked but unused by the estimator.
    const std::vector<bool>& signs() const noexcept { return signs_; }

    // Throws CircuitError for non-Clifford gates.
    void apply(const Gate& g);

private:
    std::size_t n_;
    std::vector<SympVec> rows_;
    std::vector<bool> signs_;
};

Tableau simulate_clifford(const Circuit& c);

// Span of the generators with signs dropped.
StabilizerGroupEstimate weyl_group_from_tableau(const Tableau& t);

// C(x): the y with W_y = +-C W_x C^dagger. Throws CircuitError on T/TDG.
SympVec conjugate_vector(const Circuit& c, SympVec x);

}  // namespace stabent
