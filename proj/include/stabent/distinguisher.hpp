#pragma once

// Telling a high-entropy ensemble from a low-entropy one with the estimator:
// run it with k = 2 t' and guess "high" iff l <= f_level <= u. With u - l <= 2t'
// and f_level - g_level > 2t', at most one level fits inside [l, u].

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "stabent/circuit.hpp"
#include "stabent/estimator.hpp"
#include "stabent/symplectic.hpp"

namespace stabent {

struct EnsembleSpec {
    std::string name;
    // Maximum number of T/TDG gates any generated circuit may use.
    std::size_t t_budget = 0;
    // Entanglement entropy (bits) of the members at the reference cut.
    double entropy_level = 0;
    // Circuit for a given key.
    std::function<Circuit(std::uint64_t key)> generate;
};

struct DistinguisherConfig {
    std::string high_name = "high";
    std::string low_name = "low";
    double f_level = 0;
    double g_level = 0;
    std::size_t t_prime = 0;
    Cut cut;
    double delta = 1.0 / 3.0;
    // 0 selects 1/(8n).
    double epsilon = 0;

    // Throws std::invalid_argument unless f_level - g_level > 2 t' and the cut
    // splits the qubits in half.
    void validate() const;
};

struct TrialOutcome {
    std::uint64_t key = 0;
    std::string guess;
    BoundReport bounds;
    bool contains_f = false;
    bool contains_g = false;
};

struct DistinguisherResult {
    // Majority guess over the trials.
    std::string guess;
    // Bounds from the first trial.
    BoundReport bounds;
    std::size_t trials = 0;
    // Fraction of trials whose guess names the source ensemble.
    double success_rate = 0;
    std::vector<TrialOutcome> outcomes;
};

// Guess from one report: high iff lower <= f_level <= upper.
std::string classify(const BoundReport& bounds, const DistinguisherConfig& config);

// One estimator run on the state prepared by `circuit` (dense backend).
TrialOutcome distinguish_state(const Circuit& circuit, const DistinguisherConfig& config,
                               std::uint64_t seed);

// Draws `trials` members of `source` (key = derive_seed(seed, i)) and
// classifies each. Throws if a generated circuit exceeds the t' budget.
DistinguisherResult distinguish(const EnsembleSpec& source, const DistinguisherConfig& config,
                                std::size_t trials, std::uint64_t seed);

nlohmann::ordered_json to_json(const DistinguisherResult& result, std::string_view backend);

// Random Clifford states whose entropy at `cut` is exactly `level` (rejection
// sampled against the tableau bounds).
EnsembleSpec clifford_ensemble(std::string name, const Cut& cut, std::size_t level);

// Clifford+1T states: local Cliffords on each side, one T or TDG, one CNOT
// across the cut and more local Cliffords. Members are rejection sampled to
// have dense-oracle entropy at most `max_entropy`, which is the declared level.
EnsembleSpec single_t_ensemble(std::string name, const Cut& cut, double max_entropy);

}  // namespace stabent
