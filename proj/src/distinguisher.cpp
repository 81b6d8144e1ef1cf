#include "stabent/distinguisher.hpp"

#include <algorithm>
#include <random>

#include "stabent/random_circuits.hpp"
#include "stabent/statevector.hpp"
#include "stabent/tableau.hpp"

namespace stabent {

void DistinguisherConfig::validate() const {
    if (!(f_level - g_level > 2.0 * static_cast<double>(t_prime))) {
        throw std::invalid_argument("entropy gap f - g = " + std::to_string(f_level - g_level) +
                                    " must exceed 2 t' = " + std::to_string(2 * t_prime));
    }
    const std::size_t n = cut.num_qubits();
    if (n < 2 || (cut.a().size() != n / 2 && cut.a().size() != (n + 1) / 2)) {
        throw std::invalid_argument("distinguisher needs a cut of size n/2");
    }
}

std::string classify(const BoundReport& bounds, const DistinguisherConfig& config) {
    return bounds.lower <= config.f_level && config.f_level <= bounds.upper ? config.high_name
                                                                             : config.low_name;
}

TrialOutcome distinguish_state(const Circuit& circuit, const DistinguisherConfig& config,
                               std::uint64_t seed) {
    config.validate();
    const std::size_t n = circuit.num_qubits();
    if (circuit.non_clifford_count() > config.t_prime) {
        throw std::invalid_argument("circuit uses " +
                                    std::to_string(circuit.non_clifford_count()) +
                                    " non-Clifford gates, budget is " +
                                    std::to_string(config.t_prime));
    }
    EstimatorParams params;
    params.epsilon = config.epsilon > 0 ? config.epsilon : default_epsilon(n);
    params.delta = config.delta;
    params.k = std::min(2 * config.t_prime, n);
    params.seed = seed;

    TrialOutcome out;
    out.key = seed;
    out.bounds = estimate_entropy(simulate_circuit(circuit), config.cut, params);
    out.guess = classify(out.bounds, config);
    out.contains_f = out.bounds.lower <= config.f_level && config.f_level <= out.bounds.upper;
    out.contains_g = out.bounds.lower <= config.g_level && config.g_level <= out.bounds.upper;
    return out;
}

DistinguisherResult distinguish(const EnsembleSpec& source, const DistinguisherConfig& config,
                                std::size_t trials, std::uint64_t seed) {
    config.validate();
    if (source.t_budget > config.t_prime) {
        throw std::invalid_argument("ensemble '" + source.name + "' exceeds the t' budget");
    }
    DistinguisherResult result;
    result.trials = trials;
    std::size_t correct = 0;
    std::size_t high_votes = 0;
    for (std::size_t i = 0; i < trials; ++i) {
        const std::uint64_t key = derive_seed(seed, i);
        Circuit c = source.generate(key);
        if (c.non_clifford_count() > source.t_budget) {
            throw std::logic_error("ensemble '" + source.name + "' produced a circuit over budget");
        }
        TrialOutcome outcome = distinguish_state(c, config, derive_seed(key, 0));
        outcome.key = key;
        correct += outcome.guess == source.name;
        high_votes += outcome.guess == config.high_name;
        result.outcomes.push_back(std::move(outcome));
    }
    if (trials > 0) {
        result.bounds = result.outcomes.front().bounds;
        result.success_rate = static_cast<double>(correct) / static_cast<double>(trials);
    }
    result.guess = 2 * high_votes > trials ? config.high_name : config.low_name;
    return result;
}

nlohmann::ordered_json to_json(const DistinguisherResult& result, std::string_view backend) {
    auto j = to_json(result.bounds, backend);
    j["guess"] = result.guess;
    j["trials"] = result.trials;
    j["success_rate"] = result.success_rate;
    return j;
}

namespace {

constexpr int kMaxAttempts = 10000;

}  // namespace

EnsembleSpec clifford_ensemble(std::string name, const Cut& cut, std::size_t level) {
    EnsembleSpec spec;
    spec.name = std::move(name);
    spec.t_budget = 0;
    spec.entropy_level = static_cast<double>(level);
    spec.generate = [cut, level](std::uint64_t key) {
        const std::size_t n = cut.num_qubits();
        std::mt19937_64 rng(key);
        for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
            Circuit c = random_clifford_circuit(n, 8 * n, rng);
            auto bounds = entropy_bounds_from_group(weyl_group_from_tableau(simulate_clifford(c)), cut);
            if (bounds.upper == static_cast<double>(level)) return c;
        }
        throw std::runtime_error("no Clifford state with entropy " + std::to_string(level) +
                                 " found at this cut");
    };
    return spec;
}

EnsembleSpec single_t_ensemble(std::string name, const Cut& cut, double max_entropy) {
    if (cut.a().empty() || cut.b().empty()) {
        throw std::invalid_argument("single-T ensemble needs both cut sides non-empty");
    }
    EnsembleSpec spec;
    spec.name = std::move(name);
    spec.t_budget = 1;
    spec.entropy_level = max_entropy;
    spec.generate = [cut, max_entropy](std::uint64_t key) {
        const std::size_t n = cut.num_qubits();
        const auto& a = cut.a();
        const auto& b = cut.b();
        std::mt19937_64 rng(key);
        std::uniform_int_distribution<std::size_t> any(0, n - 1);
        std::uniform_int_distribution<std::size_t> in_a(0, a.size() - 1);
        std::uniform_int_distribution<std::size_t> in_b(0, b.size() - 1);
        std::bernoulli_distribution coin(0.5);
        for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
            Circuit c(n);
            c.append(random_local_clifford(n, a, 4 * a.size(), rng));
            c.append(random_local_clifford(n, b, 4 * b.size(), rng));
            c.add(coin(rng) ? GateKind::T : GateKind::TDG, any(rng));
            if (coin(rng)) {
                c.add(GateKind::CNOT, a[in_a(rng)], b[in_b(rng)]);
            } else {
                c.add(GateKind::CNOT, b[in_b(rng)], a[in_a(rng)]);
            }
            c.append(random_local_clifford(n, a, 4 * a.size(), rng));
            c.append(random_local_clifford(n, b, 4 * b.size(), rng));
            if (entanglement_entropy_oracle(simulate_circuit(c), cut) <= max_entropy) return c;
        }
        throw std::runtime_error("no single-T state under the entropy threshold found");
    };
    return spec;
}

}  // namespace stabent
