#include "stabent/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace stabent {

double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::domain_error("binary entropy argument outside [0, 1]");
    }
    if (p == 0.0 || p == 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

void EstimatorParams::validate(std::size_t n) const {
    if (!(epsilon > 0.0 && epsilon < 0.375)) {
        throw std::invalid_argument("epsilon must lie in (0, 3/8), got " + std::to_string(epsilon));
    }
    if (!(delta > 0.0 && delta <= 1.0)) {
        throw std::invalid_argument("delta must lie in (0, 1], got " + std::to_string(delta));
    }
    if (k > n) {
        throw std::invalid_argument("k = " + std::to_string(k) + " exceeds n = " +
                                    std::to_string(n));
    }
}

double default_epsilon(std::size_t n) {
    if (n < 2) throw std::invalid_argument("default epsilon needs n >= 2");
    return 1.0 / (8.0 * static_cast<double>(n));
}

std::size_t required_samples(std::size_t n, double epsilon, double delta) {
    const double count =
        (2.0 * std::log(1.0 / delta) + 4.0 * static_cast<double>(n)) / (epsilon * epsilon);
    return static_cast<std::size_t>(std::ceil(count));
}

double fannes_correction(std::size_t n, double epsilon) {
    return epsilon * static_cast<double>(n) + binary_entropy(epsilon);
}

namespace {

GroupBounds raw_bounds(const Subspace& s, const Cut& cut) {
    if (s.num_qubits() != cut.num_qubits()) {
        throw DimensionMismatch("group and cut disagree on n");
    }
    GroupBounds b;
    b.dim_s = s.rank();
    b.dim_s_a = restrict_to_cut(s, cut.a()).rank();
    b.dim_s_b = restrict_to_cut(s, cut.b()).rank();
    const long dim_s = static_cast<long>(b.dim_s);
    const long size_a = static_cast<long>(cut.a().size());
    const long size_b = static_cast<long>(cut.b().size());
    b.upper_a = size_a - static_cast<long>(b.dim_s_a);
    b.upper_b = size_b - static_cast<long>(b.dim_s_b);
    b.lower_a = dim_s - static_cast<long>(b.dim_s_b) - size_a;
    b.lower_b = dim_s - static_cast<long>(b.dim_s_a) - size_b;
    b.upper = static_cast<double>(std::min(b.upper_a, b.upper_b));
    b.lower = static_cast<double>(std::max({b.lower_a, b.lower_b, 0L}));
    return b;
}

}  // namespace

GroupBounds entropy_bounds_from_group(const StabilizerGroupEstimate& s, const Cut& cut) {
    if (!is_isotropic(s.group)) {
        throw NotIsotropic("entropy bounds need an isotropic group");
    }
    return raw_bounds(s.group, cut);
}

StabilizerGroupEstimate group_from_samples(std::span<const SympVec> samples, std::size_t n) {
    return {symplectic_complement(span(samples, n)), Provenance::Sampled};
}

BoundReport estimate_entropy(const StabilizerGroupEstimate& group, const Cut& cut,
                             const EstimatorParams& params, std::size_t samples_used) {
    const std::size_t n = group.group.num_qubits();
    BoundReport report;
    report.cut = cut;
    report.epsilon = params.epsilon;
    report.delta = params.delta;
    report.k = group.provenance == Provenance::Tableau ? 0 : params.k;
    report.seed = params.seed;
    report.provenance = group.provenance;
    report.samples_used = samples_used;
    report.dim_S = group.group.rank();

    bool isotropic = is_isotropic(group.group);
    if (group.provenance == Provenance::Sampled) {
        params.validate(n);
        const std::size_t needed = required_samples(n, params.epsilon, params.delta);
        if (samples_used < needed) {
            throw InsufficientSamples("estimator needs " + std::to_string(needed) +
                                      " samples, got " + std::to_string(samples_used));
        }
        report.r = report.dim_S == n - report.k ? 0.0 : fannes_correction(n, params.epsilon);
    } else {
        if (report.k > n) throw std::invalid_argument("k exceeds n");
        if (!isotropic) throw NotIsotropic("exact stabilizer group is not isotropic");
        report.r = 0.0;
    }
    report.promise_violated = report.dim_S + report.k < n || !isotropic;

    GroupBounds b = raw_bounds(group.group, cut);
    const double cap = static_cast<double>(std::min(cut.a().size(), cut.b().size()));
    report.upper = std::clamp(b.upper + report.r, 0.0, cap);
    report.lower = std::clamp(b.lower - report.r, 0.0, cap);
    // Only reachable when the group is inconsistent with any state.
    if (report.lower > report.upper) report.lower = report.upper;
    report.estimate = 0.5 * (report.upper + report.lower);
    return report;
}

BoundReport estimate_entropy(std::span<const SympVec> samples, const Cut& cut,
                             const EstimatorParams& params) {
    const std::size_t n = cut.num_qubits();
    params.validate(n);
    const std::size_t needed = required_samples(n, params.epsilon, params.delta);
    if (samples.size() < needed) {
        throw InsufficientSamples("estimator needs " + std::to_string(needed) +
                                  " samples, got " + std::to_string(samples.size()));
    }
    return estimate_entropy(group_from_samples(samples, n), cut, params, samples.size());
}

SampledGroup sample_group(const StateVector& psi, const EstimatorParams& params) {
    const std::size_t n = psi.num_qubits();
    params.validate(n);
    const std::size_t count = required_samples(n, params.epsilon, params.delta);
    auto p = characteristic_distribution(psi, n);
    std::mt19937_64 rng(params.seed);

    // Accumulate the span chunk by chunk instead of storing every sample.
    constexpr std::size_t kChunk = 4096;
    Subspace spanned(n);
    for (std::size_t done = 0; done < count; done += kChunk) {
        for (auto& v : bell_difference_sample(p, rng, std::min(kChunk, count - done))) {
            if (spanned.rank() < 2 * n) spanned.insert(std::move(v));
        }
    }
    return {{symplectic_complement(spanned), Provenance::Sampled}, count};
}

BoundReport estimate_entropy(const StateVector& psi, const Cut& cut,
                             const EstimatorParams& params) {
    auto sampled = sample_group(psi, params);
    return estimate_entropy(sampled.group, cut, params, sampled.samples_used);
}

nlohmann::ordered_json to_json(const BoundReport& report, std::string_view backend) {
    nlohmann::ordered_json j;
    j["lower"] = report.lower;
    j["upper"] = report.upper;
    j["estimate"] = report.estimate;
    j["dim_S"] = report.dim_S;
    j["r"] = report.r;
    j["samples_used"] = report.samples_used;
    j["epsilon"] = report.epsilon;
    j["delta"] = report.delta;
    j["k"] = report.k;
    auto cut_a = nlohmann::ordered_json::array();
    for (std::size_t q : report.cut.a()) cut_a.push_back(q + 1);
    j["cut_A"] = std::move(cut_a);
    j["seed"] = report.seed;
    j["backend"] = std::string(backend);
    j["promise_violated"] = report.promise_violated;
    return j;
}

}  // namespace stabent
