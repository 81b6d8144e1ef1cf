#pragma once

// Entanglement-entropy bounds from (an estimate of) the unsigned stabilizer
// group, and the end-to-end Bell-difference-sampling estimator.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "stabent/statevector.hpp"
#include "stabent/symplectic.hpp"
#include "stabent/weyl.hpp"

namespace stabent {

class InsufficientSamples : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotIsotropic : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Binary entropy in bits; H(0) = H(1) = 0.
double binary_entropy(double p);

struct EstimatorParams {
    double epsilon = 0.125;
    double delta = 0.1;
    // Promise: the state has stabilizer dimension at least n - k.
    std::size_t k = 0;
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument unless epsilon in (0, 3/8), delta in (0, 1]
    /// and k <= n.
    void validate(std::size_t n) const;
};

/// epsilon = 1/(8n), for which the gap u - l is at most k. Requires n >= 2.
double default_epsilon(std::size_t n);

/// ceil((2 ln(1/delta) + 4n) / epsilon^2) Bell difference samples.
std::size_t required_samples(std::size_t n, double epsilon, double delta);

/// Each Bell difference sample consumes four copies of the state.
inline std::size_t required_copies(std::size_t n, double epsilon, double delta) {
    return 4 * required_samples(n, epsilon, delta);
}

/// epsilon * n + H(epsilon): slack covering a sampled group that is larger than
/// the true one.
double fannes_correction(std::size_t n, double epsilon);

/// Both orientations of the dimension bounds for an isotropic group S:
///   upper_a = |A| - dim S_A,          upper_b = |B| - dim S_B,
///   lower_a = dim S - dim S_B - |A|,  lower_b = dim S - dim S_A - |B|.
/// `upper` is min(upper_a, upper_b); `lower` is max(lower_a, lower_b, 0).
struct GroupBounds {
    double lower = 0;
    double upper = 0;
    long upper_a = 0;
    long upper_b = 0;
    long lower_a = 0;
    long lower_b = 0;
    std::size_t dim_s = 0;
    std::size_t dim_s_a = 0;
    std::size_t dim_s_b = 0;
};

/// Throws NotIsotropic if the group is not isotropic.
GroupBounds entropy_bounds_from_group(const StabilizerGroupEstimate& s, const Cut& cut);

struct BoundReport {
    double lower = 0;
    double upper = 0;
    double estimate = 0;
    std::size_t dim_S = 0;
    double r = 0;
    std::size_t samples_used = 0;
    Cut cut;
    bool promise_violated = false;
    double epsilon = 0;
    double delta = 0;
    std::size_t k = 0;
    std::uint64_t seed = 0;
    Provenance provenance = Provenance::Sampled;
};

/// Symplectic complement of the span of the samples.
StabilizerGroupEstimate group_from_samples(std::span<const SympVec> samples, std::size_t n);

/// Bounds from a group estimate.
///
/// Sampled groups get the correction r = 0 if dim S = n - k and
/// r = epsilon n + H(epsilon) otherwise; `samples_used` must meet
/// required_samples(). Tableau and exact-oracle groups are Weyl(|psi>) itself,
/// so r = 0 and no sample count applies (a tableau group also implies k = 0).
///
/// dim S < n - k, or a sampled S that is not isotropic, cannot happen for a
/// state meeting the promise; the report then has promise_violated set.
/// Reported bounds are clamped to [0, min(|A|, |B|)].
BoundReport estimate_entropy(const StabilizerGroupEstimate& group, const Cut& cut,
                             const EstimatorParams& params, std::size_t samples_used = 0);

/// Runs the estimator on Bell difference samples. Throws InsufficientSamples.
BoundReport estimate_entropy(std::span<const SympVec> samples, const Cut& cut,
                             const EstimatorParams& params);

struct SampledGroup {
    StabilizerGroupEstimate group;
    std::size_t samples_used;
};

/// Draws required_samples() Bell difference samples from psi (seeded by
/// params.seed) and returns the complement of their span. Reuse it across cuts.
SampledGroup sample_group(const StateVector& psi, const EstimatorParams& params);

/// sample_group followed by estimate_entropy for one cut.
BoundReport estimate_entropy(const StateVector& psi, const Cut& cut,
                             const EstimatorParams& params);

/// Flat record with fields lower, upper, estimate, dim_S, r, samples_used,
/// epsilon, delta, k, cut_A (1-based), seed, backend, promise_violated.
nlohmann::ordered_json to_json(const BoundReport& report, std::string_view backend);

}  // namespace stabent
