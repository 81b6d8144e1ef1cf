#pragma once

// Dense 2^n amplitude backend for small n. Qubit 0 is the most significant bit
// of the basis-state index.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "stabent/circuit.hpp"
#include "stabent/symplectic.hpp"

namespace stabent {

using Amplitude = std::complex<double>;

inline constexpr std::size_t kDefaultDenseCap = 12;

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void check_dense_cap(std::size_t n, std::size_t cap);

class StateVector {
public:
    // |0...0> on n qubits.
    explicit StateVector(std::size_t n, std::size_t cap = kDefaultDenseCap);
    // Takes ownership of amplitudes; length must be 2^n and the norm 1 within 1e-10.
    StateVector(std::size_t n, std::vector<Amplitude> amplitudes,
                std::size_t cap = kDefaultDenseCap);

    std::size_t num_qubits() const noexcept { return n_; }
    std::size_t dimension() const noexcept { return amps_.size(); }
    std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
    const Amplitude& operator[](std::size_t k) const { return amps_[k]; }

    // Bit mask of qubit q inside a basis-state index.
    std::size_t qubit_bit(std::size_t q) const noexcept { return std::size_t{1} << (n_ - 1 - q); }

    void apply(const Gate& g);

    double norm_squared() const;
    Amplitude inner(const StateVector& other) const;  // <this|other>

private:
    std::size_t n_;
    std::vector<Amplitude> amps_;
};

StateVector simulate_circuit(const Circuit& c, std::size_t cap = kDefaultDenseCap);

// p(x) = 2^-n <psi|W_x|psi>^2 over all 4^n points. Index layout matches
// weyl_index(): x-part in the high n bits, z-part in the low n bits.
class CharacteristicDistribution {
public:
    CharacteristicDistribution(std::size_t n, std::vector<double> p);

    std::size_t num_qubits() const noexcept { return n_; }
    std::span<const double> probabilities() const noexcept { return p_; }
    double operator()(const SympVec& x) const;
    double total() const noexcept { return cdf_.back(); }

    // Inverse-CDF draw of one index.
    template <class Rng>
    std::size_t draw_index(Rng& rng) const {
        std::uniform_real_distribution<double> u(0.0, total());
        return locate(u(rng));
    }

private:
    std::size_t locate(double mass) const;

    std::size_t n_;
    std::vector<double> p_;
    std::vector<double> cdf_;
};

CharacteristicDistribution characteristic_distribution(const StateVector& psi,
                                                       std::size_t cap = kDefaultDenseCap);

// Each sample is the sum of two independent draws from p, hence distributed as
// the self-convolution q(x) = sum_a p(a) p(x + a).
std::vector<SympVec> bell_difference_sample(const CharacteristicDistribution& p,
                                            std::mt19937_64& rng, std::size_t count);

// Von Neumann entropy of the reduced state on cut.a(), in bits.
double entanglement_entropy_oracle(const StateVector& psi, const Cut& cut,
                                   std::size_t cap = kDefaultDenseCap);

}  // namespace stabent
