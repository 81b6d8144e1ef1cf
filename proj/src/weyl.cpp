#include "stabent/weyl.hpp"

#include <bit>
#include <cmath>

namespace stabent {

namespace {

// a-part (or b-part) of x as an integer with qubit 0 in the top bit.
std::size_t half_as_index(const SympVec& x, bool z_part) {
    const std::size_t n = x.num_qubits();
    std::size_t out = 0;
    for (std::size_t q = 0; q < n; ++q) {
        if (z_part ? x.z(q) : x.x(q)) out |= std::size_t{1} << (n - 1 - q);
    }
    return out;
}

// i^k for k mod 4.
Amplitude i_power(unsigned k) {
    switch (k & 3u) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

void walsh_hadamard(std::vector<Amplitude>& f) {
    for (std::size_t len = 1; len < f.size(); len <<= 1) {
        for (std::size_t i = 0; i < f.size(); i += len << 1) {
            for (std::size_t j = i; j < i + len; ++j) {
                Amplitude u = f[j];
                Amplitude v = f[j + len];
                f[j] = u + v;
                f[j + len] = u - v;
            }
        }
    }
}

constexpr double kImagTolerance = 1e-10;

}  // namespace

std::string_view provenance_name(Provenance p) {
    switch (p) {
        case Provenance::ExactOracle: return "exact-oracle";
        case Provenance::Tableau: return "tableau";
        case Provenance::Sampled: return "sampled";
    }
    return "?";
}

std::size_t weyl_index(const SympVec& x) {
    const std::size_t n = x.num_qubits();
    return (half_as_index(x, false) << n) | half_as_index(x, true);
}

SympVec weyl_from_index(std::size_t index, std::size_t n) {
    SympVec x(n);
    const std::size_t a = index >> n;
    const std::size_t b = index & ((std::size_t{1} << n) - 1);
    for (std::size_t q = 0; q < n; ++q) {
        const std::size_t bit = std::size_t{1} << (n - 1 - q);
        if (a & bit) x.set_x(q, true);
        if (b & bit) x.set_z(q, true);
    }
    return x;
}

StateVector apply_weyl(const SympVec& v, const StateVector& psi) {
    const std::size_t n = psi.num_qubits();
    if (v.num_qubits() != n) throw DimensionMismatch("Weyl operator and state disagree on n");
    const std::size_t a = half_as_index(v, false);
    const std::size_t b = half_as_index(v, true);
    const Amplitude global = i_power(static_cast<unsigned>(std::popcount(a & b)));

    // W|k> = i^{a.b} (-1)^{b.k} |k xor a>
    std::vector<Amplitude> out(psi.dimension());
    for (std::size_t k = 0; k < psi.dimension(); ++k) {
        Amplitude amp = global * psi[k];
        if (std::popcount(b & k) & 1) amp = -amp;
        out[k ^ a] = amp;
    }
    return StateVector(n, std::move(out), n);
}

double weyl_expectation(const SympVec& v, const StateVector& psi) {
    Amplitude e = psi.inner(apply_weyl(v, psi));
    if (std::abs(e.imag()) > kImagTolerance) {
        throw std::domain_error("Weyl expectation has imaginary part " +
                                std::to_string(e.imag()));
    }
    return e.real();
}

std::vector<double> weyl_expectation_table(const StateVector& psi) {
    const std::size_t n = psi.num_qubits();
    const std::size_t dim = psi.dimension();
    std::vector<double> table(dim * dim);
    std::vector<Amplitude> f(dim);
    for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t k = 0; k < dim; ++k) f[k] = std::conj(psi[k ^ a]) * psi[k];
        // f[b] <- sum_k (-1)^{b.k} conj(psi[k^a]) psi[k]
        walsh_hadamard(f);
        for (std::size_t b = 0; b < dim; ++b) {
            Amplitude e = i_power(static_cast<unsigned>(std::popcount(a & b))) * f[b];
            if (std::abs(e.imag()) > kImagTolerance) {
                throw std::domain_error("Weyl expectation has imaginary part " +
                                        std::to_string(e.imag()));
            }
            table[(a << n) | b] = e.real();
        }
    }
    return table;
}

StabilizerGroupEstimate weyl_group_oracle(const StateVector& psi, std::size_t cap) {
    const std::size_t n = psi.num_qubits();
    check_dense_cap(n, cap);
    auto table = weyl_expectation_table(psi);
    Subspace group(n);
    for (std::size_t idx = 0; idx < table.size(); ++idx) {
        if (std::abs(table[idx]) >= 1.0 - kStabilizerTolerance) {
            group.insert(weyl_from_index(idx, n));
        }
    }
    return {std::move(group), Provenance::ExactOracle};
}

}  // namespace stabent
