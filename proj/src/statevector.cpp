#include "stabent/statevector.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "stabent/weyl.hpp"

namespace stabent {

void check_dense_cap(std::size_t n, std::size_t cap) {
    if (n > cap) {
        throw CapExceeded("dense backend limited to " + std::to_string(cap) + " qubits, got " +
                          std::to_string(n));
    }
}

StateVector::StateVector(std::size_t n, std::size_t cap) : n_(n) {
    check_dense_cap(n, cap);
    amps_.assign(std::size_t{1} << n, Amplitude{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVector::StateVector(std::size_t n, std::vector<Amplitude> amplitudes, std::size_t cap)
    : n_(n), amps_(std::move(amplitudes)) {
    check_dense_cap(n, cap);
    if (amps_.size() != (std::size_t{1} << n)) {
        throw DimensionMismatch("expected 2^" + std::to_string(n) + " amplitudes");
    }
    if (std::abs(norm_squared() - 1.0) > 1e-10) {
        throw std::invalid_argument("state is not normalized");
    }
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const auto& a : amps_) total += std::norm(a);
    return total;
}

Amplitude StateVector::inner(const StateVector& other) const {
    if (other.n_ != n_) throw DimensionMismatch("inner product of states on different n");
    Amplitude total{0.0, 0.0};
    for (std::size_t k = 0; k < amps_.size(); ++k) total += std::conj(amps_[k]) * other.amps_[k];
    return total;
}

void StateVector::apply(const Gate& g) {
    const std::size_t bit = qubit_bit(g.target);
    const std::size_t dim = amps_.size();
    static const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    static const Amplitude t_phase = std::polar(1.0, std::numbers::pi / 4);
    const Amplitude i_unit{0.0, 1.0};

    auto diagonal = [&](Amplitude phase) {
        for (std::size_t k = 0; k < dim; ++k) {
            if (k & bit) amps_[k] *= phase;
        }
    };

    switch (g.kind) {
        case GateKind::H:
            for (std::size_t k = 0; k < dim; ++k) {
                if (k & bit) continue;
                Amplitude lo = amps_[k];
                Amplitude hi = amps_[k | bit];
                amps_[k] = (lo + hi) * inv_sqrt2;
                amps_[k | bit] = (lo - hi) * inv_sqrt2;
            }
            break;
        case GateKind::S: diagonal(i_unit); break;
        case GateKind::T: diagonal(t_phase); break;
        case GateKind::TDG: diagonal(std::conj(t_phase)); break;
        case GateKind::Z: diagonal(-1.0); break;
        case GateKind::X:
            for (std::size_t k = 0; k < dim; ++k) {
                if (!(k & bit)) std::swap(amps_[k], amps_[k | bit]);
            }
            break;
        case GateKind::Y:
            // Y|0> = i|1>, Y|1> = -i|0>.
            for (std::size_t k = 0; k < dim; ++k) {
                if (k & bit) continue;
                Amplitude lo = amps_[k];
                Amplitude hi = amps_[k | bit];
                amps_[k] = -i_unit * hi;
                amps_[k | bit] = i_unit * lo;
            }
            break;
        case GateKind::CNOT: {
            const std::size_t target = qubit_bit(g.second);
            for (std::size_t k = 0; k < dim; ++k) {
                if ((k & bit) && !(k & target)) std::swap(amps_[k], amps_[k | target]);
            }
            break;
        }
    }
}

StateVector simulate_circuit(const Circuit& c, std::size_t cap) {
    StateVector psi(c.num_qubits(), cap);
    for (const auto& g : c.gates()) psi.apply(g);
    return psi;
}

// ---------------------------------------------------------------------------

CharacteristicDistribution::CharacteristicDistribution(std::size_t n, std::vector<double> p)
    : n_(n), p_(std::move(p)) {
    if (p_.size() != (std::size_t{1} << (2 * n))) {
        throw DimensionMismatch("characteristic distribution needs 4^n entries");
    }
    cdf_.resize(p_.size());
    double running = 0.0;
    for (std::size_t i = 0; i < p_.size(); ++i) {
        if (p_[i] < 0.0) throw std::invalid_argument("negative probability");
        running += p_[i];
        cdf_[i] = running;
    }
    if (running <= 0.0) throw std::invalid_argument("distribution has zero mass");
}

double CharacteristicDistribution::operator()(const SympVec& x) const {
    if (x.num_qubits() != n_) throw DimensionMismatch("point on the wrong number of qubits");
    return p_[weyl_index(x)];
}

std::size_t CharacteristicDistribution::locate(double mass) const {
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), mass);
    if (it == cdf_.end()) --it;
    // Skip zero-probability entries that share the same cumulative value.
    auto idx = static_cast<std::size_t>(it - cdf_.begin());
    while (p_[idx] == 0.0 && idx > 0) --idx;
    return idx;
}

CharacteristicDistribution characteristic_distribution(const StateVector& psi, std::size_t cap) {
    const std::size_t n = psi.num_qubits();
    check_dense_cap(n, cap);
    auto table = weyl_expectation_table(psi);
    const double scale = std::ldexp(1.0, -static_cast<int>(n));
    for (auto& v : table) v = scale * v * v;
    return CharacteristicDistribution(n, std::move(table));
}

std::vector<SympVec> bell_difference_sample(const CharacteristicDistribution& p,
                                            std::mt19937_64& rng, std::size_t count) {
    std::vector<SympVec> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t first = p.draw_index(rng);
        std::size_t second = p.draw_index(rng);
        out.push_back(weyl_from_index(first ^ second, p.num_qubits()));
    }
    return out;
}

// ---------------------------------------------------------------------------

double entanglement_entropy_oracle(const StateVector& psi, const Cut& cut, std::size_t cap) {
    const std::size_t n = psi.num_qubits();
    check_dense_cap(n, cap);
    if (cut.num_qubits() != n) throw DimensionMismatch("cut and state disagree on n");

    const auto& side_a = cut.a();
    const auto& side_b = cut.b();
    const std::size_t rows = std::size_t{1} << side_a.size();
    const std::size_t cols = std::size_t{1} << side_b.size();

    // M[i][j] = <i_A j_B | psi>, with the first listed qubit of each side as the
    // most significant bit of i (resp. j).
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows),
                                                static_cast<Eigen::Index>(cols));
    for (std::size_t k = 0; k < psi.dimension(); ++k) {
        std::size_t i = 0;
        for (std::size_t q : side_a) i = (i << 1) | ((k & psi.qubit_bit(q)) ? 1 : 0);
        std::size_t j = 0;
        for (std::size_t q : side_b) j = (j << 1) | ((k & psi.qubit_bit(q)) ? 1 : 0);
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = psi[k];
    }

    // Squared singular values of M are the eigenvalues of the smaller Gram matrix.
    Eigen::MatrixXcd gram = rows <= cols ? Eigen::MatrixXcd(m * m.adjoint())
                                         : Eigen::MatrixXcd(m.adjoint() * m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram, Eigen::EigenvaluesOnly);
    double entropy = 0.0;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        double lambda = solver.eigenvalues()[i];
        if (lambda < 1e-12) continue;
        entropy -= lambda * std::log2(lambda);
    }
    return std::max(entropy, 0.0);
}

}  // namespace stabent
