#include "stabent/tableau.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "stabent/random_circuits.hpp"
#include "dense_oracle.hpp"
#include "test_util.hpp"

using namespace stabent;
using namespace stabent::testing;

namespace {

std::vector<std::string> rows(const Tableau& t) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < t.num_qubits(); ++i) {
        out.push_back((t.signs()[i] ? "-" : "+") + t.generators()[i].to_pauli());
    }
    return out;
}

}  // namespace

TEST(Tableau, Examples) {
    EXPECT_EQ(rows(Tableau(2)), (std::vector<std::string>{"+ZI", "+IZ"}));
    EXPECT_EQ(rows(simulate_clifford(parse_circuit("qubits 1\nH 1\n"))),
              (std::vector<std::string>{"+X"}));
    EXPECT_EQ(rows(simulate_clifford(parse_circuit("qubits 1\nX 1\n"))),
              (std::vector<std::string>{"-Z"}));
    EXPECT_EQ(rows(simulate_clifford(parse_circuit("qubits 1\nH 1\nS 1\n"))),
              (std::vector<std::string>{"+Y"}));

    auto epr = weyl_group_from_tableau(simulate_clifford(parse_circuit("qubits 2\nH 1\nCNOT 1 2\n")));
    std::vector<SympVec> gens{SympVec::from_pauli("XX"), SympVec::from_pauli("ZZ")};
    EXPECT_EQ(epr.group, span(gens, 2));
    EXPECT_EQ(epr.provenance, Provenance::Tableau);

    EXPECT_THROW(simulate_clifford(parse_circuit("qubits 1\nT 1\n")), CircuitError);
}

TEST(Tableau, RowsStayIndependentAndCommuting) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 1 + rng() % 70;
        Tableau t(n);
        Circuit c = random_clifford_circuit(n, 4 * n, rng);
        for (const auto& g : c.gates()) {
            t.apply(g);
        }
        Subspace s = span(t.generators(), n);
        EXPECT_EQ(s.rank(), n);
        EXPECT_TRUE(is_isotropic(s));
    }
}

TEST(Tableau, SignedRowsStabilizeDenseState) {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 1 + rng() % 4;
        Circuit c = random_clifford_circuit(n, 8 * n, rng);
        Tableau t = simulate_clifford(c);
        auto ref = reference_state(c);
        for (std::size_t i = 0; i < n; ++i) {
            Cx e = expectation(pauli_matrix(t.generators()[i]), ref);
            EXPECT_NEAR(e.real(), t.signs()[i] ? -1.0 : 1.0, 1e-9);
        }
    }
}

TEST(ConjugateVector, LinearAndSymplectic) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + rng() % 10;
        Circuit c = random_clifford_circuit(n, 5 * n, rng);
        SympVec x = random_vec(n, rng);
        SympVec y = random_vec(n, rng);
        SympVec cx = conjugate_vector(c, x);
        SympVec cy = conjugate_vector(c, y);
        EXPECT_EQ(conjugate_vector(c, x ^ y), cx ^ cy);
        EXPECT_EQ(symplectic_product(cx, cy), symplectic_product(x, y));
    }
}

TEST(ConjugateVector, MatchesDenseConjugation) {
    // U W_x U^dagger is +- W_{C(x)}.
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 1 + rng() % 3;
        Circuit c = random_clifford_circuit(n, 6 * n, rng);
        SympVec x = random_vec(n, rng);
        Matrix u = identity(std::size_t{1} << n);
        for (const auto& g : c.gates()) {
            Matrix gm = gate_matrix(g, n);
            Matrix next{u.dim, std::vector<Cx>(u.m.size())};
            for (std::size_t r = 0; r < u.dim; ++r)
                for (std::size_t k = 0; k < u.dim; ++k)
                    for (std::size_t col = 0; col < u.dim; ++col) next(r, col) += gm(r, k) * u(k, col);
            u = next;
        }
        Matrix px = pauli_matrix(x);
        Matrix py = pauli_matrix(conjugate_vector(c, x));
        // tr(W_{C(x)} U W_x U^dagger) = +- 2^n.
        Cx tr = 0;
        for (std::size_t a = 0; a < u.dim; ++a)
            for (std::size_t b = 0; b < u.dim; ++b)
                for (std::size_t d = 0; d < u.dim; ++d)
                    for (std::size_t e = 0; e < u.dim; ++e)
                        tr += py(a, b) * u(b, d) * px(d, e) * std::conj(u(a, e));
        EXPECT_NEAR(std::abs(tr), static_cast<double>(u.dim), 1e-9);
    }
}
