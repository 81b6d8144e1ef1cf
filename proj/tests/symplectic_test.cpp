#include "stabent/symplectic.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "stabent/tableau.hpp"
#include "stabent/random_circuits.hpp"
#include "test_util.hpp"

using namespace stabent;
using namespace stabent::testing;

namespace {

SympVec P(const char* s) { return SympVec::from_pauli(s); }

}  // namespace

TEST(SympVec, PauliRoundTripAndLayout) {
    SympVec v = P("XZIY");
    EXPECT_EQ(v.to_pauli(), "XZIY");
    EXPECT_TRUE(v.x(0));
    EXPECT_FALSE(v.z(0));
    EXPECT_TRUE(v.z(1));
    EXPECT_TRUE(v.x(3) && v.z(3));
    EXPECT_EQ(v.weight(), 3u);
    EXPECT_THROW(SympVec::from_pauli("XQ"), std::invalid_argument);

    // Halves are word aligned: a in the first W words, b in the next W.
    SympVec wide(70);
    wide.set_z(69, true);
    ASSERT_EQ(wide.words().size(), 4u);
    EXPECT_EQ(wide.words()[3], Word{1} << 5);
    EXPECT_EQ(wide.lowest_set(), 70u + 69u);
}

TEST(SympVec, PaddingStaysZero) {
    std::mt19937_64 rng(7);
    for (std::size_t n : {1u, 5u, 63u, 64u, 65u, 130u}) {
        SympVec v = random_vec(n, rng) ^ random_vec(n, rng);
        v = v.swapped_halves();
        std::size_t tail = n % kWordBits;
        if (tail == 0) continue;
        Word pad = ~((Word{1} << tail) - 1);
        EXPECT_EQ(v.x_words().back() & pad, 0u);
        EXPECT_EQ(v.z_words().back() & pad, 0u);
    }
}

TEST(SymplecticProduct, Examples) {
    EXPECT_TRUE(symplectic_product(P("X"), P("Z")));
    EXPECT_FALSE(symplectic_product(P("XX"), P("ZZ")));
    std::mt19937_64 rng(1);
    for (int i = 0; i < 50; ++i) {
        auto x = random_vec(9, rng);
        EXPECT_FALSE(symplectic_product(x, x));
    }
    EXPECT_THROW(symplectic_product(P("X"), P("XX")), DimensionMismatch);
}

TEST(SymplecticProduct, BilinearSymmetricAndMatchesBruteForce) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t n = 1 + rng() % 150;
        auto x = random_vec(n, rng);
        auto y = random_vec(n, rng);
        auto z = random_vec(n, rng);
        EXPECT_EQ(symplectic_product(x ^ y, z),
                  symplectic_product(x, z) != symplectic_product(y, z));
        EXPECT_EQ(symplectic_product(x, y), symplectic_product(y, x));
        if (n <= 16) {
            EXPECT_EQ(symplectic_product(x, y), brute_product(to_point(x), to_point(y)) == 1);
        }
    }
}

TEST(Span, Examples) {
    std::vector<SympVec> dup{P("X"), P("X")};
    EXPECT_EQ(span(dup, 1).rank(), 1u);
    std::vector<SympVec> three{P("X"), P("Z"), P("Y")};
    EXPECT_EQ(span(three, 1).rank(), 2u);
    EXPECT_EQ(span(std::vector<SympVec>{}, 3).rank(), 0u);
}

TEST(Span, ReducedEchelonIsCanonical) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + rng() % 5;
        Subspace s = random_subspace(n, rng);
        // Every pivot column is zero in the other rows and pivots ascend.
        for (std::size_t i = 0; i < s.rank(); ++i) {
            EXPECT_EQ(s.basis()[i].lowest_set(), s.pivots()[i]);
            if (i > 0) {
                EXPECT_LT(s.pivots()[i - 1], s.pivots()[i]);
            }
            for (std::size_t j = 0; j < s.rank(); ++j) {
                if (j != i) {
                    EXPECT_FALSE(s.basis()[j].get(s.pivots()[i]));
                }
            }
        }
        // Same span from a shuffled, padded generating set gives the same basis.
        std::vector<SympVec> gens = s.basis();
        for (std::size_t i = 0; i + 1 < gens.size(); ++i) gens[i] ^= gens[i + 1];
        if (!gens.empty()) gens.push_back(gens.front() ^ gens.back());
        std::shuffle(gens.begin(), gens.end(), rng);
        EXPECT_EQ(span(gens, n), s);
        EXPECT_EQ(enumerate(s).size(), std::size_t{1} << s.rank());
    }
}

TEST(SymplecticComplement, Examples) {
    std::vector<SympVec> x{P("X")};
    EXPECT_EQ(symplectic_complement(span(x, 1)), span(x, 1));
    EXPECT_EQ(symplectic_complement(Subspace::zero(4)), Subspace::full(4));
    EXPECT_EQ(symplectic_complement(Subspace::full(4)).rank(), 0u);
}

TEST(SymplecticComplement, MatchesEnumeration) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 1 + rng() % 4;
        Subspace t = random_subspace(n, rng);
        Subspace perp = symplectic_complement(t);
        std::set<Point> expected;
        for (const auto& v : all_points(n)) {
            bool orth = true;
            for (const auto& row : t.basis()) orth &= brute_product(to_point(row), v) == 0;
            if (orth) expected.insert(v);
        }
        EXPECT_EQ(enumerate(perp), expected);
        EXPECT_EQ(t.rank() + perp.rank(), 2 * n);
        EXPECT_EQ(symplectic_complement(perp), t);
    }
}

TEST(SymplecticComplement, LargeN) {
    std::mt19937_64 rng(5);
    for (std::size_t n : {63u, 64u, 100u}) {
        Subspace t = random_subspace(n, rng, static_cast<int>(n / 2));
        Subspace perp = symplectic_complement(t);
        EXPECT_EQ(t.rank() + perp.rank(), 2 * n);
        for (const auto& u : t.basis()) {
            for (const auto& v : perp.basis()) EXPECT_FALSE(symplectic_product(u, v));
        }
        EXPECT_EQ(symplectic_complement(perp), t);
    }
}

TEST(RestrictToCut, Examples) {
    std::vector<SympVec> epr{P("XX"), P("ZZ")};
    std::vector<std::size_t> first{0};
    EXPECT_EQ(restrict_to_cut(span(epr, 2), first).rank(), 0u);

    std::vector<SympVec> zs{P("ZII"), P("IZI"), P("IIZ")};
    Subspace zr = restrict_to_cut(span(zs, 3), first);
    ASSERT_EQ(zr.rank(), 1u);
    EXPECT_EQ(zr.basis()[0].to_pauli(), "ZII");

    std::mt19937_64 rng(6);
    Subspace s = random_subspace(4, rng, 5);
    std::vector<std::size_t> all{0, 1, 2, 3};
    EXPECT_EQ(restrict_to_cut(s, all), s);
}

TEST(RestrictToCut, MatchesEnumeration) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 1 + rng() % 4;
        Subspace s = random_subspace(n, rng);
        std::vector<std::size_t> side;
        std::uint32_t mask = 0;
        for (std::size_t q = 0; q < n; ++q) {
            if (rng() & 1) {
                side.push_back(q);
                mask |= 1u << q;
            }
        }
        Subspace r = restrict_to_cut(s, side);
        std::set<Point> expected;
        for (const auto& e : enumerate(s)) {
            if (((e.a | e.b) & ~mask) == 0) expected.insert(e);
        }
        EXPECT_EQ(enumerate(r), expected);
        EXPECT_TRUE(r.is_subspace_of(s));
    }
}

TEST(IsIsotropic, Examples) {
    std::vector<SympVec> epr{P("XX"), P("ZZ")};
    EXPECT_TRUE(is_isotropic(span(epr, 2)));
    std::vector<SympVec> xz{P("X"), P("Z")};
    EXPECT_FALSE(is_isotropic(span(xz, 1)));
    EXPECT_TRUE(is_isotropic(Subspace::zero(3)));
}

namespace {

void check_decomposition(const Subspace& s, const SymplecticDecomposition& d) {
    const auto& pairs = d.pairs;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (std::size_t j = 0; j < pairs.size(); ++j) {
            EXPECT_EQ(symplectic_product(pairs[i].e, pairs[j].f), i == j);
            EXPECT_FALSE(symplectic_product(pairs[i].e, pairs[j].e));
            EXPECT_FALSE(symplectic_product(pairs[i].f, pairs[j].f));
        }
        for (const auto& r : d.residual.basis()) {
            EXPECT_FALSE(symplectic_product(pairs[i].e, r));
            EXPECT_FALSE(symplectic_product(pairs[i].f, r));
        }
    }
    EXPECT_TRUE(is_isotropic(d.residual));
    std::vector<SympVec> all = d.residual.basis();
    for (const auto& p : pairs) {
        all.push_back(p.e);
        all.push_back(p.f);
    }
    Subspace spanned = span(all, s.num_qubits());
    EXPECT_EQ(spanned, s);
    EXPECT_EQ(2 * pairs.size() + d.residual.rank(), s.rank());
}

}  // namespace

TEST(ExtractSymplecticSubspace, Examples) {
    std::vector<SympVec> xz{P("X"), P("Z")};
    auto d = extract_symplectic_subspace(span(xz, 1));
    EXPECT_EQ(d.pairs.size(), 1u);
    EXPECT_EQ(d.residual.rank(), 0u);

    std::vector<SympVec> epr{P("XX"), P("ZZ")};
    Subspace iso = span(epr, 2);
    auto d2 = extract_symplectic_subspace(iso);
    EXPECT_TRUE(d2.pairs.empty());
    EXPECT_EQ(d2.residual, iso);

    // (10|00), (00|10), (01|00) = XI, ZI, IX.
    std::vector<SympVec> three{P("XI"), P("ZI"), P("IX")};
    Subspace s3 = span(three, 2);
    auto d3 = extract_symplectic_subspace(s3);
    EXPECT_GE(d3.pairs.size(), 1u);
    check_decomposition(s3, d3);
}

TEST(ExtractSymplecticSubspace, RandomSubspaces) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 1 + rng() % 6;
        Subspace s = random_subspace(n, rng);
        check_decomposition(s, extract_symplectic_subspace(s));
    }
}

TEST(ExtractSymplecticSubspace, PairCountInsideSymplecticSubspace) {
    // V = C(<X_1..X_v, Z_1..Z_v>) is symplectic of dimension 2v.
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 2 + rng() % 5;
        std::size_t v = 1 + rng() % n;
        Circuit c = random_clifford_circuit(n, 6 * n, rng);
        std::vector<SympVec> vbasis;
        for (std::size_t q = 0; q < v; ++q) {
            vbasis.push_back(conjugate_vector(c, SympVec::x_on(n, q)));
            vbasis.push_back(conjugate_vector(c, SympVec::z_on(n, q)));
        }
        std::vector<SympVec> gens;
        std::size_t count = rng() % (2 * v + 2);
        std::bernoulli_distribution coin(0.5);
        for (std::size_t i = 0; i < count; ++i) {
            SympVec g(n);
            for (const auto& b : vbasis) {
                if (coin(rng)) g ^= b;
            }
            gens.push_back(g);
        }
        Subspace s = span(gens, n);
        auto d = extract_symplectic_subspace(s);
        check_decomposition(s, d);
        if (s.rank() > v) {
            EXPECT_GE(d.pairs.size(), s.rank() - v);
        }
    }
}

TEST(Cut, Construction) {
    Cut cut(5, {3, 0});
    EXPECT_EQ(cut.a(), (std::vector<std::size_t>{0, 3}));
    EXPECT_EQ(cut.b(), (std::vector<std::size_t>{1, 2, 4}));
    EXPECT_EQ(cut.swapped().a(), cut.b());
    EXPECT_THROW(Cut(3, {0, 0}), std::invalid_argument);
    EXPECT_THROW(Cut(3, {3}), std::out_of_range);
}
