#pragma once

// Generators and brute-force oracles shared by the test suites. The oracles
// work on plain integers and never call the library's linear algebra.

#include <bit>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "stabent/circuit.hpp"
#include "stabent/statevector.hpp"
#include "stabent/symplectic.hpp"

namespace stabent::testing {

// A point of F_2^{2n} as two n-bit masks (bit q = qubit q). n <= 16.
struct Point {
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    friend auto operator<=>(const Point&, const Point&) = default;
};

inline Point to_point(const SympVec& v) {
    Point p;
    for (std::size_t q = 0; q < v.num_qubits(); ++q) {
        if (v.get(q)) p.a |= 1u << q;
        if (v.get(v.num_qubits() + q)) p.b |= 1u << q;
    }
    return p;
}

inline SympVec from_point(const Point& p, std::size_t n) {
    SympVec v(n);
    for (std::size_t q = 0; q < n; ++q) {
        if ((p.a >> q) & 1u) v.set(q, true);
        if ((p.b >> q) & 1u) v.set(n + q, true);
    }
    return v;
}

inline int brute_product(const Point& x, const Point& y) {
    return (std::popcount(x.a & y.b) + std::popcount(x.b & y.a)) & 1;
}

inline std::vector<Point> all_points(std::size_t n) {
    std::vector<Point> out;
    for (std::uint32_t a = 0; a < (1u << n); ++a) {
        for (std::uint32_t b = 0; b < (1u << n); ++b) out.push_back({a, b});
    }
    return out;
}

// Every element of the span of `gens`, by closure under addition.
inline std::set<Point> enumerate_span(const std::vector<Point>& gens) {
    std::set<Point> elems{Point{}};
    for (const auto& g : gens) {
        std::set<Point> next = elems;
        for (const auto& e : elems) next.insert({e.a ^ g.a, e.b ^ g.b});
        elems = std::move(next);
    }
    return elems;
}

inline std::set<Point> enumerate(const Subspace& s) {
    std::vector<Point> gens;
    for (const auto& row : s.basis()) gens.push_back(to_point(row));
    return enumerate_span(gens);
}

inline std::size_t log2_size(std::size_t count) {
    return static_cast<std::size_t>(std::countr_zero(count));
}

inline SympVec random_vec(std::size_t n, std::mt19937_64& rng) {
    SympVec v(n);
    std::bernoulli_distribution bit(0.5);
    for (std::size_t i = 0; i < 2 * n; ++i) v.set(i, bit(rng));
    return v;
}

// Span of `count` random vectors; count itself is random in [0, 2n] when < 0.
inline Subspace random_subspace(std::size_t n, std::mt19937_64& rng, int count = -1) {
    if (count < 0) count = std::uniform_int_distribution<int>(0, static_cast<int>(2 * n))(rng);
    std::vector<SympVec> gens;
    for (int i = 0; i < count; ++i) gens.push_back(random_vec(n, rng));
    return span(gens, n);
}

// Exact q(x) = sum_a p(a) p(x + a) over the 4^n table (index = a << n | b).
inline std::vector<double> convolve(const std::vector<double>& p) {
    std::vector<double> q(p.size(), 0.0);
    for (std::size_t x = 0; x < p.size(); ++x) {
        for (std::size_t a = 0; a < p.size(); ++a) q[x] += p[a] * p[x ^ a];
    }
    return q;
}

}  // namespace stabent::testing
