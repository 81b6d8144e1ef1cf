#pragma once

// Bit-packed linear algebra over F_2^{2n} with the standard symplectic form.
//
// A vector x = (a|b) stands for the Weyl operator with X-part a and Z-part b.
// Logical coordinates 0..n-1 are the a-part, n..2n-1 the b-part. Storage keeps
// the two halves word aligned: a occupies words [0, W) and b occupies words
// [W, 2W), W = ceil(n / 64). Padding bits are always zero.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stabent {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SympVec {
public:
    SympVec() = default;
    explicit SympVec(std::size_t n);

    // Builds (a|b) from two 0/1 sequences of length n.
    static SympVec from_bits(std::span<const int> a, std::span<const int> b);
    // Pauli-string form, qubit 1 first: I, X, Y (a=b=1), Z.
    static SympVec from_pauli(std::string_view pauli);
    static SympVec x_on(std::size_t n, std::size_t qubit);
    static SympVec z_on(std::size_t n, std::size_t qubit);

    std::size_t num_qubits() const noexcept { return n_; }
    std::size_t size() const noexcept { return 2 * n_; }
    std::size_t half_words() const noexcept { return half_; }

    // Logical coordinate access, 0 <= i < 2n.
    bool get(std::size_t i) const noexcept {
        auto [w, b] = locate(i);
        return (words_[w] >> b) & 1u;
    }
    void set(std::size_t i, bool value) noexcept {
        auto [w, b] = locate(i);
        if (value) {
            words_[w] |= Word{1} << b;
        } else {
            words_[w] &= ~(Word{1} << b);
        }
    }
    void flip(std::size_t i) noexcept {
        auto [w, b] = locate(i);
        words_[w] ^= Word{1} << b;
    }

    bool x(std::size_t qubit) const noexcept { return get(qubit); }
    bool z(std::size_t qubit) const noexcept { return get(n_ + qubit); }
    void set_x(std::size_t qubit, bool v) noexcept { set(qubit, v); }
    void set_z(std::size_t qubit, bool v) noexcept { set(n_ + qubit, v); }

    bool is_zero() const noexcept;
    // Smallest logical coordinate that is set, or size() if zero.
    std::size_t lowest_set() const noexcept;
    std::size_t weight() const noexcept;
    // Support on qubits: qubit i is in the support if a_i or b_i is set.
    bool supported_within(std::span<const Word> qubit_mask) const noexcept;

    SympVec& operator^=(const SympVec& other);
    friend SympVec operator^(SympVec lhs, const SympVec& rhs) {
        lhs ^= rhs;
        return lhs;
    }
    SympVec& operator&=(const SympVec& other);
    friend bool operator==(const SympVec&, const SympVec&) = default;

    // (a|b) -> (b|a).
    SympVec swapped_halves() const;

    std::span<const Word> words() const noexcept { return words_; }
    std::span<const Word> x_words() const noexcept { return {words_.data(), half_}; }
    std::span<const Word> z_words() const noexcept { return {words_.data() + half_, half_}; }

    std::string to_pauli() const;

private:
    std::pair<std::size_t, unsigned> locate(std::size_t i) const noexcept {
        std::size_t half = i < n_ ? 0 : 1;
        std::size_t j = i - half * n_;
        return {half * half_ + j / kWordBits, static_cast<unsigned>(j % kWordBits)};
    }

    std::size_t n_ = 0;
    std::size_t half_ = 0;
    std::vector<Word> words_;
};

// [x, y] = sum_i x.a_i y.b_i + x.b_i y.a_i (mod 2).
bool symplectic_product(const SympVec& x, const SympVec& y);

// A subspace of F_2^{2n}, stored as a reduced row-echelon basis with pivot
// columns ascending. Two subspaces are equal iff their bases are equal.
class Subspace {
public:
    explicit Subspace(std::size_t n) : n_(n) {}

    static Subspace zero(std::size_t n) { return Subspace(n); }
    static Subspace full(std::size_t n);

    std::size_t num_qubits() const noexcept { return n_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    const std::vector<SympVec>& basis() const noexcept { return rows_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    bool contains(const SympVec& v) const;
    // Reduces v against the basis. Returns the remainder, zero iff v is in the span.
    SympVec reduce(SympVec v) const;

    // Adds v to the span, keeping reduced echelon form. Returns false if v was
    // already in the span.
    bool insert(SympVec v);

    bool is_subspace_of(const Subspace& other) const;
    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

private:
    std::size_t n_;
    std::vector<SympVec> rows_;
    std::vector<std::size_t> pivots_;
};

// Qubit bipartition A | B of {0, ..., n-1}. Indices are zero based.
class Cut {
public:
    Cut() : Cut(0, {}) {}
    Cut(std::size_t n, std::vector<std::size_t> side_a);

    std::size_t num_qubits() const noexcept { return n_; }
    const std::vector<std::size_t>& a() const noexcept { return a_; }
    const std::vector<std::size_t>& b() const noexcept { return b_; }
    Cut swapped() const;

private:
    std::size_t n_;
    std::vector<std::size_t> a_;
    std::vector<std::size_t> b_;
};

// Span of the vectors. All must share the qubit count n.
Subspace span(std::span<const SympVec> vectors, std::size_t n);

// T^perp = { v : [t, v] = 0 for all t in T }.
Subspace symplectic_complement(const Subspace& t);

// S_side: elements of S acting trivially on every qubit outside `side`.
Subspace restrict_to_cut(const Subspace& s, std::span<const std::size_t> side);

bool is_isotropic(const Subspace& s);

struct SymplecticPair {
    SympVec e;
    SympVec f;
};

struct SymplecticDecomposition {
    std::vector<SymplecticPair> pairs;
    Subspace residual;
};

// Greedy symplectic Gram-Schmidt. The pairs form a symplectic basis of a
// symplectic subspace of S and `residual` is an isotropic complement of it in S.
SymplecticDecomposition extract_symplectic_subspace(const Subspace& s);

}  // namespace stabent
