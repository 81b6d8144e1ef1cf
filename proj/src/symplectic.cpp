#include "stabent/symplectic.hpp"

#include <algorithm>
#include <bit>

namespace stabent {

namespace {

std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

void require_same_n(const SympVec& x, const SympVec& y) {
    if (x.num_qubits() != y.num_qubits()) {
        throw DimensionMismatch("symplectic vectors on " + std::to_string(x.num_qubits()) +
                                " and " + std::to_string(y.num_qubits()) + " qubits");
    }
}

std::vector<Word> qubit_mask(std::size_t n, std::span<const std::size_t> qubits) {
    std::vector<Word> mask(words_for(n), 0);
    for (std::size_t q : qubits) {
        if (q >= n) {
            throw std::out_of_range("qubit index " + std::to_string(q) + " outside [0, " +
                                    std::to_string(n) + ")");
        }
        mask[q / kWordBits] |= Word{1} << (q % kWordBits);
    }
    return mask;
}

}  // namespace

SympVec::SympVec(std::size_t n) : n_(n), half_(words_for(n)), words_(2 * half_, 0) {}

SympVec SympVec::from_bits(std::span<const int> a, std::span<const int> b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("x-part and z-part lengths differ");
    }
    SympVec v(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        v.set_x(i, a[i] != 0);
        v.set_z(i, b[i] != 0);
    }
    return v;
}

SympVec SympVec::from_pauli(std::string_view pauli) {
    SympVec v(pauli.size());
    for (std::size_t i = 0; i < pauli.size(); ++i) {
        switch (pauli[i]) {
            case 'I': break;
            case 'X': v.set_x(i, true); break;
            case 'Z': v.set_z(i, true); break;
            case 'Y':
                v.set_x(i, true);
                v.set_z(i, true);
                break;
            default:
                throw std::invalid_argument(std::string("invalid Pauli character '") + pauli[i] +
                                            "'");
        }
    }
    return v;
}

SympVec SympVec::x_on(std::size_t n, std::size_t qubit) {
    SympVec v(n);
    v.set_x(qubit, true);
    return v;
}

SympVec SympVec::z_on(std::size_t n, std::size_t qubit) {
    SympVec v(n);
    v.set_z(qubit, true);
    return v;
}

bool SympVec::is_zero() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::size_t SympVec::lowest_set() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] != 0) {
            std::size_t bit = static_cast<std::size_t>(std::countr_zero(words_[w]));
            return w < half_ ? w * kWordBits + bit : n_ + (w - half_) * kWordBits + bit;
        }
    }
    return size();
}

std::size_t SympVec::weight() const noexcept {
    std::size_t total = 0;
    for (std::size_t w = 0; w < half_; ++w) {
        total += static_cast<std::size_t>(std::popcount(words_[w] | words_[w + half_]));
    }
    return total;
}

bool SympVec::supported_within(std::span<const Word> qubit_mask) const noexcept {
    for (std::size_t w = 0; w < half_; ++w) {
        if ((words_[w] | words_[w + half_]) & ~qubit_mask[w]) {
            return false;
        }
    }
    return true;
}

SympVec& SympVec::operator^=(const SympVec& other) {
    require_same_n(*this, other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] ^= other.words_[w];
    }
    return *this;
}

SympVec& SympVec::operator&=(const SympVec& other) {
    require_same_n(*this, other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] &= other.words_[w];
    }
    return *this;
}

SympVec SympVec::swapped_halves() const {
    SympVec out(n_);
    std::copy(words_.begin(), words_.begin() + half_, out.words_.begin() + half_);
    std::copy(words_.begin() + half_, words_.end(), out.words_.begin());
    return out;
}

std::string SympVec::to_pauli() const {
    std::string s(n_, 'I');
    for (std::size_t i = 0; i < n_; ++i) {
        bool a = x(i);
        bool b = z(i);
        s[i] = a ? (b ? 'Y' : 'X') : (b ? 'Z' : 'I');
    }
    return s;
}

bool symplectic_product(const SympVec& x, const SympVec& y) {
    require_same_n(x, y);
    auto xa = x.x_words();
    auto xb = x.z_words();
    auto ya = y.x_words();
    auto yb = y.z_words();
    Word acc = 0;
    for (std::size_t w = 0; w < xa.size(); ++w) {
        acc ^= (xa[w] & yb[w]) ^ (xb[w] & ya[w]);
    }
    return std::popcount(acc) & 1;
}

// ---------------------------------------------------------------------------

Subspace Subspace::full(std::size_t n) {
    Subspace s(n);
    for (std::size_t i = 0; i < 2 * n; ++i) {
        SympVec v(n);
        v.set(i, true);
        s.rows_.push_back(std::move(v));
        s.pivots_.push_back(i);
    }
    return s;
}

SympVec Subspace::reduce(SympVec v) const {
    if (v.num_qubits() != n_) {
        throw DimensionMismatch("vector on " + std::to_string(v.num_qubits()) +
                                " qubits reduced against a subspace of F_2^{2*" +
                                std::to_string(n_) + "}");
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (v.get(pivots_[i])) {
            v ^= rows_[i];
        }
    }
    return v;
}

bool Subspace::contains(const SympVec& v) const { return reduce(v).is_zero(); }

bool Subspace::insert(SympVec v) {
    v = reduce(std::move(v));
    if (v.is_zero()) {
        return false;
    }
    std::size_t pivot = v.lowest_set();
    for (auto& row : rows_) {
        if (row.get(pivot)) {
            row ^= v;
        }
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    auto offset = pos - pivots_.begin();
    pivots_.insert(pos, pivot);
    rows_.insert(rows_.begin() + offset, std::move(v));
    return true;
}

bool Subspace::is_subspace_of(const Subspace& other) const {
    return std::all_of(rows_.begin(), rows_.end(),
                       [&](const SympVec& r) { return other.contains(r); });
}

// ---------------------------------------------------------------------------

Cut::Cut(std::size_t n, std::vector<std::size_t> side_a) : n_(n), a_(std::move(side_a)) {
    std::sort(a_.begin(), a_.end());
    if (std::adjacent_find(a_.begin(), a_.end()) != a_.end()) {
        throw std::invalid_argument("cut side lists a qubit twice");
    }
    if (!a_.empty() && a_.back() >= n) {
        throw std::out_of_range("cut qubit " + std::to_string(a_.back()) + " outside [0, " +
                                std::to_string(n) + ")");
    }
    for (std::size_t q = 0, j = 0; q < n; ++q) {
        if (j < a_.size() && a_[j] == q) {
            ++j;
        } else {
            b_.push_back(q);
        }
    }
}

Cut Cut::swapped() const { return Cut(n_, b_); }

// ---------------------------------------------------------------------------

Subspace span(std::span<const SympVec> vectors, std::size_t n) {
    Subspace s(n);
    for (const auto& v : vectors) {
        if (s.rank() == 2 * n) {
            // Still validate the remaining inputs.
            if (v.num_qubits() != n) {
                throw DimensionMismatch("span input on the wrong number of qubits");
            }
            continue;
        }
        s.insert(v);
    }
    return s;
}

Subspace symplectic_complement(const Subspace& t) {
    const std::size_t n = t.num_qubits();
    // Kernel of the matrix whose rows are the basis vectors with halves swapped:
    // [t, v] = <swap(t), v> under the ordinary dot product.
    std::vector<SympVec> swapped;
    swapped.reserve(t.rank());
    for (const auto& row : t.basis()) {
        swapped.push_back(row.swapped_halves());
    }
    Subspace m = span(swapped, n);

    std::vector<bool> is_pivot(2 * n, false);
    for (std::size_t p : m.pivots()) {
        is_pivot[p] = true;
    }
    Subspace kernel(n);
    for (std::size_t col = 0; col < 2 * n; ++col) {
        if (is_pivot[col]) {
            continue;
        }
        SympVec k(n);
        k.set(col, true);
        for (std::size_t i = 0; i < m.rank(); ++i) {
            if (m.basis()[i].get(col)) {
                k.set(m.pivots()[i], true);
            }
        }
        kernel.insert(std::move(k));
    }
    return kernel;
}

Subspace restrict_to_cut(const Subspace& s, std::span<const std::size_t> side) {
    const std::size_t n = s.num_qubits();
    auto inside = qubit_mask(n, side);
    SympVec outside(n);
    for (std::size_t q = 0; q < n; ++q) {
        if (!((inside[q / kWordBits] >> (q % kWordBits)) & 1u)) {
            outside.set_x(q, true);
            outside.set_z(q, true);
        }
    }

    // Eliminate on the out-of-side coordinates while carrying the full vector.
    // Rows whose out-of-side part cancels lie in the restriction.
    struct Entry {
        SympVec masked;
        SympVec full;
        std::size_t pivot;
    };
    std::vector<Entry> echelon;
    Subspace result(n);
    for (const auto& row : s.basis()) {
        SympVec masked = row;
        masked &= outside;
        SympVec full = row;
        for (const auto& e : echelon) {
            if (masked.get(e.pivot)) {
                masked ^= e.masked;
                full ^= e.full;
            }
        }
        if (masked.is_zero()) {
            result.insert(std::move(full));
        } else {
            std::size_t pivot = masked.lowest_set();
            echelon.push_back({std::move(masked), std::move(full), pivot});
        }
    }
    return result;
}

bool is_isotropic(const Subspace& s) {
    const auto& rows = s.basis();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            if (symplectic_product(rows[i], rows[j])) {
                return false;
            }
        }
    }
    return true;
}

SymplecticDecomposition extract_symplectic_subspace(const Subspace& s) {
    const std::size_t n = s.num_qubits();
    std::vector<SympVec> current = s.basis();
    std::vector<SymplecticPair> pairs;

    for (;;) {
        std::size_t ei = current.size();
        std::size_t fi = current.size();
        for (std::size_t i = 0; i < current.size() && ei == current.size(); ++i) {
            for (std::size_t j = 0; j < current.size(); ++j) {
                if (symplectic_product(current[i], current[j])) {
                    ei = i;
                    fi = j;
                    break;
                }
            }
        }
        if (ei == current.size()) {
            break;
        }
        SympVec e = current[ei];
        SympVec f = current[fi];
        std::vector<SympVec> next;
        next.reserve(current.size() - 2);
        for (std::size_t i = 0; i < current.size(); ++i) {
            if (i == ei || i == fi) {
                continue;
            }
            // Project onto <e, f>^perp; stays inside S since e, f are in S.
            SympVec v = current[i];
            bool ve = symplectic_product(v, e);
            bool vf = symplectic_product(v, f);
            if (ve) v ^= f;
            if (vf) v ^= e;
            next.push_back(std::move(v));
        }
        pairs.push_back({std::move(e), std::move(f)});
        current = std::move(next);
    }
    return {std::move(pairs), span(current, n)};
}

}  // namespace stabent
