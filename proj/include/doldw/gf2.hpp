// gf2.hpp -- exact linear algebra over GF(2) on small coordinate spaces.
//
// Coordinate vectors are single machine words (one bit per basis monomial),
// which caps ambient dimensions at 64; the degrees handled here stay far
// below that.  Every subspace is kept in canonical reduced echelon form so
// that equality of subspaces is structural equality.

#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "space.hpp"

namespace doldw {

using Word = std::uint64_t;

inline void check_width(int cols) {
    if (cols < 0 || cols > 64)
        throw std::domain_error("degree too large for bitset backend");
}

struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<Word> row;  // row[r] bit j == entry (r, j)

    Mat(int rows, int cols) : rows(rows), cols(cols), row(rows, 0) { check_width(cols); }

    void set(int r, int c) { row[r] |= Word(1) << c; }
    bool get(int r, int c) const { return (row[r] >> c) & 1; }

    static Mat identity(int d) {
        Mat m(d, d);
        for (int i = 0; i < d; ++i) m.set(i, i);
        return m;
    }
};

// Canonical reduced echelon form; pivot of a row is its lowest set bit and
// rows come back sorted by pivot.  Unique per subspace.
inline std::vector<Word> rref(const std::vector<Word>& vectors) {
    Word piv[64] = {};
    for (Word v : vectors) {
        while (v) {
            int b = std::countr_zero(v);
            if (piv[b]) {
                v ^= piv[b];
            } else {
                piv[b] = v;
                break;
            }
        }
    }
    for (int b = 0; b < 64; ++b) {
        if (!piv[b]) continue;
        for (int q = 0; q < 64; ++q)
            if (q != b && piv[q] && ((piv[q] >> b) & 1)) piv[q] ^= piv[b];
    }
    std::vector<Word> out;
    for (int b = 0; b < 64; ++b)
        if (piv[b]) out.push_back(piv[b]);
    return out;
}

// A subspace of the degree-p cohomology of a fixed model, relative to the
// basis(model, degree) coordinate order.
struct Subspace {
    SpaceModel model;
    int degree = 0;
    int width = 0;            // |basis(model, degree)|
    std::vector<Word> rows;   // canonical echelon basis

    int dim() const noexcept { return static_cast<int>(rows.size()); }
    bool is_zero() const noexcept { return rows.empty(); }

    static Subspace zero_space(const SpaceModel& model, int deg) {
        int w = static_cast<int>(basis(model, deg).size());
        check_width(w);
        return {model, deg, w, {}};
    }
    static Subspace full(const SpaceModel& model, int deg) {
        Subspace s = zero_space(model, deg);
        for (int j = 0; j < s.width; ++j) s.rows.push_back(Word(1) << j);
        return s;
    }

    bool contains(Word v) const {
        for (Word r : rows) {
            Word low = r & ~(r - 1);  // pivot bit
            if (v & low) v ^= r;
        }
        return v == 0;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.model == b.model && a.degree == b.degree && a.width == b.width &&
               a.rows == b.rows;
    }
};

// Null space {v : Mv = 0}, canonical basis.
inline Subspace kernel(const Mat& m, const SpaceModel& model, int degree) {
    std::vector<Word> ech = rref(m.row);
    Word pivot_mask = 0;
    for (Word r : ech) pivot_mask |= r & ~(r - 1);

    std::vector<Word> basis_vectors;
    for (int f = 0; f < m.cols; ++f) {
        if ((pivot_mask >> f) & 1) continue;  // pivot columns are bound
        Word v = Word(1) << f;
        for (Word r : ech)
            if ((r >> f) & 1) v |= r & ~(r - 1);
        basis_vectors.push_back(v);
    }
    return {model, degree, m.cols, rref(basis_vectors)};
}

inline Subspace intersect(const Subspace& a, const Subspace& b) {
    if (!(a.model == b.model) || a.degree != b.degree || a.width != b.width)
        throw std::invalid_argument("ambient mismatch");

    // Zassenhaus: reduce rows (v|v) for v in A and (w|0) for w in B; the
    // right halves of rows whose left half vanished span the intersection.
    struct Row2 {
        Word left, right;
    };
    std::vector<Row2> piv(128, Row2{0, 0});
    auto lowest = [](const Row2& r) {
        return r.left ? std::countr_zero(r.left) : 64 + std::countr_zero(r.right);
    };
    auto insert = [&](Row2 v) {
        while (v.left || v.right) {
            int b = lowest(v);
            if (piv[b].left || piv[b].right) {
                v.left ^= piv[b].left;
                v.right ^= piv[b].right;
            } else {
                piv[b] = v;
                return;
            }
        }
    };
    for (Word v : a.rows) insert({v, v});
    for (Word w : b.rows) insert({w, 0});

    std::vector<Word> inter;
    for (int b = 64; b < 128; ++b)
        if (piv[b].right) inter.push_back(piv[b].right);
    return {a.model, a.degree, a.width, rref(inter)};
}

// ---- coordinates ------------------------------------------------------------

inline Word class_to_vector(const CohomologyClass& a, const std::vector<Monomial>& basis_list) {
    check_width(static_cast<int>(basis_list.size()));
    Word v = 0;
    for (const auto& t : a.terms()) {
        auto it = std::lower_bound(basis_list.begin(), basis_list.end(), t, term_less);
        if (it == basis_list.end() || !(*it == t))
            throw std::invalid_argument("class has a term outside the basis: " + render_monomial(t));
        v |= Word(1) << (it - basis_list.begin());
    }
    return v;
}

inline CohomologyClass vector_to_class(Word v, const std::vector<Monomial>& basis_list) {
    CohomologyClass out;
    while (v) {
        int b = std::countr_zero(v);
        v &= v - 1;
        out.toggle(basis_list.at(b));
    }
    return out;
}

}  // namespace doldw
