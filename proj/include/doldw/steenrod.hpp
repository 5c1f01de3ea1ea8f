// steenrod.hpp -- Steenrod squares on the mod-2 cohomology models.
//
// Two independent evaluation paths are provided on purpose:
//   * sq()        -- closed-form coefficient formula, term by term;
//   * total_sq()  -- multiplicative expansion of the total square from the
//                    generator values Sq(c) = c + c^2, Sq(d) = d + cd + d^2.
// The test suite checks them against each other; the engine itself only
// calls sq() / sq_matrix().

#pragma once

#include <cstdint>
#include <vector>

#include "gf2.hpp"
#include "space.hpp"

namespace doldw {

// C(a, b) mod 2 by Lucas: odd iff the base-2 digits of b sit inside those of a.
inline bool binom_odd(long long a, long long b) {
    if (b < 0 || a < 0 || b > a) return false;
    return (static_cast<unsigned long long>(a) & static_cast<unsigned long long>(b)) ==
           static_cast<unsigned long long>(b);
}

// b! / ((b-q-r)! q! r!) mod 2: split the trinomial as C(b,q) * C(b-q,r).
inline bool multinom_odd(long long b, long long q, long long r) {
    if (q < 0 || r < 0 || q + r > b) return false;
    return binom_odd(b, q) && binom_odd(b - q, r);
}

// Sq^i(c^a d^b) = sum over u+q+2r = i of C(a,u)*M(b;q,r) * c^(a+u+q) d^(b+r).
// Distinct (u,q,r) can hit the same target monomial, so contributions are
// XOR-accumulated before any truncation; a term whose target falls outside
// the model is dropped on its own (truncated ring), not cancelled.
inline CohomologyClass sq(int i, const CohomologyClass& a, const SpaceModel& model) {
    check_valid(a, model);
    if (i < 0) return CohomologyClass::zero();
    if (i == 0) return a;

    CohomologyClass out;
    for (const auto& t : a.terms()) {
        // collect this monomial's image with cancellation, then truncate
        CohomologyClass image;
        for (int r = 0; 2 * r <= i; ++r) {
            for (int q = 0; q + 2 * r <= i; ++q) {
                int u = i - q - 2 * r;
                if (!binom_odd(t.ci, u)) continue;
                if (!multinom_odd(t.dj, q, r)) continue;
                image.toggle({t.ci + u + q, t.dj + r});
            }
        }
        for (const auto& s : image.terms())
            if (model.valid(s)) out.toggle(s);
    }
    return out;
}

// Total square Sq = Sq^0 + Sq^1 + ... via multiplicativity.  Stunted models
// carry no product, so the expansion runs in the ambient projective space and
// the surviving window is cut out afterwards.
inline CohomologyClass total_sq(const CohomologyClass& a, const SpaceModel& model) {
    check_valid(a, model);
    const bool stunted = model.is_stunted();
    const SpaceModel work = stunted ? SpaceModel::real_proj(model.m) : model;

    const CohomologyClass sq_c = parse_class("c + c^2");
    const CohomologyClass sq_d = stunted ? CohomologyClass::zero() : parse_class("d + c*d + d^2");

    CohomologyClass out;
    for (const auto& t : a.terms()) {
        CohomologyClass acc = CohomologyClass::unit();
        for (int p = 0; p < t.ci; ++p) acc = mul(acc, sq_c, work);
        for (int p = 0; p < t.dj; ++p) acc = mul(acc, sq_d, work);
        out += acc;
    }
    if (!stunted) return out;
    CohomologyClass cut;
    for (const auto& t : out.terms())
        if (model.valid(t)) cut.toggle(t);
    return cut;
}

// Matrix of Sq^i : H^degree -> H^(degree+i); column j is the image of the
// j-th basis monomial of the source.
inline Mat sq_matrix(const SpaceModel& model, int degree, int i) {
    const auto src = basis(model, degree);
    const auto dst = basis(model, degree + i);
    Mat m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (int j = 0; j < static_cast<int>(src.size()); ++j) {
        CohomologyClass image = sq(i, CohomologyClass::of(src[j]), model);
        Word col = class_to_vector(image, dst);
        for (int r = 0; r < m.rows; ++r)
            if ((col >> r) & 1) m.set(r, j);
    }
    return m;
}

}  // namespace doldw
