// obstruction.hpp -- the W-triviality certificate engine.
//
// Over a k-fold suspension the first nonzero Stiefel-Whitney class of any
// bundle sits in degree 2^s (a power of two) and, pulled back under the
// suspension isomorphism, is killed by every Sq^i with 0 < i < 2^{s-1}.
// For each admissible power the engine computes that space of surviving
// candidates; if every candidate space is zero (after sound restriction
// filters), no bundle can carry a first nonzero class, and the space is
// certified W-trivial.  An Inconclusive outcome decides nothing.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gf2.hpp"
#include "knowledge.hpp"
#include "space.hpp"
#include "steenrod.hpp"

namespace doldw {

enum class FilterTag { FiberCP };

inline const char* to_string(FilterTag t) {
    switch (t) {
        default: return "fiber-cp";
    }
}

struct AppliedFilter {
    FilterTag tag;
    std::string citation_id;    // justification of the elimination step itself
    std::string justification;  // why the filter is sound here (fact id or engine)
};

struct CandidateReport {
    int s = 0;
    int degree_downstairs = 0;  // 2^s - k
    Subspace raw_kernel;
    Subspace after_filters;
    std::vector<AppliedFilter> filters_applied;
};

struct Certificate {
    SpaceModel model;
    int k = 0;
    enum class Outcome { Certified, Inconclusive } outcome = Outcome::Inconclusive;
    std::vector<CandidateReport> reports;
    bool vacuous = false;  // no admissible power of 2 at all

    bool certified() const noexcept { return outcome == Outcome::Certified; }
};

// All s with k+1 <= 2^s <= k + dim: reduced cohomology of a k-fold suspension
// vanishes at and below degree k and above degree k + dim.
inline std::vector<int> admissible_powers(const SpaceModel& model, int k) {
    if (k < 1) throw std::invalid_argument("suspension count must be positive");
    std::vector<int> out;
    for (int s = 1; (1 << s) <= k + model.dim(); ++s)
        if ((1 << s) >= k + 1) out.push_back(s);
    return out;
}

// Matrix of the fiber restriction c |-> 0, d |-> d' in a fixed degree.
inline Mat restrict_fiber_matrix(const SpaceModel& model, int degree) {
    const auto src = basis(model, degree);
    const SpaceModel cp = SpaceModel::complex_proj(model.n);
    const auto dst = basis(cp, degree);
    Mat mat(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (int j = 0; j < static_cast<int>(src.size()); ++j) {
        Word col = class_to_vector(restrict_fiber(CohomologyClass::of(src[j]), model), dst);
        for (int r = 0; r < mat.rows; ++r)
            if ((col >> r) & 1) mat.set(r, j);
    }
    return mat;
}

inline Certificate certify_w_trivial(const SpaceModel& model, int k, const KnowledgeBase& kb);

// Candidates for a first nonzero w_{2^s}: the joint kernel of Sq^1..Sq^{2^{s-1}-1}
// in degree 2^s - k, cut down by whichever filters are sound.
inline CandidateReport candidate_space(const SpaceModel& model, int k, int s,
                                       const std::vector<FilterTag>& filters,
                                       const KnowledgeBase& kb) {
    CandidateReport rep;
    rep.s = s;
    rep.degree_downstairs = (1 << s) - k;
    if (rep.degree_downstairs < 1)
        throw std::invalid_argument("power 2^s does not exceed the suspension count");

    Subspace space = Subspace::full(model, rep.degree_downstairs);
    for (int i = 1; i < (1 << (s - 1)); ++i)
        space = intersect(space,
                          kernel(sq_matrix(model, rep.degree_downstairs, i), model,
                                 rep.degree_downstairs));
    rep.raw_kernel = space;

    for (FilterTag tag : filters) {
        // FiberCP: a candidate restricting nontrivially to the fiber CP^n would
        // hand a first nonzero class to a bundle over Σ^k CP^n; sound exactly
        // when Σ^k CP^n is itself W-trivial (known fact or recursive certificate).
        if (tag == FilterTag::FiberCP) {
            if (model.is_stunted() || model.m < 1 || model.n < 1) continue;
            std::string why;
            auto cp = kb.cp_w_trivial(k, model.n);
            if (cp.value == Tri::True) {
                why = "fact " + cp.fact->id + " (" + cp.fact->citation_id + ")";
            } else if (cp.value == Tri::Unknown &&
                       certify_w_trivial(SpaceModel::complex_proj(model.n), k, kb).certified()) {
                why = "engine certificate for the suspended fiber";
            } else {
                continue;  // not known sound here
            }
            space = intersect(space, kernel(restrict_fiber_matrix(model, rep.degree_downstairs),
                                            model, rep.degree_downstairs));
            rep.filters_applied.push_back({tag, "fiber-pullback", why});
        }
    }
    rep.after_filters = space;
    return rep;
}

inline Certificate certify_w_trivial(const SpaceModel& model, int k, const KnowledgeBase& kb) {
    Certificate cert;
    cert.model = model;
    cert.k = k;
    const auto powers = admissible_powers(model, k);
    cert.vacuous = powers.empty();
    bool all_zero = true;
    for (int s : powers) {
        cert.reports.push_back(candidate_space(model, k, s, {FilterTag::FiberCP}, kb));
        if (!cert.reports.back().after_filters.is_zero()) all_zero = false;
    }
    cert.outcome = all_zero ? Certificate::Outcome::Certified : Certificate::Outcome::Inconclusive;
    return cert;
}

// Reduction along D(m-1,n) c D(m,n): sound when the subspace is already known
// W-trivial and no candidate degree supports a monomial c^m d^j, so that the
// restriction is injective exactly where it matters.
enum class Reduction { Reduced, NotApplicable };

inline Reduction reduction_step(const SpaceModel& model, int k, const KnowledgeBase& kb,
                                std::optional<bool> downstairs_w_trivial = std::nullopt) {
    if (model.is_stunted() || model.m < 1)
        throw std::invalid_argument("reduction needs a Dold-family model with m >= 1");

    bool down;
    if (downstairs_w_trivial.has_value()) {
        down = *downstairs_w_trivial;
    } else {
        const int m1 = model.m - 1, n = model.n;
        if (m1 == 0 && n == 0)
            down = true;  // a point
        else if (m1 == 0)
            down = kb.cp_w_trivial(k, n).value == Tri::True;
        else if (n == 0)
            down = kb.rp_w_trivial(k, m1).value == Tri::True;
        else
            down = kb.explicit_dold_facts(k, m1, n).value == Tri::True;
    }
    if (!down) return Reduction::NotApplicable;

    for (int s : admissible_powers(model, k)) {
        int rem = (1 << s) - k - model.m;  // candidate degree minus deg c^m
        if (rem >= 0 && rem % 2 == 0 && rem / 2 <= model.n)
            return Reduction::NotApplicable;  // c^m d^{rem/2} lives in that degree
    }
    return Reduction::Reduced;
}

}  // namespace doldw
