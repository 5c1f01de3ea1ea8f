// space.hpp -- truncated polynomial models of H*(D(m,n); Z/2) and relatives.
//
// The Dold family D(m,n) carries the ring Z2[c,d]/(c^{m+1}, d^{n+1}) with
// deg c = 1, deg d = 2.  D(m,0) is real projective space, D(0,n) is complex
// projective space.  The stunted model RP(m/low) is a Sq-module only: basis
// c^j for low < j <= m, no products.

#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace doldw {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos + 1)),
          pos(pos) {}
    std::size_t pos;  // 0-based offset into the input
};

enum class SpaceKind { Dold, RealProj, ComplexProj, StuntedRealProj };

struct Monomial {
    int ci = 0;  // exponent of c (degree 1)
    int dj = 0;  // exponent of d (degree 2)

    int degree() const noexcept { return ci + 2 * dj; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// canonical term order: by total degree, then ascending c-exponent
inline bool term_less(const Monomial& a, const Monomial& b) noexcept {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.ci < b.ci;
}

struct SpaceModel {
    SpaceKind kind = SpaceKind::Dold;
    int m = 0;    // c-truncation: c^{m+1} = 0
    int n = 0;    // d-truncation: d^{n+1} = 0
    int low = 0;  // stunted only: monomials c^j exist for low < j <= m

    static SpaceModel dold(int m, int n) {
        require(m >= 0 && n >= 0, "Dold model needs m, n >= 0");
        return {SpaceKind::Dold, m, n, 0};
    }
    static SpaceModel real_proj(int m) {
        require(m >= 0, "RP model needs m >= 0");
        return {SpaceKind::RealProj, m, 0, 0};
    }
    static SpaceModel complex_proj(int n) {
        require(n >= 0, "CP model needs n >= 0");
        return {SpaceKind::ComplexProj, 0, n, 0};
    }
    static SpaceModel stunted(int m, int low) {
        require(low >= 0 && low < m, "stunted model needs 0 <= low < m");
        return {SpaceKind::StuntedRealProj, m, 0, low};
    }

    bool is_stunted() const noexcept { return kind == SpaceKind::StuntedRealProj; }

    int dim() const noexcept { return is_stunted() ? m : m + 2 * n; }

    bool valid(const Monomial& mono) const noexcept {
        if (mono.ci < 0 || mono.dj < 0) return false;
        if (is_stunted()) return mono.dj == 0 && mono.ci > low && mono.ci <= m;
        return mono.ci <= m && mono.dj <= n;
    }

    // RP(m) and CP(n) are the degenerate Dold models D(m,0) and D(0,n);
    // equality ignores which spelling was used.
    friend bool operator==(const SpaceModel& a, const SpaceModel& b) noexcept {
        if (a.is_stunted() != b.is_stunted()) return false;
        if (a.is_stunted()) return a.m == b.m && a.low == b.low;
        return a.m == b.m && a.n == b.n;
    }

private:
    static void require(bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(what);
    }
};

// A GF(2) sum of monomials: presence means coefficient 1.  Terms are kept
// sorted in the canonical order, so equality is structural.
class CohomologyClass {
public:
    CohomologyClass() = default;
    explicit CohomologyClass(std::vector<Monomial> monos) {
        for (const auto& t : monos) toggle(t);
    }

    static CohomologyClass zero() { return {}; }
    static CohomologyClass unit() { return CohomologyClass({Monomial{0, 0}}); }
    static CohomologyClass of(const Monomial& t) { return CohomologyClass({t}); }

    bool is_zero() const noexcept { return terms_.empty(); }
    const std::vector<Monomial>& terms() const noexcept { return terms_; }

    // XOR a single term in or out
    void toggle(const Monomial& t) {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), t, term_less);
        if (it != terms_.end() && *it == t)
            terms_.erase(it);
        else
            terms_.insert(it, t);
    }

    bool contains(const Monomial& t) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), t, term_less);
        return it != terms_.end() && *it == t;
    }

    // GF(2) addition: symmetric difference
    CohomologyClass& operator+=(const CohomologyClass& rhs) {
        for (const auto& t : rhs.terms_) toggle(t);
        return *this;
    }
    friend CohomologyClass operator+(CohomologyClass a, const CohomologyClass& b) {
        a += b;
        return a;
    }
    friend bool operator==(const CohomologyClass&, const CohomologyClass&) = default;

private:
    std::vector<Monomial> terms_;
};

// All valid monomials of the given degree, ascending in the c-exponent.
inline std::vector<Monomial> basis(const SpaceModel& model, int degree) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    if (model.is_stunted()) {
        Monomial t{degree, 0};
        if (model.valid(t)) out.push_back(t);
        return out;
    }
    for (int dj = degree / 2; dj >= 0; --dj) {
        Monomial t{degree - 2 * dj, dj};
        if (model.valid(t)) out.push_back(t);
    }
    return out;
}

inline void check_valid(const CohomologyClass& a, const SpaceModel& model) {
    for (const auto& t : a.terms())
        if (!model.valid(t))
            throw std::domain_error("monomial c^" + std::to_string(t.ci) + "*d^" +
                                    std::to_string(t.dj) + " is not valid in this space");
}

// Truncated GF(2) product; monomials past a truncation exponent are dropped.
inline CohomologyClass mul(const CohomologyClass& a, const CohomologyClass& b,
                           const SpaceModel& model) {
    if (model.is_stunted())
        throw std::domain_error("stunted models carry no ring structure");
    CohomologyClass out;
    for (const auto& s : a.terms())
        for (const auto& t : b.terms()) {
            Monomial p{s.ci + t.ci, s.dj + t.dj};
            if (model.valid(p)) out.toggle(p);
        }
    return out;
}

// Fiber inclusion CP(n) -> D(m,n): c |-> 0, d |-> d.  Result lives in
// complex_proj(model.n).
inline CohomologyClass restrict_fiber(const CohomologyClass& a, const SpaceModel& model) {
    if (model.is_stunted())
        throw std::domain_error("restrict_fiber needs a Dold-family model");
    CohomologyClass out;
    for (const auto& t : a.terms())
        if (t.ci == 0) out.toggle(t);
    return out;
}

// Subspace inclusion D(m-1,n) -> D(m,n): kills exactly the monomials with
// ci = m.  Result lives in dold(m-1, n).
inline CohomologyClass restrict_subdold_m(const CohomologyClass& a, const SpaceModel& model) {
    if (model.is_stunted() || model.m < 1)
        throw std::invalid_argument("restrict_subdold_m needs a Dold-family model with m >= 1");
    CohomologyClass out;
    for (const auto& t : a.terms())
        if (t.ci != model.m) out.toggle(t);
    return out;
}

// Subspace inclusion D(m,n-1) -> D(m,n): kills exactly the monomials with
// dj = n.  Result lives in dold(m, n-1).
inline CohomologyClass restrict_subdold_n(const CohomologyClass& a, const SpaceModel& model) {
    if (model.is_stunted() || model.n < 1)
        throw std::invalid_argument("restrict_subdold_n needs a Dold-family model with n >= 1");
    CohomologyClass out;
    for (const auto& t : a.terms())
        if (t.dj != model.n) out.toggle(t);
    return out;
}

// ---- textual forms ---------------------------------------------------------
//
// Class syntax: terms joined by '+', a term is "c^i*d^j" with the factor
// omitted when its exponent is 0 and the exponent omitted when it is 1;
// "1" is the unit and "0" the zero class.  The parser accepts whitespace
// and factors in any order.

inline std::string render_monomial(const Monomial& t) {
    if (t.ci == 0 && t.dj == 0) return "1";
    std::string s;
    if (t.ci > 0) {
        s += "c";
        if (t.ci > 1) s += "^" + std::to_string(t.ci);
    }
    if (t.dj > 0) {
        if (!s.empty()) s += "*";
        s += "d";
        if (t.dj > 1) s += "^" + std::to_string(t.dj);
    }
    return s;
}

inline std::string render_class(const CohomologyClass& a) {
    if (a.is_zero()) return "0";
    std::string s;
    for (const auto& t : a.terms()) {
        if (!s.empty()) s += " + ";
        s += render_monomial(t);
    }
    return s;
}

namespace detail {

struct Cursor {
    const std::string& src;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= src.size();
    }
    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (pos < src.size() && src[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    int integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (pos == start) throw ParseError("expected a number", start);
        long v = 0;
        for (std::size_t i = start; i < pos; ++i) {
            v = v * 10 + (src[i] - '0');
            if (v > 1'000'000) throw ParseError("number too large", start);
        }
        return static_cast<int>(v);
    }
};

inline Monomial parse_term(Cursor& cur) {
    Monomial t;
    bool first = true;
    for (;;) {
        char c = cur.peek();
        if (first && (c == '1' || c == '0')) {
            // bare constant term; "0" contributes nothing, handled by caller
            cur.eat(c);
            if (c == '0') t.ci = -1;  // sentinel for the zero term
            return t;
        }
        if (c == 'c' || c == 'd') {
            cur.eat(c);
            int e = 1;
            if (cur.eat('^')) e = cur.integer();
            (c == 'c' ? t.ci : t.dj) += e;
        } else {
            throw ParseError("expected a generator c or d", cur.pos);
        }
        first = false;
        if (!cur.eat('*')) {
            // also allow juxtaposition of factors: "c d", "c^2d^3"
            char nxt = cur.peek();
            if (nxt != 'c' && nxt != 'd') return t;
        }
    }
}

}  // namespace detail

inline CohomologyClass parse_class(const std::string& text) {
    detail::Cursor cur{text};
    if (cur.done()) throw ParseError("empty class expression", 0);
    CohomologyClass out;
    for (;;) {
        Monomial t = detail::parse_term(cur);
        if (t.ci >= 0) out.toggle(t);
        if (cur.done()) return out;
        if (!cur.eat('+')) throw ParseError("expected '+' between terms", cur.pos);
    }
}

// Space syntax: D(m,n), RP(m), CP(n), RP(m/low).
inline SpaceModel parse_space(const std::string& text) {
    detail::Cursor cur{text};
    cur.skip_ws();
    std::size_t start = cur.pos;
    std::string name;
    while (cur.pos < text.size() && std::isalpha(static_cast<unsigned char>(text[cur.pos])))
        name += text[cur.pos++];
    if (!cur.eat('(')) throw ParseError("expected '(' after space name", cur.pos);
    try {
        if (name == "D") {
            int m = cur.integer();
            if (!cur.eat(',')) throw ParseError("expected ','", cur.pos);
            int n = cur.integer();
            if (!cur.eat(')')) throw ParseError("expected ')'", cur.pos);
            if (!cur.done()) throw ParseError("trailing input after space", cur.pos);
            return SpaceModel::dold(m, n);
        }
        if (name == "CP") {
            int n = cur.integer();
            if (!cur.eat(')')) throw ParseError("expected ')'", cur.pos);
            if (!cur.done()) throw ParseError("trailing input after space", cur.pos);
            return SpaceModel::complex_proj(n);
        }
        if (name == "RP") {
            int m = cur.integer();
            if (cur.eat('/')) {
                int low = cur.integer();
                if (!cur.eat(')')) throw ParseError("expected ')'", cur.pos);
                if (!cur.done()) throw ParseError("trailing input after space", cur.pos);
                return SpaceModel::stunted(m, low);
            }
            if (!cur.eat(')')) throw ParseError("expected ')'", cur.pos);
            if (!cur.done()) throw ParseError("trailing input after space", cur.pos);
            return SpaceModel::real_proj(m);
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), start);
    }
    throw ParseError("unknown space '" + name + "' (expected D, RP or CP)", start);
}

inline std::string render_space(const SpaceModel& model) {
    switch (model.kind) {
        case SpaceKind::RealProj: return "RP(" + std::to_string(model.m) + ")";
        case SpaceKind::ComplexProj: return "CP(" + std::to_string(model.n) + ")";
        case SpaceKind::StuntedRealProj:
            return "RP(" + std::to_string(model.m) + "/" + std::to_string(model.low) + ")";
        case SpaceKind::Dold: break;
    }
    return "D(" + std::to_string(model.m) + "," + std::to_string(model.n) + ")";
}

}  // namespace doldw
