// knowledge.hpp -- citation-tagged fact tables.
//
// Everything the classifier consumes as *data* -- known (non-)trivialities of
// suspended projective and Dold spaces, KO-group vanishing -- lives here as
// pattern facts over (k, m, n).  Facts load from a line-oriented text format
// (a builtin copy is compiled in, and the same content ships as a data file),
// and every fact carries a citation id plus a verbatim quote.  A load-time
// sweep rejects any pair of opposing facts that overlap.

#pragma once

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace doldw {

enum class Tri { True, False, Unknown };

inline const char* to_string(Tri t) {
    switch (t) {
        case Tri::True: return "true";
        case Tri::False: return "false";
        default: return "unknown";
    }
}

enum class FactKind {
    RPTrivial,
    RPNotTrivial,
    CPTrivial,
    CPNotTrivial,
    StuntedTrivial,
    StuntedNotTrivial,
    KOVanishes,
    DoldTrivial,
    DoldNotTrivial,
};

inline const char* to_string(FactKind k) {
    switch (k) {
        case FactKind::RPTrivial: return "rp_trivial";
        case FactKind::RPNotTrivial: return "rp_not_trivial";
        case FactKind::CPTrivial: return "cp_trivial";
        case FactKind::CPNotTrivial: return "cp_not_trivial";
        case FactKind::StuntedTrivial: return "stunted_trivial";
        case FactKind::StuntedNotTrivial: return "stunted_not_trivial";
        case FactKind::KOVanishes: return "ko_vanishes";
        case FactKind::DoldTrivial: return "dold_trivial";
        default: return "dold_not_trivial";
    }
}

// ---- patterns over a single integer -----------------------------------------

struct PatternAlt {
    enum class Kind { Any, Exact, Range, Residue } kind = Kind::Any;
    int a = 0;   // Exact: the value; Range: lower bound; Residue: modulus
    int b = -1;  // Range: upper bound (-1 = unbounded); Residue: remainder

    bool matches(int v) const {
        switch (kind) {
            case Kind::Any: return true;
            case Kind::Exact: return v == a;
            case Kind::Range: return v >= a && (b < 0 || v <= b);
            default: return v >= 0 && v % a == b;
        }
    }
};

struct Pattern {
    std::vector<PatternAlt> alts;
    bool matches(int v) const {
        for (const auto& alt : alts)
            if (alt.matches(v)) return true;
        return false;
    }
};

namespace detail {

inline std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

inline PatternAlt parse_pattern_alt(const std::string& raw) {
    const std::string s = trim(raw);
    if (s == "*") return {PatternAlt::Kind::Any, 0, -1};
    if (s == "even") return {PatternAlt::Kind::Residue, 2, 0};
    if (s == "odd") return {PatternAlt::Kind::Residue, 2, 1};
    if (auto dots = s.find(".."); dots != std::string::npos) {
        std::string lo = s.substr(0, dots), hi = s.substr(dots + 2);
        if (!all_digits(lo) || !(hi.empty() || all_digits(hi)))
            throw std::runtime_error("bad range pattern '" + s + "'");
        return {PatternAlt::Kind::Range, std::stoi(lo), hi.empty() ? -1 : std::stoi(hi)};
    }
    if (auto t = s.find('t'); t != std::string::npos) {  // residue: "8t+3" or "8t"
        std::string mod = s.substr(0, t), rest = s.substr(t + 1);
        int rem = 0;
        if (!rest.empty()) {
            if (rest[0] != '+' || !all_digits(rest.substr(1)))
                throw std::runtime_error("bad residue pattern '" + s + "'");
            rem = std::stoi(rest.substr(1));
        }
        if (!all_digits(mod)) throw std::runtime_error("bad residue pattern '" + s + "'");
        int modulus = std::stoi(mod);
        if (modulus <= 0 || rem >= modulus)
            throw std::runtime_error("bad residue pattern '" + s + "'");
        return {PatternAlt::Kind::Residue, modulus, rem};
    }
    if (!all_digits(s)) throw std::runtime_error("bad pattern '" + s + "'");
    return {PatternAlt::Kind::Exact, std::stoi(s), -1};
}

inline Pattern parse_pattern(const std::string& cell) {
    Pattern p;
    for (const auto& alt : split(cell, ',')) p.alts.push_back(parse_pattern_alt(alt));
    if (p.alts.empty()) throw std::runtime_error("empty pattern");
    return p;
}

}  // namespace detail

// ---- side conditions ---------------------------------------------------------

struct Condition {
    enum class Lhs { K, M, N, MplusK, MplusN, NplusK, Nmod4 } lhs;
    enum class Op { Ge, Le, Gt, Lt, Eq, Ne } op;
    bool rhs_is_k = false;      // "m>=k" style comparisons against k itself
    std::vector<int> rhs;       // Eq: lhs in set; Ne: lhs not in set; others single value

    bool eval(int k, int m, int n) const {
        int v = 0;
        switch (lhs) {
            case Lhs::K: v = k; break;
            case Lhs::M: v = m; break;
            case Lhs::N: v = n; break;
            case Lhs::MplusK: v = m + k; break;
            case Lhs::MplusN: v = m + n; break;
            case Lhs::NplusK: v = n + k; break;
            case Lhs::Nmod4: v = ((n % 4) + 4) % 4; break;
        }
        std::vector<int> targets = rhs_is_k ? std::vector<int>{k} : rhs;
        switch (op) {
            case Op::Ge: return v >= targets[0];
            case Op::Le: return v <= targets[0];
            case Op::Gt: return v > targets[0];
            case Op::Lt: return v < targets[0];
            case Op::Eq:
                for (int t : targets)
                    if (v == t) return true;
                return false;
            default:
                for (int t : targets)
                    if (v == t) return false;
                return true;
        }
    }
};

namespace detail {

inline Condition parse_condition(const std::string& atom) {
    static const std::vector<std::pair<std::string, Condition::Lhs>> lhs_table = {
        {"m+k", Condition::Lhs::MplusK}, {"m+n", Condition::Lhs::MplusN},
        {"n+k", Condition::Lhs::NplusK}, {"n%4", Condition::Lhs::Nmod4},
        {"k", Condition::Lhs::K},        {"m", Condition::Lhs::M},
        {"n", Condition::Lhs::N},
    };
    Condition c{};
    std::string rest;
    bool found = false;
    for (const auto& [tok, lhs] : lhs_table) {
        if (atom.rfind(tok, 0) == 0) {
            c.lhs = lhs;
            rest = atom.substr(tok.size());
            found = true;
            break;
        }
    }
    if (!found) throw std::runtime_error("bad condition '" + atom + "'");

    static const std::vector<std::pair<std::string, Condition::Op>> op_table = {
        {">=", Condition::Op::Ge}, {"<=", Condition::Op::Le}, {"!=", Condition::Op::Ne},
        {">", Condition::Op::Gt},  {"<", Condition::Op::Lt},  {"=", Condition::Op::Eq},
    };
    found = false;
    for (const auto& [tok, op] : op_table) {
        if (rest.rfind(tok, 0) == 0) {
            c.op = op;
            rest = rest.substr(tok.size());
            found = true;
            break;
        }
    }
    if (!found) throw std::runtime_error("bad condition '" + atom + "'");

    if (rest == "k") {
        c.rhs_is_k = true;
        return c;
    }
    for (const auto& piece : split(rest, ',')) {
        if (!all_digits(trim(piece))) throw std::runtime_error("bad condition '" + atom + "'");
        c.rhs.push_back(std::stoi(trim(piece)));
    }
    if (c.rhs.empty()) throw std::runtime_error("bad condition '" + atom + "'");
    if (c.rhs.size() > 1 && c.op != Condition::Op::Eq && c.op != Condition::Op::Ne)
        throw std::runtime_error("bad condition '" + atom + "'");
    return c;
}

}  // namespace detail

// ---- facts -------------------------------------------------------------------

struct Fact {
    std::string id;  // "<kind>#<ordinal>", assigned at load
    FactKind kind;
    Pattern k, m, n;  // for stunted kinds the n column holds `low`
    std::vector<Condition> conds;
    std::string citation_id;
    std::string quote;

    bool matches(int kk, int mm, int nn) const {
        if (!k.matches(kk) || !m.matches(mm) || !n.matches(nn)) return false;
        for (const auto& c : conds)
            if (!c.eval(kk, mm, nn)) return false;
        return true;
    }
};

class ConsistencyError : public std::runtime_error {
public:
    std::string first_id, second_id;
    ConsistencyError(std::string a, std::string b, int k, int m, int n)
        : std::runtime_error("contradictory facts " + a + " and " + b + " both match (k=" +
                             std::to_string(k) + ", m=" + std::to_string(m) +
                             ", n=" + std::to_string(n) + ")"),
          first_id(std::move(a)),
          second_id(std::move(b)) {}
};

// ---- the knowledge base --------------------------------------------------------

class KnowledgeBase {
public:
    struct Lookup {
        Tri value = Tri::Unknown;
        const Fact* fact = nullptr;
    };

    static KnowledgeBase from_string(const std::string& text);
    static KnowledgeBase from_file(const std::string& path);
    static KnowledgeBase builtin();

    const std::vector<Fact>& facts() const noexcept { return facts_; }

    // Opposing fact kinds must never overlap; swept over k <= 12, m <= 64, n <= 32.
    void check_consistency() const {
        static const std::pair<FactKind, FactKind> opposing[] = {
            {FactKind::RPTrivial, FactKind::RPNotTrivial},
            {FactKind::CPTrivial, FactKind::CPNotTrivial},
            {FactKind::StuntedTrivial, FactKind::StuntedNotTrivial},
            {FactKind::DoldTrivial, FactKind::DoldNotTrivial},
        };
        for (auto [pos, neg] : opposing) {
            for (const auto& f : facts_) {
                if (f.kind != pos) continue;
                for (const auto& g : facts_) {
                    if (g.kind != neg) continue;
                    for (int k = 0; k <= 12; ++k)
                        for (int m = 0; m <= 64; ++m)
                            for (int n = 0; n <= 32; ++n)
                                if (f.matches(k, m, n) && g.matches(k, m, n))
                                    throw ConsistencyError(f.id, g.id, k, m, n);
                }
            }
        }
    }

    Lookup rp_w_trivial(int k, int m) const {
        if (auto f = find(FactKind::RPNotTrivial, k, m, 0)) return {Tri::False, f};
        if (auto f = find(FactKind::RPTrivial, k, m, 0)) return {Tri::True, f};
        return {};
    }

    Lookup cp_w_trivial(int j, int n) const {
        if (auto f = find(FactKind::CPNotTrivial, j, 0, n)) return {Tri::False, f};
        if (auto f = find(FactKind::CPTrivial, j, 0, n)) return {Tri::True, f};
        return {};
    }

    // `low` travels in the n column of stunted facts.
    Lookup stunted_w_trivial(int k, int m, int low) const {
        if (low < 0 || low >= m)
            throw std::invalid_argument("stunted space needs 0 <= low < m");
        if (auto f = find(FactKind::StuntedNotTrivial, k, m, low)) return {Tri::False, f};
        if (auto f = find(FactKind::StuntedTrivial, k, m, low)) return {Tri::True, f};
        return {};
    }

    Lookup ko_vanishes(int k, int m) const {
        if (auto f = find(FactKind::KOVanishes, k, m, 0)) return {Tri::True, f};
        return {};
    }

    Lookup explicit_dold_facts(int k, int m, int n) const {
        if (auto f = find(FactKind::DoldNotTrivial, k, m, n)) return {Tri::False, f};
        if (auto f = find(FactKind::DoldTrivial, k, m, n)) return {Tri::True, f};
        return {};
    }

private:
    std::vector<Fact> facts_;

    const Fact* find(FactKind kind, int k, int m, int n) const {
        for (const auto& f : facts_)
            if (f.kind == kind && f.matches(k, m, n)) return &f;
        return nullptr;
    }
};

namespace detail {

inline FactKind parse_kind(const std::string& s) {
    for (int i = 0; i <= static_cast<int>(FactKind::DoldNotTrivial); ++i) {
        auto k = static_cast<FactKind>(i);
        if (s == to_string(k)) return k;
    }
    throw std::runtime_error("unknown fact kind '" + s + "'");
}

}  // namespace detail

inline KnowledgeBase KnowledgeBase::from_string(const std::string& text) {
    KnowledgeBase kb;
    std::map<FactKind, int> ordinal;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = detail::trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto cells = detail::split(t, '|');
        if (cells.size() != 7)
            throw std::runtime_error("fact line " + std::to_string(lineno) +
                                     ": expected 7 |-separated columns");
        try {
            Fact f;
            f.kind = detail::parse_kind(detail::trim(cells[0]));
            f.k = detail::parse_pattern(detail::trim(cells[1]));
            f.m = detail::parse_pattern(detail::trim(cells[2]));
            f.n = detail::parse_pattern(detail::trim(cells[3]));
            std::string conds = detail::trim(cells[4]);
            if (conds != "-") {
                std::istringstream cs(conds);
                std::string atom;
                while (cs >> atom) f.conds.push_back(detail::parse_condition(atom));
            }
            f.citation_id = detail::trim(cells[5]);
            f.quote = detail::trim(cells[6]);
            if (f.citation_id.empty() || f.quote.empty())
                throw std::runtime_error("missing citation");
            f.id = std::string(to_string(f.kind)) + "#" + std::to_string(++ordinal[f.kind]);
            kb.facts_.push_back(std::move(f));
        } catch (const ConsistencyError&) {
            throw;
        } catch (const std::exception& e) {
            throw std::runtime_error("fact line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    kb.check_consistency();
    return kb;
}

inline KnowledgeBase KnowledgeBase::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fact file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_string(buf.str());
}

// The compiled-in fact table.  The shipped data file carries the identical
// text; a test holds the two equal.
inline const std::string& builtin_facts_text() {
    static const std::string text = R"(# known (non-)triviality and KO-vanishing facts
# kind | k | m | n (low for stunted rows) | conditions | citation-id | quote

rp_not_trivial | 0       | *   | * | -       | rp-nt-zero | k = 0
rp_not_trivial | 1,2,4,8 | *   | * | m>=k    | rp-nt-pow2 | k = 1,2,4 or 8 and m ≥ k
rp_not_trivial | 3,5,7   | *   | * | m+k=4,8 | rp-nt-odd  | k = 3,5 or 7 and m+k = 4 or 8
rp_not_trivial | 6       | 2,3 | * | -       | rp-nt-six  | k = 6 and m = 2 or 3

rp_trivial | 1,2,4,8 | * | * | m<k      | rp-trivial-table | the k-fold suspension Σ^k RP^m of RP^m is W-trivial
rp_trivial | 3,5,7   | * | * | m+k!=4,8 | rp-trivial-table | the k-fold suspension Σ^k RP^m of RP^m is W-trivial
rp_trivial | 6       | * | * | m!=2,3   | rp-trivial-table | the k-fold suspension Σ^k RP^m of RP^m is W-trivial
rp_trivial | 9..     | * | * | -        | susp-nine        | the 9-fold suspension Σ^9 X of any CW-complex X is W-trivial

cp_trivial     | 6   | * | even | - | cp-evensusp | Σ^{k+m}CP^{2r} is W-trivial
cp_trivial     | 8   | * | even | - | cp-eight    | Σ^8CP^{2r} is W-trivial
cp_trivial     | 9.. | * | *    | - | susp-nine   | the 9-fold suspension Σ^9 X of any CW-complex X is W-trivial
cp_not_trivial | 4   | * | 1..  | - | cp-four-nt  | Σ^4CP^n is not W-trivial

ko_vanishes | 2 | 1                   | * | - | ko-zero-2 | k = 2 and m = 1
ko_vanishes | 3 | 8t+2,8t+3,8t+4,8t+6 | * | - | ko-zero-3 | k = 3 and m = 8t+2, 8t+3, 8t+4 or 8t+6
ko_vanishes | 5 | 8t,8t+4,8t+5,8t+6   | * | - | ko-zero-5 | k = 5 and m = 8t, 8t+4, 8t+5 or 8t+6
ko_vanishes | 6 | 8t+1,8t+5,8t+6,8t+7 | * | - | ko-zero-6 | k = 6 and m = 8t+1, 8t+5, 8t+6 or 8t+7
ko_vanishes | 7 | 8t,8t+2,8t+6,8t+7   | * | - | ko-zero-7 | k = 7 and m = 8t, 8t+2, 8t+6 or 8t+7

stunted_trivial | 1,2,4,8 | * | * | m<k      | stunted-pow2 | k = 1,2,4 or 8 and m < k
stunted_trivial | 3,5,7   | * | * | m+k!=4,8 | stunted-odd  | k = 3,5 or 7 and m+k ≠ 4,8
stunted_trivial | 6       | * | * | m!=2,3   | stunted-six  | k = 6 and m ≠ 2,3
stunted_trivial | 9..     | * | * | -        | susp-nine    | the 9-fold suspension Σ^9 X of any CW-complex X is W-trivial

stunted_not_trivial | 0       | *   | 0 | -       | rp-nt-zero      | k = 0
stunted_not_trivial | 1,2,4,8 | *   | 0 | m>=k    | stunted-nt-pow2 | k = 1,3 or 7 and m ≥ k
stunted_not_trivial | 3,5,7   | *   | 0 | m+k=4,8 | stunted-nt-odd  | k = 2 or 4 and m + k = 2 or 6
stunted_not_trivial | 6       | 2,3 | 0 | -       | stunted-nt-six  | k = 5 and m = 1 or 2

dold_trivial     | 3 | 2,3,4     | 5   | -      | dold-35    | if m = 2,3 or 4 then Σ^3D(m,5) is W-trivial
dold_trivial     | 5 | 1,2,4,5,6 | 3   | -      | dold-53    | if m = 1,2,4,5 or 6 then Σ^5D(m,3) is W-trivial
dold_not_trivial | 4 | 1         | 2.. | n%4!=3 | dold-41-nt | Let n > 1 and n ≢ 3 (mod 4). Then Σ^4D(1,n) is not W-trivial
)";
    return text;
}

inline KnowledgeBase KnowledgeBase::builtin() { return from_string(builtin_facts_text()); }

// Every citation id used anywhere (facts, classifier rules, filter tags,
// open-case annotations) maps here to its verbatim quote.
inline const std::map<std::string, std::string>& citation_registry() {
    static const std::map<std::string, std::string> reg = {
        // fact citations
        {"rp-nt-zero", "k = 0"},
        {"rp-nt-pow2", "k = 1,2,4 or 8 and m ≥ k"},
        {"rp-nt-odd", "k = 3,5 or 7 and m+k = 4 or 8"},
        {"rp-nt-six", "k = 6 and m = 2 or 3"},
        {"rp-trivial-table", "the k-fold suspension Σ^k RP^m of RP^m is W-trivial"},
        {"susp-nine", "the 9-fold suspension Σ^9 X of any CW-complex X is W-trivial"},
        {"cp-evensusp", "Σ^{k+m}CP^{2r} is W-trivial"},
        {"cp-eight", "Σ^8CP^{2r} is W-trivial"},
        {"cp-four-nt", "Σ^4CP^n is not W-trivial"},
        {"ko-zero-2", "k = 2 and m = 1"},
        {"ko-zero-3", "k = 3 and m = 8t+2, 8t+3, 8t+4 or 8t+6"},
        {"ko-zero-5", "k = 5 and m = 8t, 8t+4, 8t+5 or 8t+6"},
        {"ko-zero-6", "k = 6 and m = 8t+1, 8t+5, 8t+6 or 8t+7"},
        {"ko-zero-7", "k = 7 and m = 8t, 8t+2, 8t+6 or 8t+7"},
        {"stunted-pow2", "k = 1,2,4 or 8 and m < k"},
        {"stunted-odd", "k = 3,5 or 7 and m+k ≠ 4,8"},
        {"stunted-six", "k = 6 and m ≠ 2,3"},
        {"stunted-nt-pow2", "k = 1,3 or 7 and m ≥ k"},
        {"stunted-nt-odd", "k = 2 or 4 and m + k = 2 or 6"},
        {"stunted-nt-six", "k = 5 and m = 1 or 2"},
        {"dold-35", "if m = 2,3 or 4 then Σ^3D(m,5) is W-trivial"},
        {"dold-53", "if m = 1,2,4,5 or 6 then Σ^5D(m,3) is W-trivial"},
        {"dold-41-nt", "Let n > 1 and n ≢ 3 (mod 4). Then Σ^4D(1,n) is not W-trivial"},
        // rule citations
        {"rp-pullback",
         "if Σ^k RP^m is not W-trivial then the k-fold suspension Σ^k D(m,n) of Dold manifold "
         "D(m,n) is also not W-trivial"},
        {"stunted-pullback",
         "The k-fold suspension Σ^k D(m,n) is not W-trivial if the (n+k)-suspension "
         "Σ^{n+k}(RP^{n+m}/RP^{n-1}) is not W-trivial"},
        {"dim-window", "there is no integer s such that 5 ≤ 2^s ≤ dim(Σ^4 D(1,1)) = 7"},
        {"ko-split", "Since W(η) = 1 and W(ν) = 1, we have W(ξ) = 1"},
        {"ko-fiber-surj", "Since KO^{-k}(m-1,2r) = 0, the map f^! is surjective"},
        {"first-pow2", "the smallest integer k > 0 with w_k(ξ) ≠ 0 is a power of 2"},
        {"engine-certificate", "engine certificate"},
        {"subdold-mono",
         "the induced map i*: H^p(D(m,2r);Z_2) → H^p(D(m-1,2r);Z_2) is monomorphism when p+m "
         "is odd"},
        {"odd-step",
         "Σ^k D(m,2r+1) is W-trivial if Σ^k D(m,2r+2) and Σ^{2r+1+k}(RP^{2r+1+m}/RP^{2r}) are "
         "W-trivial"},
        {"fiber-pullback",
         "But since Σ^8 CP^{2r} is W-trivial, we have a contradiction and hence x = 0"},
        // open-case annotations
        {"open-k3", "(i) k = 3 and m = 8t+1"},
        {"open-k4", "(ii) k = 4 and m = 2"},
        {"open-k5", "(iii) k = 5 and m = 8t+3"},
        {"open-k6", "(iv) k = 6 and m = 8t+4"},
        {"open-k7", "(v) k = 7 and m = 8t+5"},
        {"open-k8", "(vi) k = 8 and m = 4,5 or 6"},
        {"open-odd-35", "(i) k = 3, n = 5 and m ≥ 5"},
        {"open-odd-53", "(ii) k = 5, n = 3 and m ≥ 7"},
        {"open-41", "(iii) k = 4, m = 1 and n ≡ 3 (mod 4)"},
    };
    return reg;
}

}  // namespace doldw
