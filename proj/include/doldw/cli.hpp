// cli.hpp -- command-line surface.  Subcommands: sq, candidates, certify,
// classify, table, open, selftest.  Requires the vendored CLI11 header.
//
// Exit codes: 0 success, 2 usage error, 3 inconclusive certificate,
// 4 knowledge-base or rule inconsistency.

#pragma once

#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include "classifier.hpp"
#include "format.hpp"
#include "knowledge.hpp"
#include "obstruction.hpp"
#include "space.hpp"
#include "steenrod.hpp"

#include "CLI11.hpp"

namespace doldw::cli {

// Alternate fact file via environment; the compiled-in table otherwise.
inline KnowledgeBase load_kb() {
    const char* env = std::getenv("DOLDW_FACTS");
    if (env && *env) return KnowledgeBase::from_file(env);
    return KnowledgeBase::builtin();
}

// "a..b", "x,y,z", or a single integer.
inline std::vector<int> parse_range_list(const std::string& spec) {
    const std::string s = detail::trim(spec);
    if (auto dots = s.find(".."); dots != std::string::npos) {
        const std::string lo = detail::trim(s.substr(0, dots));
        const std::string hi = detail::trim(s.substr(dots + 2));
        if (!detail::all_digits(lo) || !detail::all_digits(hi))
            throw std::invalid_argument("bad range '" + spec + "' (want a..b)");
        int a = std::stoi(lo), b = std::stoi(hi);
        if (b < a) throw std::invalid_argument("bad range '" + spec + "' (empty)");
        std::vector<int> out;
        for (int v = a; v <= b; ++v) out.push_back(v);
        return out;
    }
    std::vector<int> out;
    for (const auto& piece : detail::split(s, ',')) {
        const std::string p = detail::trim(piece);
        if (!detail::all_digits(p)) throw std::invalid_argument("bad range '" + spec + "'");
        out.push_back(std::stoi(p));
    }
    if (out.empty()) throw std::invalid_argument("bad range '" + spec + "'");
    return out;
}

// ---- self-check suites ----------------------------------------------------------

class SelfTest {
public:
    explicit SelfTest(std::ostream& out) : out_(out) {}

    void check(bool ok, const std::string& what) {
        ++total_;
        if (!ok) {
            ++failures_;
            out_ << "    FAIL: " << what << "\n";
        }
    }
    void finish_suite(const std::string& name) {
        out_ << "suite " << name << ": " << (total_ - failures_) << "/" << total_
             << " checks passed\n";
        grand_failures_ += failures_;
        total_ = failures_ = 0;
    }
    int exit_code() const { return grand_failures_ ? 1 : 0; }

private:
    std::ostream& out_;
    int total_ = 0, failures_ = 0, grand_failures_ = 0;
};

inline void selftest_steenrod(SelfTest& t) {
    // closed form against the multiplicative total-square expansion
    const SpaceModel big = SpaceModel::dold(5, 5);
    for (int p = 0; p <= big.dim(); ++p) {
        for (const auto& mono : basis(big, p)) {
            const CohomologyClass x = CohomologyClass::of(mono);
            CohomologyClass summed;
            for (int i = 0; i <= big.dim(); ++i) summed += sq(i, x, big);
            t.check(summed == total_sq(x, big),
                    "oracle equivalence at " + render_monomial(mono));
        }
    }
    // axioms
    const SpaceModel mid = SpaceModel::dold(4, 4);
    for (int p = 0; p <= mid.dim(); ++p) {
        for (const auto& mono : basis(mid, p)) {
            const CohomologyClass x = CohomologyClass::of(mono);
            t.check(sq(0, x, mid) == x, "Sq^0 = id at " + render_monomial(mono));
            t.check(sq(p + 1, x, mid).is_zero(), "Sq^i = 0 above degree at " + render_monomial(mono));
            t.check(sq(p, x, mid) == mul(x, x, mid), "top square at " + render_monomial(mono));
        }
    }
    // composition identities
    const SpaceModel sm = SpaceModel::dold(3, 3);
    for (int p = 0; p <= sm.dim(); ++p) {
        for (const auto& mono : basis(sm, p)) {
            const CohomologyClass x = CohomologyClass::of(mono);
            t.check(sq(1, sq(1, x, sm), sm).is_zero(), "Sq1 Sq1 = 0");
            t.check(sq(1, sq(2, x, sm), sm) == sq(3, x, sm), "Sq1 Sq2 = Sq3");
            t.check(sq(2, sq(2, x, sm), sm) == sq(3, sq(1, x, sm), sm), "Sq2 Sq2 = Sq3 Sq1");
        }
    }
    // pinned single-class values
    t.check(sq(1, parse_class("d"), SpaceModel::dold(1, 2)) == parse_class("c*d"), "Sq1 d = cd");
    t.check(sq(2, parse_class("c^2*d^3"), SpaceModel::dold(2, 8)) == parse_class("c^2*d^4"),
            "Sq2 c2d3 = c2d4");
    t.check(sq(1, parse_class("c^2*d^5"), SpaceModel::dold(3, 8)) == parse_class("c^3*d^5"),
            "Sq1 c2d5 = c3d5");
    t.check(sq(1, parse_class("c^4*d^2"), SpaceModel::dold(7, 8)).is_zero(), "Sq1 c4d2 = 0");
    t.check(sq(2, parse_class("c^4*d^2"), SpaceModel::dold(7, 8)) == parse_class("c^6*d^2"),
            "Sq2 c4d2 = c6d2");
}

inline void selftest_knowledge(SelfTest& t, const KnowledgeBase& kb) {
    const auto& reg = citation_registry();
    for (const auto& f : kb.facts()) {
        auto it = reg.find(f.citation_id);
        t.check(it != reg.end(), "citation id registered: " + f.citation_id);
        if (it != reg.end())
            t.check(it->second == f.quote, "registry quote matches fact " + f.id);
    }
    for (int k = 0; k <= 12; ++k)
        for (int m = 1; m <= 64; ++m)
            t.check(kb.rp_w_trivial(k, m).value != Tri::Unknown,
                    "projective table total at k=" + std::to_string(k) +
                        " m=" + std::to_string(m));
    t.check(kb.rp_w_trivial(2, 1).value == Tri::True, "rp(2,1)");
    t.check(kb.rp_w_trivial(3, 5).value == Tri::False, "rp(3,5)");
    t.check(kb.rp_w_trivial(9, 100).value == Tri::True, "rp(9,100)");
    t.check(kb.cp_w_trivial(8, 4).value == Tri::True, "cp(8,4)");
    t.check(kb.cp_w_trivial(4, 3).value == Tri::False, "cp(4,3)");
    t.check(kb.cp_w_trivial(10, 7).value == Tri::True, "cp(10,7)");
    t.check(kb.cp_w_trivial(5, 2).value == Tri::Unknown, "cp(5,2)");
    t.check(kb.stunted_w_trivial(12, 7, 3).value == Tri::True, "stunted(12,7,3)");
    t.check(kb.stunted_w_trivial(5, 4, 2).value == Tri::True, "stunted(5,4,2)");
    t.check(kb.stunted_w_trivial(2, 1, 0).value == Tri::True, "stunted(2,1,0)");
    t.check(kb.ko_vanishes(3, 10).value == Tri::True, "ko(3,10)");
    t.check(kb.ko_vanishes(2, 2).value == Tri::Unknown, "ko(2,2)");
    t.check(kb.explicit_dold_facts(3, 4, 5).value == Tri::True, "dold(3,4,5)");
    t.check(kb.explicit_dold_facts(4, 1, 6).value == Tri::False, "dold(4,1,6)");
    t.check(kb.explicit_dold_facts(4, 1, 3).value == Tri::Unknown, "dold(4,1,3)");
}

inline void selftest_engine(SelfTest& t, const KnowledgeBase& kb) {
    t.check(certify_w_trivial(SpaceModel::dold(2, 4), 8, kb).certified(), "Σ8 D(2,4)");
    t.check(certify_w_trivial(SpaceModel::dold(3, 4), 8, kb).certified(), "Σ8 D(3,4)");
    t.check(certify_w_trivial(SpaceModel::dold(3, 3), 4, kb).certified(), "Σ4 D(3,3)");
    auto vac = certify_w_trivial(SpaceModel::dold(1, 1), 4, kb);
    t.check(vac.certified() && vac.vacuous, "Σ4 D(1,1) vacuous");
    t.check(!certify_w_trivial(SpaceModel::complex_proj(4), 4, kb).certified(),
            "Σ4 CP(4) must stay inconclusive");
    auto rep = certify_w_trivial(SpaceModel::dold(2, 8), 8, kb);
    t.check(rep.certified() && rep.reports.size() == 1 &&
                subspace_class_strings(rep.reports[0].raw_kernel) ==
                    std::vector<std::string>{"d^4"},
            "Σ8 D(2,8) raw kernel is spanned by d^4");
    t.check(reduction_step(SpaceModel::dold(1, 2), 8, kb) == Reduction::Reduced,
            "reduction Σ8 D(1,2)");
}

inline void selftest_classifier(SelfTest& t, const KnowledgeBase& kb) {
    Classifier cl(kb);
    auto expect = [&](int k, int m, int n, Status st, const std::string& rule) {
        const Verdict& v = cl.classify(k, m, n);
        bool ok = v.status == st;
        if (ok && !rule.empty()) {
            ok = false;
            for (const auto& s : v.trace)
                if (s.rule_id == rule) ok = true;
        }
        t.check(ok, "classify(" + std::to_string(k) + "," + std::to_string(m) + "," +
                        std::to_string(n) + ")");
    };
    expect(1, 1, 5, Status::NotWTrivial, "N1");
    expect(9, 7, 3, Status::WTrivial, "T0");
    expect(3, 2, 4, Status::WTrivial, "T3");
    expect(8, 2, 4, Status::WTrivial, "T5");
    expect(4, 1, 2, Status::NotWTrivial, "N3");
    expect(4, 1, 1, Status::WTrivial, "T2");
    const Verdict& open = cl.classify(4, 2, 2);
    t.check(open.status == Status::Unknown && open.open_citation_id == "open-k4",
            "classify(4,2,2) open case");
    bool clean = true;
    try {
        cl.table(parse_range_list("0..8"), parse_range_list("1..10"), parse_range_list("1..6"));
    } catch (const InconsistencyError&) {
        clean = false;
    }
    t.check(clean, "sweep k 0..8, m 1..10, n 1..6 has no inconsistency");
}

inline int run_selftest(const std::string& suite, std::ostream& out) {
    SelfTest t(out);
    const KnowledgeBase kb = load_kb();
    bool matched = false;
    if (suite == "all" || suite == "steenrod") {
        selftest_steenrod(t);
        t.finish_suite("steenrod");
        matched = true;
    }
    if (suite == "all" || suite == "knowledge") {
        selftest_knowledge(t, kb);
        t.finish_suite("knowledge");
        matched = true;
    }
    if (suite == "all" || suite == "engine") {
        selftest_engine(t, kb);
        t.finish_suite("engine");
        matched = true;
    }
    if (suite == "all" || suite == "classifier") {
        selftest_classifier(t, kb);
        t.finish_suite("classifier");
        matched = true;
    }
    if (!matched) throw std::invalid_argument("unknown suite '" + suite + "'");
    return t.exit_code();
}

// ---- the entry point --------------------------------------------------------------

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"W-triviality toolkit for iterated suspensions of Dold manifolds"};
    app.name("doldw");
    app.require_subcommand(1);
    int exit_code = 0;

    // sq
    auto* sq_cmd = app.add_subcommand("sq", "apply a Steenrod square to a cohomology class");
    std::string sq_space;
    int sq_i = 0;
    bool sq_total = false;
    std::string sq_expr;
    sq_cmd->add_option("--space", sq_space, "space descriptor: D(m,n), RP(m), CP(n), RP(m/low)")
        ->required();
    sq_cmd->add_option("--i", sq_i, "square index (ignored with --total)");
    sq_cmd->add_flag("--total", sq_total, "apply the total square instead");
    sq_cmd->add_option("expr", sq_expr, "class expression, e.g. \"d^4 + c^2*d^3\"")->required();
    sq_cmd->callback([&] {
        const SpaceModel model = parse_space(sq_space);
        const CohomologyClass cls = parse_class(sq_expr);
        check_valid(cls, model);
        out << render_class(sq_total ? total_sq(cls, model) : sq(sq_i, cls, model)) << "\n";
    });

    // candidates
    auto* cand_cmd =
        app.add_subcommand("candidates", "candidate spaces for a first nonzero w_{2^s}");
    std::string cand_space;
    int cand_k = 0, cand_s = -1;
    bool cand_nofilters = false;
    std::vector<std::string> cand_filters;
    cand_cmd->add_option("--space", cand_space, "space descriptor")->required();
    cand_cmd->add_option("--k", cand_k, "suspension count")->required();
    cand_cmd->add_option("--s", cand_s, "restrict to one power 2^s (default: all admissible)");
    cand_cmd->add_flag("--no-filters", cand_nofilters, "raw Steenrod kernels only");
    cand_cmd->add_option("--filter", cand_filters, "filter tags to apply (default: fiber-cp)");
    cand_cmd->callback([&] {
        const SpaceModel model = parse_space(cand_space);
        const KnowledgeBase kb = load_kb();
        std::vector<FilterTag> filters;
        if (!cand_nofilters) {
            if (cand_filters.empty()) {
                filters = {FilterTag::FiberCP};
            } else {
                for (const auto& name : cand_filters) {
                    if (name == "fiber-cp")
                        filters.push_back(FilterTag::FiberCP);
                    else
                        throw std::invalid_argument("unknown filter tag: " + name);
                }
            }
        }
        auto powers = admissible_powers(model, cand_k);
        if (cand_s >= 0) {
            bool ok = false;
            for (int s : powers) ok = ok || s == cand_s;
            if (!ok)
                throw std::invalid_argument("s=" + std::to_string(cand_s) +
                                            " is not admissible for this space and k");
            powers = {cand_s};
        }
        out << "candidates for Σ^" << cand_k << " " << render_space(model) << ":\n";
        if (powers.empty()) out << "  (no admissible power of 2)\n";
        for (int s : powers)
            render_report_text(out, candidate_space(model, cand_k, s, filters, kb));
    });

    // certify
    auto* cert_cmd = app.add_subcommand("certify", "prove W-triviality by candidate elimination");
    std::string cert_space, cert_format = "text";
    int cert_k = 0;
    cert_cmd->add_option("--space", cert_space, "space descriptor")->required();
    cert_cmd->add_option("--k", cert_k, "suspension count")->required();
    cert_cmd->add_option("--format", cert_format, "text or json-lines")
        ->check(CLI::IsMember({"text", "json-lines"}));
    cert_cmd->callback([&] {
        const SpaceModel model = parse_space(cert_space);
        const KnowledgeBase kb = load_kb();
        const Certificate cert = certify_w_trivial(model, cert_k, kb);
        if (cert_format == "json-lines")
            out << certificate_to_json(cert).dump() << "\n";
        else
            render_certificate_text(out, cert);
        exit_code = cert.certified() ? 0 : 3;
    });

    // classify
    auto* cls_cmd = app.add_subcommand("classify", "verdict for Σ^k D(m,n) with derivation trace");
    int cls_k = 0, cls_m = 1, cls_n = 0;
    std::string cls_format = "text";
    cls_cmd->add_option("k", cls_k, "suspension count")->required();
    cls_cmd->add_option("m", cls_m, "projective exponent m of D(m,n)")->required();
    cls_cmd->add_option("n", cls_n, "complex exponent n of D(m,n)")->required();
    cls_cmd->add_option("--format", cls_format, "text, csv, markdown, or json-lines")
        ->check(CLI::IsMember({"text", "csv", "markdown", "json-lines"}));
    cls_cmd->callback([&] {
        const KnowledgeBase kb = load_kb();
        Classifier cl(kb);
        render_verdicts(out, {cl.classify(cls_k, cls_m, cls_n)}, cls_format);
    });

    // table
    auto* tbl_cmd = app.add_subcommand("table", "verdict sweep over ranges of k, m, n");
    std::string tbl_k, tbl_m, tbl_n, tbl_format = "text";
    tbl_cmd->add_option("--k", tbl_k, "range: a..b or comma list")->required();
    tbl_cmd->add_option("--m", tbl_m, "range: a..b or comma list")->required();
    tbl_cmd->add_option("--n", tbl_n, "range: a..b or comma list")->required();
    tbl_cmd->add_option("--format", tbl_format, "text, csv, markdown, or json-lines")
        ->check(CLI::IsMember({"text", "csv", "markdown", "json-lines"}));
    tbl_cmd->callback([&] {
        const KnowledgeBase kb = load_kb();
        Classifier cl(kb);
        render_verdicts(out,
                        cl.table(parse_range_list(tbl_k), parse_range_list(tbl_m),
                                 parse_range_list(tbl_n)),
                        tbl_format);
    });

    // open
    auto* open_cmd = app.add_subcommand("open", "triples the rule set leaves unsettled");
    std::string open_k, open_m, open_n, open_format = "text";
    open_cmd->add_option("--k", open_k, "range: a..b or comma list")->required();
    open_cmd->add_option("--m", open_m, "range: a..b or comma list")->required();
    open_cmd->add_option("--n", open_n, "range: a..b or comma list")->required();
    open_cmd->add_option("--format", open_format, "text or json-lines")
        ->check(CLI::IsMember({"text", "json-lines"}));
    open_cmd->callback([&] {
        const KnowledgeBase kb = load_kb();
        Classifier cl(kb);
        auto triples = cl.open_cases(parse_range_list(open_k), parse_range_list(open_m),
                                     parse_range_list(open_n));
        for (auto [k, m, n] : triples) {
            const Verdict& v = cl.classify(k, m, n);
            if (open_format == "json-lines") {
                out << verdict_to_json(v).dump() << "\n";
            } else {
                out << k << " " << m << " " << n;
                if (!v.open_citation_id.empty())
                    out << "  [" << v.open_citation_id << "] " << v.open_quote;
                out << "\n";
            }
        }
    });

    // selftest
    auto* self_cmd = app.add_subcommand("selftest", "run the built-in check suites");
    std::string self_suite = "all";
    self_cmd->add_option("--suite", self_suite, "all, steenrod, knowledge, engine, classifier");
    self_cmd->callback([&] { exit_code = run_selftest(self_suite, out); });

    // parse + dispatch
    std::vector<std::string> argv_store;
    argv_store.push_back("doldw");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(argv_store.size());
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ConsistencyError& e) {
        err << "fact consistency failure: " << e.what() << "\n  first:  " << e.first_id
            << "\n  second: " << e.second_id << "\n";
        return 4;
    } catch (const InconsistencyError& e) {
        err << e.what() << "\n";
        return 4;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

}  // namespace doldw::cli
