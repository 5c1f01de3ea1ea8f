// classifier.hpp -- the verdict pipeline.
//
// For a query (k, m, n) every rule below is evaluated; non-triviality rules
// (N*) and triviality rules (T*) firing together is a fatal inconsistency,
// otherwise the fired category decides and the trace records every rule that
// fired, each with its citation.  No rule firing at all is a first-class
// Unknown (some of those carry an annotation naming the published open case).

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "knowledge.hpp"
#include "obstruction.hpp"
#include "space.hpp"

namespace doldw {

enum class Status { WTrivial, NotWTrivial, Unknown };

inline const char* status_string(Status s) {
    switch (s) {
        case Status::WTrivial: return "w_trivial";
        case Status::NotWTrivial: return "not_w_trivial";
        default: return "unknown";
    }
}

struct TraceStep {
    std::string rule_id;
    std::string citation_id;
    std::string quote;
    std::string consulted;  // facts and sub-verdicts this rule rested on
};

struct Verdict {
    int k = 0, m = 0, n = 0;
    Status status = Status::Unknown;
    std::vector<TraceStep> trace;
    std::vector<Certificate> engine_reports;  // populated when the engine decided
    std::string open_citation_id;             // set iff Unknown matches a listed open case
    std::string open_quote;
};

class InconsistencyError : public std::runtime_error {
public:
    int k, m, n;
    std::string nontrivial_rule, trivial_rule;
    InconsistencyError(int k, int m, int n, std::string nr, std::string tr)
        : std::runtime_error("inconsistency at (k=" + std::to_string(k) +
                             ", m=" + std::to_string(m) + ", n=" + std::to_string(n) +
                             "): rule " + nr + " derives not_w_trivial while rule " + tr +
                             " derives w_trivial"),
          k(k),
          m(m),
          n(n),
          nontrivial_rule(std::move(nr)),
          trivial_rule(std::move(tr)) {}
};

// Verdicts are pure functions of (facts, k, m, n); the memo table is not
// synchronized, so use one Classifier per thread and partition sweeps by
// triple -- per-thread instances always agree.
class Classifier {
public:
    explicit Classifier(const KnowledgeBase& kb) : kb_(kb) {}

    // Memoized; safe to call repeatedly.  Throws InconsistencyError when an
    // N-rule and a T-rule fire on the same triple.
    const Verdict& classify(int k, int m, int n) {
        if (k < 0 || m < 1 || n < 0)
            throw std::invalid_argument("classify needs k >= 0, m >= 1, n >= 0");
        const auto key = std::make_tuple(k, m, n);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        Verdict v = evaluate(k, m, n);
        return memo_.emplace(key, std::move(v)).first->second;
    }

    std::vector<Verdict> table(const std::vector<int>& ks, const std::vector<int>& ms,
                               const std::vector<int>& ns) {
        std::vector<Verdict> out;
        for (int k : ks)
            for (int m : ms)
                for (int n : ns) out.push_back(classify(k, m, n));
        return out;
    }

    std::vector<std::tuple<int, int, int>> open_cases(const std::vector<int>& ks,
                                                      const std::vector<int>& ms,
                                                      const std::vector<int>& ns) {
        std::vector<std::tuple<int, int, int>> out;
        for (const auto& v : table(ks, ms, ns))
            if (v.status == Status::Unknown) out.emplace_back(v.k, v.m, v.n);
        return out;
    }

    const KnowledgeBase& kb() const noexcept { return kb_; }

private:
    const KnowledgeBase& kb_;
    std::map<std::tuple<int, int, int>, Verdict> memo_;

    Verdict evaluate(int k, int m, int n) {
        const auto& reg = citation_registry();
        Verdict v;
        v.k = k;
        v.m = m;
        v.n = n;
        std::vector<TraceStep> nfired, tfired;
        std::vector<Certificate> engine;
        const SpaceModel model = SpaceModel::dold(m, n);

        // N1: a nontrivial bundle over the suspended base RP^m pulls back.
        if (auto rp = kb_.rp_w_trivial(k, m); rp.value == Tri::False)
            nfired.push_back({"N1", "rp-pullback", reg.at("rp-pullback"),
                              "fact " + rp.fact->id + ": " + rp.fact->quote});

        // N2: a nontrivial bundle over the suspended quotient by D(m,n-1) pulls back.
        if (n >= 1) {
            if (auto st = kb_.stunted_w_trivial(n + k, n + m, n - 1); st.value == Tri::False)
                nfired.push_back({"N2", "stunted-pullback", reg.at("stunted-pullback"),
                                  "fact " + st.fact->id + ": " + st.fact->quote});
        }

        // N3 / T1: recorded verdicts for specific suspended Dold spaces.
        if (auto ed = kb_.explicit_dold_facts(k, m, n); ed.value == Tri::False)
            nfired.push_back({"N3", ed.fact->citation_id, ed.fact->quote, "fact " + ed.fact->id});
        else if (ed.value == Tri::True)
            tfired.push_back({"T1", ed.fact->citation_id, ed.fact->quote, "fact " + ed.fact->id});

        // T0: nine suspensions kill everything.
        if (k >= 9) tfired.push_back({"T0", "susp-nine", reg.at("susp-nine"), ""});

        // T2: no power of 2 fits in the suspended dimension window at all.
        if (k >= 1 && admissible_powers(model, k).empty())
            tfired.push_back({"T2", "dim-window", reg.at("dim-window"),
                              "no s with " + std::to_string(k + 1) + " ≤ 2^s ≤ " +
                                  std::to_string(k + model.dim())});

        // T3: KO vanishing splits off the RP part, which is itself W-trivial.
        if (n % 2 == 0) {
            auto ko = kb_.ko_vanishes(k, m);
            auto rp = kb_.rp_w_trivial(k, m);
            if (ko.value == Tri::True && rp.value == Tri::True)
                tfired.push_back({"T3", "ko-split", reg.at("ko-split"),
                                  "facts " + ko.fact->id + " and " + rp.fact->id});
        }

        // T4: KO vanishing one floor down makes the fiber-quotient map surjective,
        // so triviality of the suspended CP fiber wing suffices.
        if (n % 2 == 0 && n >= 2 && m >= 2) {
            auto ko = kb_.ko_vanishes(k, m - 1);
            auto rp = kb_.rp_w_trivial(k, m);
            if (ko.value == Tri::True && rp.value == Tri::True) {
                auto cp = kb_.cp_w_trivial(k + m, n);
                bool via_engine = false;
                bool cp_ok = cp.value == Tri::True;
                if (cp.value == Tri::Unknown) {
                    auto cert = certify_w_trivial(SpaceModel::complex_proj(n), k + m, kb_);
                    if (cert.certified()) {
                        cp_ok = true;
                        via_engine = true;
                        engine.push_back(std::move(cert));
                    }
                }
                if (cp_ok) {
                    tfired.push_back({"T4", "ko-fiber-surj", reg.at("ko-fiber-surj"),
                                      via_engine
                                          ? "engine certified CP(" + std::to_string(n) + ") at " +
                                                std::to_string(k + m) + " suspensions"
                                          : "facts " + ko.fact->id + ", " + rp.fact->id + ", " +
                                                cp.fact->id + ": " + cp.fact->quote});
                    if (via_engine)
                        tfired.push_back({"T4", "engine-certificate", reg.at("engine-certificate"),
                                          "candidate spaces of the suspended fiber are zero"});
                }
            }
        }

        // T5: the Steenrod candidate engine certifies directly.
        if (k >= 1) {
            auto cert = certify_w_trivial(model, k, kb_);
            if (cert.certified()) {
                tfired.push_back({"T5", "first-pow2", reg.at("first-pow2"),
                                  cert.vacuous ? "vacuous: no admissible power of 2"
                                               : "every candidate space is zero"});
                engine.push_back(std::move(cert));
            }
        }

        // T6: reduce along D(m-1,n) when the restriction is injective on all
        // candidate degrees and the smaller space is settled W-trivial.
        if (k >= 1) {
            bool down = false;
            std::string consulted;
            if (m >= 2) {
                const Verdict& sub = classify(k, m - 1, n);
                down = sub.status == Status::WTrivial;
                consulted = "classify(" + std::to_string(k) + ", " + std::to_string(m - 1) +
                            ", " + std::to_string(n) + ") = " + status_string(sub.status);
            } else if (n == 0) {
                down = true;
                consulted = "downstairs space is a point";
            } else {
                auto cp = kb_.cp_w_trivial(k, n);
                if (cp.value == Tri::True) {
                    down = true;
                    consulted = "fact " + cp.fact->id + ": " + cp.fact->quote;
                } else if (cp.value == Tri::Unknown &&
                           certify_w_trivial(SpaceModel::complex_proj(n), k, kb_).certified()) {
                    down = true;
                    consulted = "engine certified CP(" + std::to_string(n) + ") at " +
                                std::to_string(k) + " suspensions";
                }
            }
            if (down && reduction_step(model, k, kb_, down) == Reduction::Reduced)
                tfired.push_back({"T6", "subdold-mono", reg.at("subdold-mono"), consulted});
        }

        // T7: odd n steps up to even n+1 when the stunted wing is W-trivial.
        if (n % 2 == 1) {
            if (auto st = kb_.stunted_w_trivial(n + k, n + m, n - 1); st.value == Tri::True) {
                const Verdict& sub = classify(k, m, n + 1);
                if (sub.status == Status::WTrivial)
                    tfired.push_back({"T7", "odd-step", reg.at("odd-step"),
                                      "classify(" + std::to_string(k) + ", " + std::to_string(m) +
                                          ", " + std::to_string(n + 1) +
                                          ") = w_trivial; fact " + st.fact->id + ": " +
                                          st.fact->quote});
            }
        }

        if (!nfired.empty() && !tfired.empty())
            throw InconsistencyError(k, m, n, nfired.front().rule_id, tfired.front().rule_id);

        if (!nfired.empty()) {
            v.status = Status::NotWTrivial;
            v.trace = std::move(nfired);
        } else if (!tfired.empty()) {
            v.status = Status::WTrivial;
            v.trace = std::move(tfired);
            v.engine_reports = std::move(engine);
        } else {
            v.status = Status::Unknown;
            annotate_open(v);
        }
        return v;
    }

    // Published open families; annotation only ever decorates an Unknown.
    static void annotate_open(Verdict& v) {
        std::string id;
        if (v.n >= 2 && v.n % 2 == 0) {
            if (v.k == 3 && v.m % 8 == 1)
                id = "open-k3";
            else if (v.k == 4 && v.m == 2)
                id = "open-k4";
            else if (v.k == 5 && v.m % 8 == 3)
                id = "open-k5";
            else if (v.k == 6 && v.m % 8 == 4)
                id = "open-k6";
            else if (v.k == 7 && v.m % 8 == 5)
                id = "open-k7";
            else if (v.k == 8 && v.m >= 4 && v.m <= 6)
                id = "open-k8";
        } else if (v.n % 2 == 1) {
            if (v.k == 3 && v.n == 5 && v.m >= 5)
                id = "open-odd-35";
            else if (v.k == 5 && v.n == 3 && v.m >= 7)
                id = "open-odd-53";
            else if (v.k == 4 && v.m == 1 && v.n % 4 == 3)
                id = "open-41";
        }
        if (!id.empty()) {
            v.open_citation_id = id;
            v.open_quote = citation_registry().at(id);
        }
    }
};

}  // namespace doldw
