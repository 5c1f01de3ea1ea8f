// format.hpp -- text / CSV / Markdown / json-lines rendering of verdicts and
// certificates.  Requires the vendored nlohmann json header on the include path.

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "classifier.hpp"
#include "gf2.hpp"
#include "obstruction.hpp"
#include "space.hpp"

#include "json.hpp"

namespace doldw {

inline std::vector<std::string> subspace_class_strings(const Subspace& s) {
    const auto bs = basis(s.model, s.degree);
    std::vector<std::string> out;
    for (Word row : s.rows) out.push_back(render_class(vector_to_class(row, bs)));
    return out;
}

// ---- certificates -------------------------------------------------------------

inline nlohmann::json report_to_json(const CandidateReport& r) {
    nlohmann::json filters = nlohmann::json::array();
    for (const auto& f : r.filters_applied)
        filters.push_back({{"tag", to_string(f.tag)},
                           {"citation_id", f.citation_id},
                           {"justification", f.justification}});
    return {{"s", r.s},
            {"degree_downstairs", r.degree_downstairs},
            {"raw_kernel", subspace_class_strings(r.raw_kernel)},
            {"after_filters", subspace_class_strings(r.after_filters)},
            {"filters", filters}};
}

inline nlohmann::json certificate_to_json(const Certificate& c) {
    nlohmann::json reports = nlohmann::json::array();
    for (const auto& r : c.reports) reports.push_back(report_to_json(r));
    return {{"space", render_space(c.model)},
            {"k", c.k},
            {"outcome", c.certified() ? "certified" : "inconclusive"},
            {"vacuous", c.vacuous},
            {"reports", reports}};
}

inline void render_report_text(std::ostream& out, const CandidateReport& r) {
    auto list = [](const std::vector<std::string>& v) {
        std::string s = "{";
        for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
        return s + "}";
    };
    out << "  s=" << r.s << ": candidates in degree " << r.degree_downstairs
        << ", raw kernel dim " << r.raw_kernel.dim() << " "
        << list(subspace_class_strings(r.raw_kernel)) << ", after filters dim "
        << r.after_filters.dim() << " " << list(subspace_class_strings(r.after_filters))
        << "\n";
    for (const auto& f : r.filters_applied)
        out << "    filter " << to_string(f.tag) << " [" << f.citation_id
            << "] sound via " << f.justification << "\n";
}

inline void render_certificate_text(std::ostream& out, const Certificate& c) {
    out << "certify Σ^" << c.k << " " << render_space(c.model) << ": "
        << (c.certified() ? "certified" : "inconclusive");
    if (c.vacuous) out << " (vacuous: no admissible power of 2)";
    out << "\n";
    for (const auto& r : c.reports) render_report_text(out, r);
}

// ---- verdicts -----------------------------------------------------------------

inline nlohmann::json verdict_to_json(const Verdict& v) {
    nlohmann::json rules = nlohmann::json::array();
    for (const auto& s : v.trace)
        rules.push_back({{"id", s.rule_id}, {"citation_id", s.citation_id}, {"quote", s.quote}});
    nlohmann::json j = {
        {"k", v.k}, {"m", v.m}, {"n", v.n}, {"status", status_string(v.status)}, {"rules", rules}};
    if (!v.engine_reports.empty()) {
        nlohmann::json certs = nlohmann::json::array();
        for (const auto& c : v.engine_reports) certs.push_back(certificate_to_json(c));
        j["engine_reports"] = certs;
    }
    if (!v.open_citation_id.empty())
        j["open_case"] = {{"citation_id", v.open_citation_id}, {"quote", v.open_quote}};
    return j;
}

inline std::vector<std::string> rule_ids(const Verdict& v) {
    std::vector<std::string> ids;
    for (const auto& s : v.trace)
        if (ids.empty() || ids.back() != s.rule_id) ids.push_back(s.rule_id);
    return ids;
}

inline std::string joined_rule_ids(const Verdict& v) {
    std::string s;
    for (const auto& id : rule_ids(v)) s += (s.empty() ? "" : ";") + id;
    return s;
}

inline void render_verdict_text(std::ostream& out, const Verdict& v) {
    out << "Σ^" << v.k << " D(" << v.m << "," << v.n << ") → " << status_string(v.status) << "\n";
    if (v.trace.empty()) out << "  (no rule fired)\n";
    for (const auto& s : v.trace) {
        out << "  " << s.rule_id << " [" << s.citation_id << "] " << s.quote << "\n";
        if (!s.consulted.empty()) out << "      consulted: " << s.consulted << "\n";
    }
    for (const auto& c : v.engine_reports) {
        out << "  engine: " << render_space(c.model) << " at " << c.k << " suspensions, "
            << (c.certified() ? "certified" : "inconclusive")
            << (c.vacuous ? " (vacuous)" : "") << "\n";
        for (const auto& r : c.reports) render_report_text(out, r);
    }
    if (!v.open_citation_id.empty())
        out << "  listed open case [" << v.open_citation_id << "]: " << v.open_quote << "\n";
}

inline void render_verdicts(std::ostream& out, const std::vector<Verdict>& rows,
                            const std::string& format) {
    if (format == "json-lines") {
        for (const auto& v : rows) out << verdict_to_json(v).dump() << "\n";
    } else if (format == "csv") {
        out << "k,m,n,status,rule_ids\n";
        for (const auto& v : rows)
            out << v.k << "," << v.m << "," << v.n << "," << status_string(v.status) << ","
                << joined_rule_ids(v) << "\n";
    } else if (format == "markdown") {
        out << "| k | m | n | status | rules |\n|---|---|---|---|---|\n";
        for (const auto& v : rows)
            out << "| " << v.k << " | " << v.m << " | " << v.n << " | "
                << status_string(v.status) << " | " << joined_rule_ids(v) << " |\n";
    } else {
        for (const auto& v : rows) render_verdict_text(out, v);
    }
}

}  // namespace doldw
