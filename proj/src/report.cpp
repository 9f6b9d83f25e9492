#include "brokenstick/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace brokenstick {

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<Method> effective_methods(const RunConfig& cfg) {
    if (!cfg.methods.empty()) return cfg.methods;
    return {Method::ClosedForm, Method::Quadrature, Method::MonteCarlo};
}

bool wants(const std::vector<Method>& ms, Method m) {
    return std::find(ms.begin(), ms.end(), m) != ms.end();
}

} // namespace

SummaryRow summarize(Interpretation i, const RunConfig& cfg) {
    SummaryRow row;
    row.interpretation = i;
    const std::vector<Method> methods = effective_methods(cfg);
    const SampleStream stream{cfg.seed, cfg.sampler};

    for (Predicate p : {Predicate::Exists, Predicate::Acute}) {
        const EventDescriptor e{i, p};
        const ProbabilityEstimate* cf = nullptr;
        const ProbabilityEstimate* qd = nullptr;
        const ProbabilityEstimate* mc = nullptr;
        auto keep = [&](ProbabilityEstimate est) -> const ProbabilityEstimate* {
            row.estimates.push_back(est);
            return &row.estimates.back();
        };
        // order matters: later push_backs may reallocate, so record indices
        std::size_t icf = SIZE_MAX, iqd = SIZE_MAX, imc = SIZE_MAX;
        if (wants(methods, Method::ClosedForm) && has_closed_form(e)) {
            keep(closed_form(e));
            icf = row.estimates.size() - 1;
        }
        if (wants(methods, Method::Quadrature) && has_quadrature(e)) {
            keep(quadrature(e));
            iqd = row.estimates.size() - 1;
        }
        if (wants(methods, Method::MonteCarlo)) {
            keep(monte_carlo(e, cfg.n, stream));
            imc = row.estimates.size() - 1;
        }
        cf = icf != SIZE_MAX ? &row.estimates[icf] : nullptr;
        qd = iqd != SIZE_MAX ? &row.estimates[iqd] : nullptr;
        mc = imc != SIZE_MAX ? &row.estimates[imc] : nullptr;
        if (!cf && !qd && !mc) {
            row.agree = false;
            row.notes.push_back(event_key(e) + ": no requested method is available");
            continue;
        }

        const ProbabilityEstimate* best = cf ? cf : (qd ? qd : mc);
        (p == Predicate::Exists ? row.p_exists : row.p_acute) = best->value;

        if (mc && (cf || qd)) {
            const double exact = cf ? cf->value : qd->value;
            const double tol = std::max(4.0 * mc->uncertainty, 1e-12);
            if (std::abs(mc->value - exact) > tol) {
                row.agree = false;
                row.notes.push_back(event_key(e) + ": monte-carlo outside 4 sigma");
            }
        }
        if (cf && qd && std::abs(cf->value - qd->value) > qd->uncertainty + 1e-9) {
            row.agree = false;
            row.notes.push_back(event_key(e) + ": quadrature disagrees with closed form");
        }
        if (mc && mc->failures != 0)
            row.notes.push_back(event_key(e) + ": " + std::to_string(mc->failures) +
                                " solver failures");
    }
    row.ratio = obtuse_acute_ratio(row.p_exists, row.p_acute);
    return row;
}

std::vector<SummaryRow> build_table(const RunConfig& cfg) {
    std::vector<SummaryRow> rows;
    rows.reserve(cfg.cases.size());
    for (Interpretation i : cfg.cases) rows.push_back(summarize(i, cfg));
    return rows;
}

std::string to_csv(const std::vector<SummaryRow>& rows) {
    std::ostringstream out;
    out << "schema_version,case,predicate,method,value,uncertainty,n,seed\n";
    auto line = [&](std::string_view c, std::string_view p, std::string_view m, double v,
                    double u, std::uint64_t n, std::uint64_t seed) {
        out << kSchemaVersion << ',' << c << ',' << p << ',' << m << ',' << fmt17(v) << ','
            << fmt17(u) << ',' << n << ',' << seed << '\n';
    };
    for (const SummaryRow& r : rows) {
        const std::string_view c = to_string(r.interpretation);
        for (const ProbabilityEstimate& e : r.estimates)
            line(c, to_string(e.event.predicate), to_string(e.method), e.value,
                 e.uncertainty, e.n, e.seed);
        line(c, "exists", "summary", r.p_exists, 0.0, 0, 0);
        line(c, "acute", "summary", r.p_acute, 0.0, 0, 0);
        line(c, "ratio", "summary", r.ratio, 0.0, 0, 0);
    }
    return out.str();
}

std::string to_json(const std::vector<SummaryRow>& rows, const RunConfig& cfg) {
    nlohmann::ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["n"] = cfg.n;
    doc["seed"] = cfg.seed;
    doc["sampler"] =
        cfg.sampler == SamplerKind::DirectUniform ? "direct" : "parallelogram";
    doc["records"] = nlohmann::ordered_json::array();
    doc["summary"] = nlohmann::ordered_json::array();
    for (const SummaryRow& r : rows) {
        const std::string c{to_string(r.interpretation)};
        for (const ProbabilityEstimate& e : r.estimates) {
            nlohmann::ordered_json rec;
            rec["case"] = c;
            rec["predicate"] = to_string(e.event.predicate);
            rec["method"] = to_string(e.method);
            rec["value"] = e.value;
            rec["uncertainty"] = e.uncertainty;
            rec["n"] = e.n;
            rec["seed"] = e.seed;
            doc["records"].push_back(rec);
        }
        nlohmann::ordered_json s;
        s["case"] = c;
        s["p_exists"] = r.p_exists;
        s["p_acute"] = r.p_acute;
        s["ratio"] = r.ratio;
        s["agree"] = r.agree;
        s["notes"] = r.notes;
        doc["summary"].push_back(s);
    }
    return doc.dump(2) + "\n";
}

std::string to_text(const std::vector<SummaryRow>& rows) {
    std::ostringstream out;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-24s %12s %12s %12s  %s\n", "case", "P(exists)",
                  "P(acute)", "obtuse/acute", "agree");
    out << buf;
    for (const SummaryRow& r : rows) {
        std::snprintf(buf, sizeof buf, "%-24s %12.9f %12.9f %12.6f  %s\n",
                      std::string(to_string(r.interpretation)).c_str(), r.p_exists,
                      r.p_acute, r.ratio, r.agree ? "yes" : "NO");
        out << buf;
        for (const std::string& note : r.notes) out << "    note: " << note << '\n';
    }
    return out.str();
}

int run(const RunConfig& cfg, std::ostream& out) {
    const std::vector<SummaryRow> rows = build_table(cfg);
    switch (cfg.format) {
        case OutputFormat::Csv: out << to_csv(rows); break;
        case OutputFormat::Json: out << to_json(rows, cfg); break;
        case OutputFormat::Text: out << to_text(rows); break;
    }
    for (const SummaryRow& r : rows)
        if (!r.agree) return 1;
    return 0;
}

} // namespace brokenstick
