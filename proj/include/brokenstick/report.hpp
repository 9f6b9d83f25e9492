#pragma once

#include "brokenstick/events.hpp"
#include "brokenstick/model.hpp"
#include "brokenstick/probability.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace brokenstick {

inline constexpr int kSchemaVersion = 1;

enum class OutputFormat { Text, Json, Csv };

struct RunConfig {
    std::vector<Interpretation> cases;   // table rows, in output order
    std::vector<Method> methods;         // empty = all three
    std::uint64_t n = 1'000'000;
    std::uint64_t seed = 42;
    SamplerKind sampler = SamplerKind::DirectUniform;
    OutputFormat format = OutputFormat::Text;
};

struct SummaryRow {
    Interpretation interpretation{};
    double p_exists = 0.0; // best available estimate (closed form > quadrature > MC)
    double p_acute = 0.0;
    double ratio = 0.0;    // (p_exists - p_acute) / p_acute
    std::vector<ProbabilityEstimate> estimates; // flat records, exists before acute
    bool agree = true;
    std::vector<std::string> notes;
};

SummaryRow summarize(Interpretation i, const RunConfig& cfg);
std::vector<SummaryRow> build_table(const RunConfig& cfg);

// One flat record per (case, predicate, method) plus per-case summary rows
// (method "summary", predicates "exists"/"acute"/"ratio"). Doubles printed
// with %.17g so output is bitwise stable for identical inputs.
std::string to_csv(const std::vector<SummaryRow>& rows);
std::string to_json(const std::vector<SummaryRow>& rows, const RunConfig& cfg);
std::string to_text(const std::vector<SummaryRow>& rows);

// Writes the report for cfg to out. Returns 0 when every row's agreement
// flag passes, 1 otherwise (the report is still written).
int run(const RunConfig& cfg, std::ostream& out);

} // namespace brokenstick
