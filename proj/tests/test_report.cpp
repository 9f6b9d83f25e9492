#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brokenstick/report.hpp"
#include "brokenstick/svg.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace brokenstick;

namespace {

RunConfig small_config() {
    RunConfig cfg;
    cfg.cases = {Interpretation::Sides, Interpretation::Medians};
    cfg.n = 100000;
    cfg.seed = 42;
    return cfg;
}

std::vector<std::string> split(const std::string& s, char sep) {
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

} // namespace

TEST_CASE("summary rows carry best estimates and a consistent ratio") {
    const RunConfig cfg = small_config();
    const SummaryRow row = summarize(Interpretation::Sides, cfg);
    CHECK(row.p_exists == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(row.p_acute == doctest::Approx(0.0794415416798359).epsilon(1e-12));
    CHECK(row.ratio ==
          doctest::Approx(obtuse_acute_ratio(row.p_exists, row.p_acute)).epsilon(1e-15));
    CHECK(row.agree);
    // closed form + quadrature + MC for acute, closed form + MC for exists
    CHECK(row.estimates.size() == 5);
}

TEST_CASE("method restriction is honored") {
    RunConfig cfg = small_config();
    cfg.methods = {Method::MonteCarlo};
    const SummaryRow row = summarize(Interpretation::Sides, cfg);
    for (const ProbabilityEstimate& e : row.estimates)
        CHECK(e.method == Method::MonteCarlo);
    // best value falls back to the MC estimate
    CHECK(std::abs(row.p_exists - 0.25) < 0.01);
}

TEST_CASE("csv output parses back and the ratio column recomputes") {
    const RunConfig cfg = small_config();
    const std::string csv = to_csv(build_table(cfg));
    std::istringstream in(csv);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "schema_version,case,predicate,method,value,uncertainty,n,seed");
    double p_exists = 0, p_acute = 0, ratio = -1;
    int rows = 0;
    while (std::getline(in, line)) {
        const auto f = split(line, ',');
        REQUIRE(f.size() == 8);
        CHECK(f[0] == "1");
        ++rows;
        if (f[1] == "sides" && f[3] == "summary") {
            if (f[2] == "exists") p_exists = std::stod(f[4]);
            if (f[2] == "acute") p_acute = std::stod(f[4]);
            if (f[2] == "ratio") ratio = std::stod(f[4]);
        }
    }
    CHECK(rows > 10);
    CHECK(std::abs(obtuse_acute_ratio(p_exists, p_acute) - ratio) < 1e-9);
}

TEST_CASE("csv output is identical across repeated runs") {
    const RunConfig cfg = small_config();
    CHECK(to_csv(build_table(cfg)) == to_csv(build_table(cfg)));
}

TEST_CASE("json output round trips") {
    const RunConfig cfg = small_config();
    const auto rows = build_table(cfg);
    const nlohmann::json doc = nlohmann::json::parse(to_json(rows, cfg));
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["seed"] == 42);
    CHECK(doc["sampler"] == "direct");
    REQUIRE(doc["summary"].size() == 2);
    for (const auto& s : doc["summary"]) {
        const double pe = s["p_exists"], pa = s["p_acute"], ratio = s["ratio"];
        CHECK(std::abs(obtuse_acute_ratio(pe, pa) - ratio) < 1e-9);
        CHECK(s["agree"] == true);
    }
    // records are flat and carry the MC metadata
    bool saw_mc = false;
    for (const auto& r : doc["records"]) {
        if (r["method"] == "monte-carlo") {
            saw_mc = true;
            CHECK(r["n"] == 100000);
            CHECK(r["seed"] == 42);
        }
    }
    CHECK(saw_mc);
}

TEST_CASE("run exit status reflects the agreement flags") {
    const RunConfig cfg = small_config();
    std::ostringstream out;
    CHECK(run(cfg, out) == 0);
    CHECK(!out.str().empty());
}

TEST_CASE("text format prints one line per case") {
    RunConfig cfg = small_config();
    cfg.format = OutputFormat::Text;
    std::ostringstream out;
    run(cfg, out);
    const std::string s = out.str();
    CHECK(s.find("sides") != std::string::npos);
    CHECK(s.find("medians") != std::string::npos);
    CHECK(s.find("P(exists)") != std::string::npos);
}

TEST_CASE("region plot area matches the event probability") {
    const std::string path = "test_region_sides_acute.svg";
    const RegionPlot plot =
        plot_region({Interpretation::Sides, Predicate::Acute}, 512, path);
    CHECK(plot.resolution == 512);
    CHECK(std::abs(plot.area_ratio - 0.0794415416798359) < 0.01 * 0.0794415416798359 + 1e-4);
    std::ifstream f(path);
    REQUIRE(f.good());
    std::stringstream buf;
    buf << f.rdbuf();
    const std::string svg = buf.str();
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("<polygon") != std::string::npos);
    CHECK(svg.find("<rect") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("plot resolution limits are enforced") {
    CHECK_THROWS(plot_region({Interpretation::Sides, Predicate::Exists}, 32, "x.svg"));
    CHECK_THROWS(plot_region({Interpretation::Sides, Predicate::Exists}, 5000, "x.svg"));
}

TEST_CASE("existence region plot covers a quarter of the triangle") {
    const std::string path = "test_region_sides_exists.svg";
    const RegionPlot plot =
        plot_region({Interpretation::Sides, Predicate::Exists}, 256, path);
    CHECK(std::abs(plot.area_ratio - 0.25) < 0.005);
    std::remove(path.c_str());
}
