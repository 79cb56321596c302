#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rmt/report.hpp"
#include "rmt/suites.hpp"

#include <fstream>
#include <sstream>

using namespace rmt;

namespace {

VerificationReport sample_report() {
    VerificationReport rep;
    SuiteReport s;
    s.id = "sl2";
    s.build_info = build_info_string();
    s.seed = 99;
    s.constants["kappa"] = 6.2831853;
    s.notes.push_back("example note");
    CaseRecord c = make_case("alpha", "n=2", Cx(1.0, -0.5), Cx(1.0, -0.5000001), 1e-4,
                             "series", "contour");
    c.xlabel = "t";
    c.xs = {0.0, 0.5, 1.0};
    c.ys1 = {Cx(1, 0), Cx(2, 0.1), Cx(3, -0.2)};
    c.ys2 = {Cx(1, 0), Cx(2, 0.1), Cx(3, -0.2)};
    s.cases.push_back(c);
    CaseRecord d = make_case("beta", "n=3", Cx(2, 0), Cx(3, 0), 1e-6, "lhs", "rhs");
    d.expected_failure = true;
    d.status = "DIVERGENT-AS-EXPECTED";
    s.cases.push_back(d);
    rep.suites.push_back(s);
    return rep;
}

} // namespace

TEST_CASE("empty report emits the minimal document") {
    VerificationReport rep;
    CHECK(emit(rep, EmitFormat::json) == R"({"suites":[],"summary":{"fail":0,"pass":0}})");
}

TEST_CASE("csv has one row per case plus a header") {
    auto rep = sample_report();
    std::string csv = emit(rep, EmitFormat::csv);
    int rows = 0;
    for (char ch : csv)
        if (ch == '\n') ++rows;
    CHECK(rows == 3);
    CHECK(csv.rfind("suite,case,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,tol,pass", 0) == 0);
}

TEST_CASE("json round trip is lossless") {
    auto rep = sample_report();
    auto parsed = parse_report_json(emit(rep, EmitFormat::json));
    CHECK(parsed == rep);
}

TEST_CASE("plotdata emits aligned curve columns") {
    auto rep = sample_report();
    std::string pd = emit(rep, EmitFormat::plotdata);
    std::istringstream is(pd);
    std::string line;
    std::getline(is, line);
    CHECK(line.rfind("# sl2/alpha t", 0) == 0);
    int datalines = 0;
    while (std::getline(is, line))
        if (!line.empty() && line[0] != '#') ++datalines;
    CHECK(datalines == 3);
    // each data line carries x + two complex columns
    std::istringstream first("0 1 0 1 0");
    (void)first;
}

TEST_CASE("pass accounting honors expected failures") {
    auto rep = sample_report();
    CHECK(rep.total_pass() == 1);
    CHECK(rep.total_fail() == 1);
    CHECK(rep.all_pass()); // the failing case is an expected divergence
    rep.suites[0].cases[1].expected_failure = false;
    CHECK_FALSE(rep.all_pass());
}

TEST_CASE("config validation and file loading") {
    SuiteConfig cfg;
    cfg.suite = "bogus";
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.suite = "su1n";
    cfg.n = 1;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.n = 3;
    cfg.l = 3;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.l = 2;
    cfg.validate();

    std::string path = "test_config_tmp.ini";
    {
        std::ofstream out(path);
        out << "# comment\n[suite]\nname = sl2\n[params]\nn = 3\nseed = 777\n[output]\nformat = "
               "csv\n";
    }
    SuiteConfig loaded = load_config_file(path);
    CHECK(loaded.suite == "sl2");
    CHECK(loaded.n == 3);
    CHECK(loaded.seed == 777);
    CHECK(loaded.format == EmitFormat::csv);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_config_file("does_not_exist.ini"), ConfigError);
}

TEST_CASE("counterexample suite reports expected divergence and passes") {
    SuiteConfig cfg;
    cfg.suite = "counterexample";
    auto rep = run_suite(cfg);
    REQUIRE(rep.suites.size() == 1);
    for (auto& c : rep.suites[0].cases) {
        CHECK(c.status == "DIVERGENT-AS-EXPECTED");
        CHECK(c.expected_failure);
        CHECK(c.pass);
    }
    CHECK(rep.all_pass());
}
