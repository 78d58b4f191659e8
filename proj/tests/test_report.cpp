#include <doctest.h>

#include <json.hpp>

#include "deutsch/format.hpp"
#include "deutsch/report.hpp"
#include "deutsch/selftest.hpp"

using namespace deutsch;

namespace {

std::vector<BitFn> all_oracles() {
    auto fns = all_bit_fns();
    return {fns.begin(), fns.end()};
}

std::vector<Method> every_method() {
    auto ms = all_methods();
    return {ms.begin(), ms.end()};
}

}  // namespace

TEST_CASE("single-run reports carry classification, cost, and witness") {
    RunReport baseline = run_method({0, 1}, Method::baseline);
    CHECK(baseline.classification == Classification::balanced);
    CHECK(baseline.queries == 2);
    CHECK(baseline.witness == "f(0)=0,f(1)=1");

    RunReport quantum = run_method({0, 0}, Method::quantum);
    CHECK(quantum.classification == Classification::constant);
    CHECK(quantum.queries == 1);
    CHECK(quantum.witness == "(0,1,0,0)");

    RunReport gauss = run_method({0, 1}, Method::gauss);
    CHECK(gauss.queries == 1);
    CHECK(gauss.witness == "-2");

    RunReport surd = run_method({0, 0}, Method::surd);
    CHECK(surd.witness == "-3+2√2");

    FamilyParams fam{Rat(-3, 7), FamilySign::minus};
    RunReport family = run_method({1, 0}, Method::gauss_family, fam);
    CHECK(family.witness == "-6/7");
    CHECK(family.classification == Classification::balanced);
}

TEST_CASE("the run matrix is ordered and complete") {
    auto reports = run_matrix(all_oracles(), every_method(), {});
    REQUIRE(reports.size() == 20);
    int idx = 0;
    for (BitFn fn : all_bit_fns())
        for (Method m : all_methods()) {
            CHECK(reports[idx].oracle == fn);
            CHECK(reports[idx].method == m);
            CHECK(reports[idx].classification == fn.kind());
            CHECK(reports[idx].queries == (m == Method::baseline ? 2 : 1));
            ++idx;
        }
}

TEST_CASE("every witness parses back to its exact value") {
    auto reports = run_matrix(all_oracles(), every_method(), {});
    for (const RunReport& r : reports) {
        switch (r.method) {
            case Method::baseline: {
                int b0 = -1, b1 = -1;
                REQUIRE(std::sscanf(r.witness.c_str(), "f(0)=%d,f(1)=%d", &b0, &b1) == 2);
                CHECK(b0 == r.oracle.f0);
                CHECK(b1 == r.oracle.f1);
                break;
            }
            case Method::quantum: {
                Distribution4 d = parse_distribution(r.witness);
                CHECK(to_string(d) == r.witness);
                CHECK(d.p[0] + d.p[1] + d.p[2] + d.p[3] == Rat(1));
                break;
            }
            case Method::gauss:
            case Method::gauss_family:
                CHECK(to_string(parse_gauss(r.witness)) == r.witness);
                break;
            case Method::surd:
                CHECK(to_string(parse_surd(r.witness)) == r.witness);
                break;
        }
    }
}

TEST_CASE("csv output is fixed-schema and quoted where needed") {
    auto reports = run_matrix(all_oracles(), every_method(), {});
    std::string csv = render_csv(reports);
    CHECK(csv.rfind("oracle,method,classification,queries,witness\n", 0) == 0);
    CHECK(csv.find("01,gauss,balanced,1,-2\n") != std::string::npos);
    CHECK(csv.find("10,surd,balanced,1,-1\n") != std::string::npos);
    CHECK(csv.find("00,baseline,constant,2,\"f(0)=0,f(1)=0\"\n") != std::string::npos);
    CHECK(csv.find("00,quantum,constant,1,\"(0,1,0,0)\"\n") != std::string::npos);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 21);  // header + 20 rows
}

TEST_CASE("json output is an array of twenty complete rows") {
    auto reports = run_matrix(all_oracles(), every_method(), {});
    auto parsed = nlohmann::json::parse(render_json(reports));
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 20);
    CHECK(parsed[0]["oracle"] == "00");
    CHECK(parsed[0]["method"] == "baseline");
    CHECK(parsed[0]["queries"] == 2);
    CHECK(parsed[7]["method"] == "gauss");
    CHECK(parsed[7]["oracle"] == "01");
    CHECK(parsed[7]["witness"] == "-2");
    for (const auto& row : parsed)
        for (const char* key : {"oracle", "method", "classification", "queries", "witness"})
            CHECK(row.contains(key));
}

TEST_CASE("text output lists the four gaussian witnesses") {
    auto reports = run_matrix(all_oracles(), every_method(), {});
    std::string text = render_text(reports);
    CHECK(text.rfind("oracle", 0) == 0);
    for (const char* witness : {" 2i", " -2", " 2", " -2i"})
        CHECK(text.find(witness) != std::string::npos);
    CHECK(text.find("gauss-family") != std::string::npos);
}

TEST_CASE("identical invocations render byte-identical output") {
    auto first = run_matrix(all_oracles(), every_method(), {});
    auto second = run_matrix(all_oracles(), every_method(), {});
    for (const std::string format : {"text", "csv", "json"})
        CHECK(render(first, format) == render(second, format));
}

TEST_CASE("spec strings parse or reject") {
    CHECK(parse_oracle_spec("all").size() == 4);
    auto one = parse_oracle_spec("10");
    REQUIRE(one.size() == 1);
    CHECK((one[0] == BitFn{1, 0}));
    CHECK_THROWS_AS(parse_oracle_spec("99"), std::invalid_argument);
    CHECK_THROWS_AS(parse_oracle_spec("0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_oracle_spec(""), std::invalid_argument);

    CHECK(parse_method_spec("all").size() == 5);
    CHECK(parse_method_spec("family")[0] == Method::gauss_family);
    CHECK(parse_method_spec("gauss-family")[0] == Method::gauss_family);
    CHECK_THROWS_AS(parse_method_spec("bogus"), std::invalid_argument);

    CHECK_THROWS_AS(render({}, "yaml"), std::invalid_argument);
}

TEST_CASE("the built-in selftest passes clean") {
    auto suites = run_selftest();
    CHECK(suites.size() >= 8);
    int total = 0;
    for (const SuiteResult& s : suites) {
        CHECK(s.checks > 0);
        CHECK(s.failures.empty());
        total += s.checks;
    }
    CHECK(total > 1000);
}
