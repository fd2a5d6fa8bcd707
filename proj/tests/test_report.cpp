#include <doctest.h>

#include "commvul/fixtures.hpp"
#include "commvul/report.hpp"
#include "commvul/vulnerability.hpp"

using namespace commvul;

namespace {

VulnerabilityReport example9_report() {
    Graph g = reconstruct_example9();
    return analyze(g, example9_partition(g), {});
}

RunManifest manifest_for(const std::string& payload) {
    RunManifest m;
    m.add_input("example9.edges", payload);
    m.weights = WeightVector{};
    return m;
}

} // namespace

TEST_CASE("fnv1a64 known vectors") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a64_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("csv report layout") {
    VulnerabilityReport rep = example9_report();
    std::string csv = report_csv(rep, manifest_for("x"));
    CHECK(csv.find("community,S,T,Din,Dout,V,Vul,RV,v,R\n") != std::string::npos);
    CHECK(csv.find("1,1.0000,0.5000,0.1667,0.5000,0.5000,24.0000,27.6264,2.0000,2.0000") !=
          std::string::npos);
    CHECK(csv.find("3,0.8687,1.0000,1.0000,1.0000,1.0000,0.8687,1.0000,1.0000,1.0000") !=
          std::string::npos);
    CHECK(csv.find("# tool: commvul 1.0.0") != std::string::npos);
    CHECK(csv.find("# proposed_order: 3 < 2 < 1") != std::string::npos);
}

TEST_CASE("reports embed the manifest and are byte-stable") {
    VulnerabilityReport rep = example9_report();
    RunManifest m = manifest_for("payload");
    CHECK(report_csv(rep, m) == report_csv(rep, m));
    CHECK(report_json(rep, m) == report_json(rep, m));
    CHECK(report_markdown(rep, m) == report_markdown(rep, m));
    CHECK(report_json(rep, m).find("fnv1a64") != std::string::npos);
    CHECK(report_markdown(rep, m).find("# input: example9.edges") != std::string::npos);

    SUBCASE("a different input hash changes the bytes") {
        RunManifest other = manifest_for("other payload");
        CHECK(report_csv(rep, m) != report_csv(rep, other));
    }
}

TEST_CASE("comparison report") {
    VulnerabilityReport rep = example9_report();

    SUBCASE("without a supplied column") {
        ComparisonReport cmp = compare_orderings(rep, std::nullopt);
        CHECK(cmp.classical.chain == "3 < 1 = 2");
        CHECK(cmp.proposed.chain == "3 < 2 < 1");
        REQUIRE(cmp.rank_correlation.has_value());
        CHECK(*cmp.rank_correlation > 0.5);
    }

    SUBCASE("supplied column is ranked, not recomputed") {
        ComparisonReport cmp = compare_orderings(rep, std::vector<double>{5.0, 1.0, 3.0});
        REQUIRE(cmp.supplied.has_value());
        CHECK(cmp.supplied->chain == "2 < 3 < 1");
    }

    SUBCASE("wrong column length is rejected") {
        CHECK_THROWS_AS(compare_orderings(rep, std::vector<double>{1.0}), DomainError);
    }

    SUBCASE("all-tied ranking flags undefined correlation") {
        Graph k = reconstruct_example9();
        VulnerabilityReport r2 = example9_report();
        // force a constant classical column
        r2.classical.r = {1.0, 1.0, 1.0};
        ComparisonReport cmp = compare_orderings(r2, std::nullopt);
        CHECK_FALSE(cmp.rank_correlation.has_value());
        CHECK(!cmp.warnings.empty());
        (void)k;
    }
}

TEST_CASE("format_double sentinels") {
    CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(format_double(1.5, 2) == "1.50");
}
