// Acceptance suite: one self-contained check per criterion, each printing a
// PASS / FAIL / SKIP line. Run with no arguments for the whole suite or with
// criterion ids (e.g. "A1 A6") for a subset. Exit code 1 if any executed
// criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "commvul/centrality.hpp"
#include "commvul/community.hpp"
#include "commvul/entropy.hpp"
#include "commvul/fixtures.hpp"
#include "commvul/io.hpp"
#include "commvul/report.hpp"
#include "commvul/sensitivity.hpp"
#include "commvul/vulnerability.hpp"
#include "oracles.hpp"

using namespace commvul;
namespace fs = std::filesystem;

namespace {

const std::string kDataDir = COMMVUL_DATA_DIR;
const std::string kCliPath = COMMVUL_CLI_PATH;

struct Check {
    std::string label;
    bool ok;
    std::string detail;
};

struct Criterion {
    std::string id;
    std::string status = "PASS";   // PASS | FAIL | SKIP
    std::vector<Check> checks;
    std::vector<std::string> notes;

    void expect(const std::string& label, bool ok, const std::string& detail = "") {
        checks.push_back({label, ok, detail});
        if (!ok)
            status = "FAIL";
    }
    void expect_near(const std::string& label, double got, double want, double tol) {
        std::ostringstream d;
        d << "got " << got << ", expected " << want << " (tol " << tol << ")";
        expect(label, std::abs(got - want) <= tol, d.str());
    }
    void skip(const std::string& why) {
        status = "SKIP";
        notes.push_back(why);
    }
};

Graph load_data_graph(const std::string& name) {
    return load_edge_list(read_file(kDataDir + "/" + name)).graph;
}

Partition load_data_partition(const std::string& name, const Graph& g) {
    return load_partition(read_file(kDataDir + "/" + name), g);
}

bool data_present(const std::string& name) { return fs::exists(kDataDir + "/" + name); }

// ---------------------------------------------------------------- A1
Criterion a1_example9_golden_table() {
    Criterion c{"A1"};
    Graph g = reconstruct_example9();
    VulnerabilityReport rep = analyze(g, example9_partition(g), WeightVector{1, 1, 1, 1});
    const auto& f = rep.features;
    const double tol = 1e-3;

    const double want_s[3] = {1.0, 0.4298, 0.8687};
    const double want_t[3] = {0.5, 0.7924, 1.0};
    const double want_din[3] = {0.1667, 0.5, 1.0};
    const double want_dout[3] = {0.5, 0.5, 1.0};
    const double want_vul[3] = {24.0, 2.1696, 0.8687};
    const double want_rv[3] = {27.6264, 2.4975, 1.0};
    const double want_r[3] = {2.0, 2.0, 1.0};
    for (int x = 0; x < 3; ++x) {
        std::string row = "community " + std::to_string(x + 1);
        c.expect_near(row + " S", f.s[x], want_s[x], tol);
        c.expect_near(row + " T", f.t[x], want_t[x], tol);
        c.expect_near(row + " Din", f.din[x], want_din[x], tol);
        c.expect_near(row + " Dout", f.dout[x], want_dout[x], tol);
        c.expect_near(row + " Vul", rep.vul[x], want_vul[x], tol);
        c.expect_near(row + " RV", rep.rv[x], want_rv[x], tol);
        c.expect_near(row + " R", rep.classical.r[x], want_r[x], tol);
    }
    c.notes.push_back("pair-ordering calibration: unordered convention retained "
                      "(community complexity is subgraph-local; both conventions "
                      "reproduce the table on clique communities)");
    return c;
}

// ---------------------------------------------------------------- A2
Criterion a2_modularity_values() {
    Criterion c{"A2"};
    Graph e9 = reconstruct_example9();
    c.expect_near("example9 clique-partition Q", modularity(e9, example9_partition(e9)),
                  0.2857, 1e-4);

    Graph k = load_data_graph("karate.edges");
    DetectionResult det = detect_communities(k);
    if (det.partition.community_count() == 2) {
        c.expect("karate greedy k", true, "k = 2");
        c.expect("karate greedy Q in [0.37, 0.39]", det.q >= 0.37 && det.q <= 0.39,
                 "Q = " + std::to_string(det.q));
    } else {
        // Documented fallback: greedy refinements of the two-faction split
        // are accepted through Q-value bounds plus the published partition.
        c.notes.push_back("greedy stops at k = " +
                          std::to_string(det.partition.community_count()) +
                          " (Q = " + format_double(det.q) +
                          "); applying the Q-bound fallback with the published split");
        c.expect("karate greedy Q in [0.37, 0.39]", det.q >= 0.37 && det.q <= 0.39,
                 "Q = " + std::to_string(det.q));
        double q_published = modularity(k, load_data_partition("karate_partition.txt", k));
        c.expect("karate published-split Q in [0.37, 0.39]",
                 q_published >= 0.37 && q_published <= 0.39,
                 "Q = " + std::to_string(q_published));
    }

    if (data_present("manzi.edges")) {
        Graph m = load_data_graph("manzi.edges");
        double q = modularity(m, load_data_partition("manzi_partition.txt", m));
        c.expect_near("manzi published-partition Q", q, 0.6316, 1e-3);
    } else {
        c.notes.push_back("manzi.edges not supplied; Q check skipped");
    }
    if (data_present("italian380.edges")) {
        Graph it = load_data_graph("italian380.edges");
        double q = modularity(it, load_data_partition("italian380_partition.txt", it));
        c.expect_near("italian published-partition Q", q, 0.7596, 1e-3);
    } else {
        c.notes.push_back("italian380.edges not supplied; Q check skipped");
    }
    return c;
}

// ---------------------------------------------------------------- A3
Criterion a3_karate_golden_rows() {
    Criterion c{"A3"};
    Graph k = load_data_graph("karate.edges");
    Partition p = load_data_partition("karate_partition.txt", k);
    VulnerabilityReport rep = analyze(k, p, WeightVector{1, 1, 1, 1});

    c.expect("Din raw exactly (34, 34)",
             rep.features.din_raw[0] == 34 && rep.features.din_raw[1] == 34,
             "got (" + std::to_string(rep.features.din_raw[0]) + ", " +
                 std::to_string(rep.features.din_raw[1]) + ")");
    c.expect_near("T community 1", rep.features.t[0], 0.7060, 0.01);
    c.expect_near("T community 2", rep.features.t[1], 1.0, 0.01);
    c.expect_near("Vul community 1", rep.vul[0], 1.4162, 0.01);
    c.expect_near("Vul community 2", rep.vul[1], 1.0, 0.01);
    c.expect_near("RV community 1", rep.rv[0], 1.4162, 0.01);
    c.expect_near("RV community 2", rep.rv[1], 1.0, 0.01);
    if (c.status == "FAIL")
        c.notes.push_back(
            "known defect: the reference T column (0.7060, 1) is not reproducible "
            "under any betweenness scaling or scope consistent with the 9-node "
            "golden table (closest attainable ratio is 0.82 per-community, 0.985 "
            "at raw scale); S, Din, Dout and the classical columns do reproduce");
    return c;
}

// ---------------------------------------------------------------- A4
Criterion a4_manzi_golden_rows() {
    Criterion c{"A4"};
    if (!data_present("manzi.edges")) {
        c.skip("manzi.edges not supplied");
        return c;
    }
    Graph m = load_data_graph("manzi.edges");
    Partition p = load_data_partition("manzi_partition.txt", m);
    VulnerabilityReport rep = analyze(m, p, WeightVector{1, 1, 1, 1});
    const double want_rv[7] = {1.8775, 1.8682, 1.0, 17.9322, 1.7202, 1.1805, 15.9238};
    for (int x = 0; x < 7; ++x)
        c.expect_near("RV community " + std::to_string(x + 1), rep.rv[x], want_rv[x], 0.05);
    const double want_r[7] = {1.5, 1.5, 1.0, 1.5, 1.5, 1.5, 3.0};
    for (int x = 0; x < 7; ++x)
        c.expect_near("classical R community " + std::to_string(x + 1),
                      rep.classical.r[x], want_r[x], 1e-12);
    return c;
}

// ---------------------------------------------------------------- A5
Criterion a5_italian_orderings() {
    Criterion c{"A5"};
    if (!data_present("italian380.edges")) {
        c.skip("italian380.edges not supplied");
        return c;
    }
    Graph g = load_data_graph("italian380.edges");
    Partition p = load_data_partition("italian380_partition.txt", g);
    VulnerabilityReport rep = analyze(g, p, WeightVector{1, 1, 1, 1});
    c.expect("proposed chain", rep.proposed_order.chain ==
                                   "5 < 9 < 4 < 1 < 2 < 6 < 3 < 8 < 7 < 10",
             "got " + rep.proposed_order.chain);
    c.expect("classical chain", rep.classical_order.chain ==
                                    "5 < 9 < 2 = 4 = 6 < 1 = 3 = 7 = 8 < 10",
             "got " + rep.classical_order.chain);
    c.expect_near("RV community 10", rep.rv[9], 43.8623, 0.5);
    return c;
}

// ---------------------------------------------------------------- A6
Criterion a6_weight_degeneration() {
    Criterion c{"A6"};
    struct Fixture {
        std::string name;
        Graph graph;
        Partition partition;
    };
    std::vector<Fixture> fixtures;
    {
        Graph g = reconstruct_example9();
        Partition p = example9_partition(g);
        fixtures.push_back({"example9", std::move(g), std::move(p)});
    }
    {
        Graph g = load_data_graph("karate.edges");
        Partition p = load_data_partition("karate_partition.txt", g);
        fixtures.push_back({"karate", std::move(g), std::move(p)});
    }
    {
        Graph g = synthetic_five_communities();
        Partition p = synthetic_five_partition(g);
        fixtures.push_back({"synthetic5", std::move(g), std::move(p)});
    }
    if (data_present("manzi.edges")) {
        Graph g = load_data_graph("manzi.edges");
        Partition p = load_data_partition("manzi_partition.txt", g);
        fixtures.push_back({"manzi", std::move(g), std::move(p)});
    }
    if (data_present("italian380.edges")) {
        Graph g = load_data_graph("italian380.edges");
        Partition p = load_data_partition("italian380_partition.txt", g);
        fixtures.push_back({"italian380", std::move(g), std::move(p)});
    }

    for (const auto& fx : fixtures) {
        VulnerabilityReport rep = analyze(fx.graph, fx.partition, WeightVector{0, 1, 0, 0});
        double worst = 0.0;
        for (int x = 0; x < rep.features.k; ++x)
            worst = std::max(worst, std::abs(rep.rv[x] - rep.classical.r[x]));
        c.expect(fx.name + ": RV(0,1,0,0) equals classical R", worst <= 1e-9,
                 "max component deviation " + std::to_string(worst));
    }
    return c;
}

// ---------------------------------------------------------------- A7
void sobol_property_checks(Criterion& c, const std::string& name,
                           const CommunityFeatures& features, const SobolReport& rep) {
    for (size_t x = 0; x < rep.communities.size(); ++x) {
        const auto& community = rep.communities[x];
        const double feats[4] = {features.s[x], features.dout[x], features.din[x],
                                 features.t[x]};
        std::string row = name + " community " + std::to_string(x + 1);
        double si_sum = 0.0, eps_sum = 0.0;
        for (int i = 0; i < 4; ++i) {
            const auto& fac = community.factors[i];
            if (feats[i] == 1.0) {
                c.expect(row + " factor " + std::to_string(i) + " exact zero",
                         fac.si == 0.0 && fac.st == 0.0 && fac.exact_zero, "");
            }
            c.expect(row + " SI <= ST + noise",
                     fac.si <= fac.st + 3.0 * (fac.si_halfwidth + fac.st_halfwidth) + 1e-9,
                     "si " + std::to_string(fac.si) + " st " + std::to_string(fac.st));
            si_sum += fac.si;
            eps_sum += 3.0 * fac.si_halfwidth;
        }
        c.expect(row + " sum SI <= 1 + noise", si_sum <= 1.0 + eps_sum + 1e-9,
                 "sum " + std::to_string(si_sum));
    }
}

Criterion a7_sobol_properties() {
    Criterion c{"A7"};
    SamplePlan plan;
    plan.samples = 10000;
    plan.seed = 20260810;

    {
        Graph g = synthetic_five_communities();
        Partition p = synthetic_five_partition(g);
        CommunityFeatures f = analyze(g, p, {}).features;
        SobolReport rep = sobol_indices(f, plan);
        sobol_property_checks(c, "synthetic5", f, rep);
    }

    if (data_present("manzi.edges")) {
        Graph g = load_data_graph("manzi.edges");
        Partition p = load_data_partition("manzi_partition.txt", g);
        CommunityFeatures f = analyze(g, p, {}).features;
        SobolReport rep = sobol_indices(f, plan);
        sobol_property_checks(c, "manzi", f, rep);

        int agree = 0;
        for (const auto& community : rep.communities) {
            std::vector<int> order_si{0, 1, 2, 3}, order_st{0, 1, 2, 3};
            auto by = [&](const std::array<SobolFactor, 4>& fac, bool total) {
                return [&fac, total](int a, int b) {
                    double va = total ? fac[a].st : fac[a].si;
                    double vb = total ? fac[b].st : fac[b].si;
                    return va < vb;
                };
            };
            std::sort(order_si.begin(), order_si.end(), by(community.factors, false));
            std::sort(order_st.begin(), order_st.end(), by(community.factors, true));
            if (order_si == order_st)
                ++agree;
        }
        c.expect("manzi SI/ST ordering agreement in >= 6 of 7 communities", agree >= 6,
                 std::to_string(agree) + " of 7 agree");
    } else {
        c.notes.push_back("manzi.edges not supplied; Manzi sensitivity checks skipped");
    }
    return c;
}

// ---------------------------------------------------------------- A8
Criterion a8_oracle_equivalence() {
    Criterion c{"A8"};
    std::mt19937 rng(808);
    double max_betw_err = 0.0, max_entropy_err = 0.0;
    bool counts_ok = true, betw_ok = true, entropy_ok = true;
    for (int round = 0; round < 200; ++round) {
        int n = 3 + static_cast<int>(rng() % 6);
        Graph g = oracles::random_connected_graph(rng, n);

        NodeScores fast = betweenness(g);
        std::vector<double> slow = oracles::brute_betweenness(g);
        for (int i = 0; i < n; ++i) {
            double err = std::abs(fast.by_index[i] - slow[i]);
            max_betw_err = std::max(max_betw_err, err);
            if (err > 1e-9)
                betw_ok = false;
        }

        std::vector<int> members;
        for (int label : g.labels())
            if (rng() % 2)
                members.push_back(label);
        if (internal_edges(g, members) != oracles::brute_internal_edges(g, members) ||
            external_edges(g, members) != oracles::brute_external_edges(g, members))
            counts_ok = false;

        NodeScores p = degree_distribution(g);
        std::vector<double> ones(p.by_index.size(), 1.0);
        double err = std::abs(tsallis_entropy(p.by_index, ones) -
                              oracles::shannon(p.by_index));
        max_entropy_err = std::max(max_entropy_err, err);
        if (err > 1e-9)
            entropy_ok = false;
    }
    c.expect("betweenness matches exhaustive enumeration on 200 random graphs", betw_ok,
             "max abs error " + std::to_string(max_betw_err));
    c.expect("edge counts match brute force exactly", counts_ok, "");
    c.expect("tsallis at q = 1 matches shannon", entropy_ok,
             "max abs error " + std::to_string(max_entropy_err));
    return c;
}

// ---------------------------------------------------------------- A9
int run_cli(const std::string& args) {
    std::string cmd = kCliPath + " " + args + " >/dev/null 2>&1";
    return std::system(cmd.c_str());
}

std::string strip_comments(const std::string& text) {
    std::istringstream in(text);
    std::string line, out;
    while (std::getline(in, line))
        if (line.empty() || line[0] != '#')
            out += line + "\n";
    return out;
}

Criterion a9_determinism() {
    Criterion c{"A9"};
    if (kCliPath.empty() || !fs::exists(kCliPath)) {
        c.skip("CLI binary not found at " + kCliPath);
        return c;
    }
    fs::path tmp = fs::path("acceptance_a9_tmp");
    fs::remove_all(tmp);
    fs::create_directories(tmp);
    std::string graph = kDataDir + "/example9.edges";
    std::string part = kDataDir + "/example9_partition.txt";

    auto read = [](const fs::path& p) { return read_file(p.string()); };

    // analyze twice with identical manifests
    std::string base = "analyze " + graph + " -p " + part + " --format all -o ";
    bool ran = run_cli(base + (tmp / "r1").string()) == 0 &&
               run_cli(base + (tmp / "r2").string()) == 0;
    c.expect("analyze runs", ran, "");
    if (ran) {
        for (const char* ext : {"report.csv", "report.json", "report.md"}) {
            bool same = read(tmp / ("r1." + std::string(ext))) ==
                        read(tmp / ("r2." + std::string(ext)));
            c.expect(std::string("byte-identical ") + ext, same, "");
        }
    }

    // sensitivity with a pinned seed, twice
    std::string sens = "sensitivity " + graph + " -p " + part +
                       " --samples 2000 --seed 7 --format all -o ";
    bool sens_ran = run_cli(sens + (tmp / "s1").string()) == 0 &&
                    run_cli(sens + (tmp / "s2").string()) == 0;
    c.expect("sensitivity runs", sens_ran, "");
    if (sens_ran) {
        c.expect("byte-identical sobol.csv",
                 read(tmp / "s1.sobol.csv") == read(tmp / "s2.sobol.csv"), "");
        c.expect("byte-identical sobol.json",
                 read(tmp / "s1.sobol.json") == read(tmp / "s2.sobol.json"), "");
    }

    // detection under edge shuffling (manifests differ, content must not)
    {
        Graph g = load_data_graph("example9.edges");
        std::vector<std::pair<int, int>> edges = g.edges();
        std::mt19937 rng(99);
        std::shuffle(edges.begin(), edges.end(), rng);
        std::string shuffled;
        for (auto [u, v] : edges)
            shuffled += std::to_string(v) + " " + std::to_string(u) + "\n";
        write_file((tmp / "shuffled.edges").string(), shuffled);

        bool det_ran = run_cli("detect " + graph + " -o " + (tmp / "d1").string()) == 0 &&
                       run_cli("detect " + (tmp / "shuffled.edges").string() + " -o " +
                               (tmp / "d2").string()) == 0;
        c.expect("detect runs", det_ran, "");
        if (det_ran) {
            c.expect("partition invariant under edge shuffling",
                     strip_comments(read(tmp / "d1.partition.txt")) ==
                         strip_comments(read(tmp / "d2.partition.txt")),
                     "");
        }
    }
    fs::remove_all(tmp);
    return c;
}

} // namespace

int main(int argc, char** argv) {
    std::set<std::string> wanted;
    for (int i = 1; i < argc; ++i)
        wanted.insert(argv[i]);

    std::vector<std::function<Criterion()>> all = {
        a1_example9_golden_table, a2_modularity_values, a3_karate_golden_rows,
        a4_manzi_golden_rows,     a5_italian_orderings, a6_weight_degeneration,
        a7_sobol_properties,      a8_oracle_equivalence, a9_determinism,
    };

    bool any_fail = false;
    for (auto& make : all) {
        Criterion c = make();
        if (!wanted.empty() && !wanted.count(c.id))
            continue;
        int failed = 0;
        for (const auto& check : c.checks)
            if (!check.ok)
                ++failed;
        std::cout << "[" << c.status << "] " << c.id;
        if (c.status != "SKIP")
            std::cout << " (" << (c.checks.size() - failed) << "/" << c.checks.size()
                      << " checks)";
        std::cout << "\n";
        for (const auto& check : c.checks)
            if (!check.ok)
                std::cout << "    FAILED: " << check.label
                          << (check.detail.empty() ? "" : " -- " + check.detail) << "\n";
        for (const auto& note : c.notes)
            std::cout << "    note: " << note << "\n";
        if (c.status == "FAIL")
            any_fail = true;
    }
    return any_fail ? 1 : 0;
}
