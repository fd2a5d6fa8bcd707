#include <benchmark/benchmark.h>

#include "commvul/centrality.hpp"
#include "commvul/community.hpp"
#include "commvul/fixtures.hpp"
#include "commvul/io.hpp"
#include "commvul/sensitivity.hpp"
#include "commvul/vulnerability.hpp"

namespace {

using namespace commvul;

Graph karate() {
    static Graph g = load_edge_list(read_file(std::string(COMMVUL_DATA_DIR) +
                                              "/karate.edges"))
                         .graph;
    return g;
}

Partition karate_partition(const Graph& g) {
    static std::string text =
        read_file(std::string(COMMVUL_DATA_DIR) + "/karate_partition.txt");
    return load_partition(text, g);
}

void bm_betweenness_karate(benchmark::State& state) {
    Graph g = karate();
    for (auto _ : state) {
        NodeScores b = betweenness(g);
        benchmark::DoNotOptimize(b.by_index.data());
    }
}
BENCHMARK(bm_betweenness_karate);

void bm_detect_karate(benchmark::State& state) {
    Graph g = karate();
    for (auto _ : state) {
        DetectionResult r = detect_communities(g);
        benchmark::DoNotOptimize(r.q);
    }
}
BENCHMARK(bm_detect_karate);

void bm_analyze_karate(benchmark::State& state) {
    Graph g = karate();
    Partition p = karate_partition(g);
    for (auto _ : state) {
        VulnerabilityReport rep = analyze(g, p, {});
        benchmark::DoNotOptimize(rep.rv.data());
    }
}
BENCHMARK(bm_analyze_karate);

void bm_sobol_synthetic5(benchmark::State& state) {
    Graph g = synthetic_five_communities();
    Partition p = synthetic_five_partition(g);
    CommunityFeatures f = analyze(g, p, {}).features;
    SamplePlan plan;
    plan.samples = static_cast<int>(state.range(0));
    plan.bootstrap_resamples = 50;
    for (auto _ : state) {
        SobolReport rep = sobol_indices(f, plan);
        benchmark::DoNotOptimize(rep.communities.data());
    }
}
BENCHMARK(bm_sobol_synthetic5)->Arg(1000)->Arg(4000);

} // namespace

BENCHMARK_MAIN();
