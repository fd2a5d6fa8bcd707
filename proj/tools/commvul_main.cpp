// Command-line front end: detect / analyze / sensitivity / compare.

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commvul/community.hpp"
#include "commvul/fixtures.hpp"
#include "commvul/io.hpp"
#include "commvul/report.hpp"
#include "commvul/sensitivity.hpp"
#include "commvul/vulnerability.hpp"

namespace {

using namespace commvul;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitDegenerateWarning = 3;

struct CommonOptions {
    std::string graph_path;
    std::string partition_path;
    std::string out_prefix;
    std::string format = "all";           // csv | json | md | all
    std::string input_format = "auto";    // auto | edges | adjacency
    std::vector<double> weights;          // alpha beta lambda eta
    std::uint64_t seed = 0;
    int samples = 10000;
    std::vector<double> range;            // lo hi
    std::string estimator = "jansen";
    bool intra_degree = false;            // kept as an explicit switch
    std::string degree_scope = "intra";   // intra | full
    bool ordered_pairs = false;
};

std::string stem_of(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

WeightVector weights_of(const CommonOptions& opt) {
    WeightVector w;
    if (!opt.weights.empty()) {
        w.alpha = opt.weights[0];
        w.beta = opt.weights[1];
        w.lambda = opt.weights[2];
        w.eta = opt.weights[3];
    }
    return w;
}

DegreeScope scope_of(const CommonOptions& opt) {
    if (opt.intra_degree)
        return DegreeScope::Intra;
    return opt.degree_scope == "full" ? DegreeScope::Full : DegreeScope::Intra;
}

PairConvention convention_of(const CommonOptions& opt) {
    return opt.ordered_pairs ? PairConvention::Ordered : PairConvention::Unordered;
}

SamplePlan plan_of(const CommonOptions& opt) {
    SamplePlan plan;
    plan.samples = opt.samples;
    plan.seed = opt.seed;
    plan.estimator = opt.estimator;
    if (!opt.range.empty()) {
        plan.range_lo = opt.range[0];
        plan.range_hi = opt.range[1];
    }
    return plan;
}

struct LoadedInputs {
    Graph graph;
    Partition partition;
    RunManifest manifest;
    std::vector<std::string> warnings;
};

LoadedInputs load_inputs(const CommonOptions& opt, bool with_weights, bool with_plan) {
    std::string graph_text = read_file(opt.graph_path);
    LoadedGraph loaded = load_graph_file(opt.graph_path, opt.input_format);

    RunManifest manifest;
    manifest.add_input(opt.graph_path, graph_text);
    manifest.pair_convention = opt.ordered_pairs ? "ordered" : "unordered";
    manifest.degree_scope = scope_of(opt) == DegreeScope::Intra ? "intra" : "full";
    if (with_weights)
        manifest.weights = weights_of(opt);
    if (with_plan)
        manifest.plan = plan_of(opt);

    std::vector<std::string> warnings;
    if (loaded.stats.self_loops_dropped > 0)
        warnings.push_back(std::to_string(loaded.stats.self_loops_dropped) +
                           " self-loop(s) dropped at ingestion");
    if (loaded.stats.duplicate_edges_dropped > 0)
        warnings.push_back(std::to_string(loaded.stats.duplicate_edges_dropped) +
                           " duplicate edge(s) dropped at ingestion");
    if (!loaded.graph.is_connected())
        warnings.push_back("graph is disconnected; distance statistics cover reachable "
                           "pairs only");

    Partition partition = [&] {
        if (!opt.partition_path.empty()) {
            std::string text = read_file(opt.partition_path);
            manifest.add_input(opt.partition_path, text);
            manifest.partition_source = "loaded";
            return load_partition(text, loaded.graph);
        }
        manifest.partition_source = "detected";
        return detect_communities(loaded.graph).partition;
    }();

    return LoadedInputs{std::move(loaded.graph), std::move(partition), std::move(manifest),
                        std::move(warnings)};
}

void emit(const CommonOptions& opt, const std::string& suffix, const std::string& ext,
          const std::string& content) {
    std::string path = opt.out_prefix + "." + suffix + "." + ext;
    write_file(path, content);
    std::cout << "wrote " << path << "\n";
}

bool wants(const CommonOptions& opt, const std::string& ext) {
    return opt.format == "all" || opt.format == ext;
}

int cmd_detect(const CommonOptions& opt) {
    std::string graph_text = read_file(opt.graph_path);
    LoadedGraph loaded = load_graph_file(opt.graph_path, opt.input_format);
    RunManifest manifest;
    manifest.add_input(opt.graph_path, graph_text);
    manifest.pair_convention = opt.ordered_pairs ? "ordered" : "unordered";
    manifest.degree_scope = scope_of(opt) == DegreeScope::Intra ? "intra" : "full";

    DetectionResult result = detect_communities(loaded.graph);
    emit(opt, "partition", "txt", partition_file_text(result.partition, manifest));
    emit(opt, "trace", "json", trace_json(result.trace, result.q, manifest));
    std::cout << "communities: " << result.partition.community_count()
              << "  Q = " << format_double(result.q) << "\n";
    return kExitOk;
}

int cmd_analyze(const CommonOptions& opt) {
    LoadedInputs in = load_inputs(opt, true, false);
    VulnerabilityReport rep =
        analyze(in.graph, in.partition, weights_of(opt), scope_of(opt), convention_of(opt));
    rep.warnings.insert(rep.warnings.begin(), in.warnings.begin(), in.warnings.end());

    if (wants(opt, "csv"))
        emit(opt, "report", "csv", report_csv(rep, in.manifest));
    if (wants(opt, "json"))
        emit(opt, "report", "json", report_json(rep, in.manifest));
    if (wants(opt, "md"))
        emit(opt, "report", "md", report_markdown(rep, in.manifest));
    std::cout << "proposed order: " << rep.proposed_order.chain << "\n";
    for (const auto& w : rep.warnings)
        std::cerr << "warning: " << w << "\n";
    return rep.warnings.empty() ? kExitOk : kExitDegenerateWarning;
}

int cmd_sensitivity(const CommonOptions& opt) {
    LoadedInputs in = load_inputs(opt, true, true);
    VulnerabilityReport rep =
        analyze(in.graph, in.partition, weights_of(opt), scope_of(opt), convention_of(opt));
    SobolReport sobol = sobol_indices(rep.features, plan_of(opt));
    sobol.warnings.insert(sobol.warnings.begin(), in.warnings.begin(), in.warnings.end());

    if (wants(opt, "csv"))
        emit(opt, "sobol", "csv", sobol_csv(sobol, in.manifest));
    if (wants(opt, "json") || opt.format == "md")
        emit(opt, "sobol", "json", sobol_json(sobol, in.manifest));
    for (const auto& w : sobol.warnings)
        std::cerr << "warning: " << w << "\n";
    return sobol.warnings.empty() ? kExitOk : kExitDegenerateWarning;
}

std::vector<double> load_score_column(const std::string& path, const Graph& g,
                                      const Partition& p) {
    // CSV rows: community,score (header and comments ignored).
    std::istringstream in(read_file(path));
    std::string line;
    std::vector<double> scores(p.community_count(), 0.0);
    std::vector<bool> seen(p.community_count(), false);
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#')
            continue;
        for (char& c : line)
            if (c == ',')
                c = ' ';
        std::istringstream ls(line);
        int community = 0;
        double score = 0.0;
        if (!(ls >> community))
            continue;   // header
        if (!(ls >> score))
            throw ParseError("expected 'community,score'", lineno);
        if (community < 1 || community > p.community_count())
            throw ParseError("community index out of range: " + std::to_string(community),
                             lineno);
        scores[community - 1] = score;
        seen[community - 1] = true;
    }
    for (size_t i = 0; i < seen.size(); ++i)
        if (!seen[i])
            throw DomainError("supplied score column misses community " +
                              std::to_string(i + 1));
    (void)g;
    return scores;
}

int cmd_compare(const CommonOptions& opt, const std::string& scores_path) {
    LoadedInputs in = load_inputs(opt, true, false);
    VulnerabilityReport rep =
        analyze(in.graph, in.partition, weights_of(opt), scope_of(opt), convention_of(opt));

    std::optional<std::vector<double>> supplied;
    if (!scores_path.empty()) {
        supplied = load_score_column(scores_path, in.graph, in.partition);
        in.manifest.add_input(scores_path, read_file(scores_path));
    }
    ComparisonReport cmp = compare_orderings(rep, supplied);
    cmp.warnings.insert(cmp.warnings.begin(), in.warnings.begin(), in.warnings.end());

    if (wants(opt, "csv"))
        emit(opt, "compare", "csv", comparison_csv(cmp, in.manifest));
    if (wants(opt, "json"))
        emit(opt, "compare", "json", comparison_json(cmp, in.manifest));
    if (wants(opt, "md"))
        emit(opt, "compare", "md", comparison_markdown(cmp, in.manifest));
    std::cout << "classical: " << cmp.classical.chain << "\n";
    std::cout << "proposed:  " << cmp.proposed.chain << "\n";
    if (cmp.supplied)
        std::cout << "supplied:  " << cmp.supplied->chain << "\n";
    for (const auto& w : cmp.warnings)
        std::cerr << "warning: " << w << "\n";
    return cmp.warnings.empty() ? kExitOk : kExitDegenerateWarning;
}

void add_common(CLI::App* sub, CommonOptions& opt, bool graph_required = true) {
    sub->add_option("graph", opt.graph_path, "Graph file (edge list or adjacency CSV)")
        ->required(graph_required);
    sub->add_option("-o,--out", opt.out_prefix, "Output file prefix (default: graph stem)");
    sub->add_option("--format", opt.format, "Report format")
        ->check(CLI::IsMember({"csv", "json", "md", "all"}));
    sub->add_option("--input-format", opt.input_format, "Force graph file format")
        ->check(CLI::IsMember({"auto", "edges", "adjacency"}));
    sub->add_option("--weights", opt.weights,
                    "Weight factors alpha beta lambda eta (default 1 1 1 1)")
        ->expected(4);
    sub->add_option("--seed", opt.seed, "Sampling seed");
    sub->add_option("--samples", opt.samples, "Monte-Carlo base sample count");
    sub->add_option("--range", opt.range, "Weight sampling range LO HI")->expected(2);
    sub->add_option("--estimator", opt.estimator, "Sobol estimator")
        ->check(CLI::IsMember({"jansen", "saltelli"}));
    sub->add_flag("--intra-degree", opt.intra_degree,
                  "Use intra-community degrees in community profiles (default)");
    sub->add_option("--degree-scope", opt.degree_scope,
                    "Degree scope for community profiles and complexity")
        ->check(CLI::IsMember({"intra", "full"}));
    sub->add_flag("--ordered-pairs", opt.ordered_pairs,
                  "Count betweenness over ordered node pairs");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Community vulnerability analysis for undirected networks"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::string partition_path, scores_path;

    auto* detect = app.add_subcommand("detect", "Greedy modularity community detection");
    add_common(detect, opt);

    auto* analyze_cmd = app.add_subcommand("analyze", "Community vulnerability report");
    add_common(analyze_cmd, opt);
    analyze_cmd->add_option("-p,--partition", opt.partition_path, "Partition file");

    auto* sens = app.add_subcommand("sensitivity", "Sobol sensitivity of the weight factors");
    add_common(sens, opt);
    sens->add_option("-p,--partition", opt.partition_path, "Partition file");

    auto* cmp = app.add_subcommand("compare", "Side-by-side vulnerability orderings");
    add_common(cmp, opt);
    cmp->add_option("-p,--partition", opt.partition_path, "Partition file");
    cmp->add_option("--scores", scores_path,
                    "External score column (community,score CSV) shown as a third row");

    CLI11_PARSE(app, argc, argv);

    if (opt.out_prefix.empty())
        opt.out_prefix = stem_of(opt.graph_path);

    try {
        if (detect->parsed())
            return cmd_detect(opt);
        if (analyze_cmd->parsed())
            return cmd_analyze(opt);
        if (sens->parsed())
            return cmd_sensitivity(opt);
        if (cmp->parsed())
            return cmd_compare(opt, scores_path);
    } catch (const commvul::DegenerateError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const commvul::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
