// motif: search a graph for an induced pattern, summarize a data set, or run
// a replication experiment. Talks to the library only through motif.h.
#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "motif/motif.h"

namespace {

struct GraphDeleter {
    void operator()(motif_graph *g) const { motif_graph_free(g); }
};
struct PatternDeleter {
    void operator()(motif_pattern *p) const { motif_pattern_free(p); }
};
using GraphPtr = std::unique_ptr<motif_graph, GraphDeleter>;
using PatternPtr = std::unique_ptr<motif_pattern, PatternDeleter>;

int report(motif_status status) {
    std::cerr << "motif: " << motif_status_name(status) << ": " << motif_last_error() << '\n';
    return 1 + static_cast<int>(status);
}

double parse_bound(const std::string &text) {
    if (text == "inf" || text == "infinity")
        return std::numeric_limits<double>::infinity();
    return std::stod(text);
}

struct FindArgs {
    std::string graph;
    std::string pattern;
    int alg = 2;
    std::string f1 = "1/ln";
    std::string f2 = "0.9";
    double gamma = 0.0;
    bool all = false;
    std::uint64_t s = 10000;
    std::uint64_t seed = 1;
    double mu = 0.0;
    std::uint64_t n = 0;
};

int run_find(const FindArgs &args) {
    motif_graph *raw_graph = nullptr;
    if (auto st = motif_graph_read_edgelist(args.graph.c_str(), &raw_graph))
        return report(st);
    GraphPtr graph(raw_graph);
    motif_pattern *raw_pattern = nullptr;
    if (auto st = motif_pattern_parse(args.pattern.c_str(), &raw_pattern))
        return report(st);
    PatternPtr pattern(raw_pattern);

    motif_search_options opt;
    motif_search_options_init(&opt);
    opt.algorithm = args.alg;
    opt.budget = args.s;
    opt.seed = args.seed;
    opt.mu = args.mu;
    opt.n = args.n;
    if (args.all) {
        opt.window = MOTIF_WINDOW_ALL;
    } else if (args.gamma > 0.0) {
        opt.window = MOTIF_WINDOW_GAMMA;
        opt.gamma = args.gamma;
    } else {
        opt.window = MOTIF_WINDOW_SQRT;
        opt.f1_inverse_log = args.f1 == "1/ln";
        opt.f1 = opt.f1_inverse_log ? 0.0 : parse_bound(args.f1);
        opt.f2 = parse_bound(args.f2);
    }

    motif_search_result res;
    if (auto st = motif_find(graph.get(), pattern.get(), &opt, &res))
        return report(st);

    nlohmann::ordered_json out;
    out["found"] = res.found != 0;
    out["checks"] = res.checks;
    out["selected"] = res.selected;
    if (res.found) {
        auto embedding = nlohmann::json::array();
        for (int a = 0; a < res.k; ++a)
            embedding.push_back(motif_graph_label(graph.get(), res.embedding[a]));
        out["embedding"] = embedding;
    }
    std::cout << out.dump() << '\n';
    return 0;
}

int run_stats(const std::string &path, std::uint64_t d_min) {
    motif_graph *raw_graph = nullptr;
    if (auto st = motif_graph_read_edgelist(path.c_str(), &raw_graph))
        return report(st);
    GraphPtr graph(raw_graph);
    motif_dataset_stats stats;
    if (auto st = motif_dataset_stats_compute(graph.get(), d_min, &stats))
        return report(st);
    nlohmann::ordered_json out;
    out["n"] = stats.n;
    out["m"] = stats.m;
    out["mu"] = stats.mean_degree;
    out["tau"] = stats.tau;
    out["d_min"] = stats.d_min;
    out["tail"] = stats.tail_size;
    std::cout << out.dump() << '\n';
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Induced subgraph search on power-law graphs"};
    app.require_subcommand(1);

    FindArgs find;
    auto *find_cmd = app.add_subcommand("find", "Search an edge-list graph for an induced copy of a pattern");
    find_cmd->add_option("--graph", find.graph, "Edge-list file")->required();
    find_cmd->add_option("--pattern", find.pattern, "Literal `k;u-v,...` or name (house, cycle5, ...)")->required();
    find_cmd->add_option("--alg", find.alg, "1: random partition, 2: neighborhood growth")->check(CLI::IsMember({1, 2}));
    find_cmd->add_option("--f1", find.f1, "Lower window factor, a number or 1/ln");
    find_cmd->add_option("--f2", find.f2, "Upper window factor, a number or inf");
    auto *gamma_opt = find_cmd->add_option("--gamma", find.gamma, "Use the (mu n)^gamma window instead");
    auto *all_opt = find_cmd->add_flag("--all", find.all, "Use every vertex");
    gamma_opt->excludes(all_opt);
    find_cmd->add_option("--s", find.s, "Attempt budget for algorithm 2");
    find_cmd->add_option("--seed", find.seed, "Random seed");
    find_cmd->add_option("--mu", find.mu, "Mean weight/degree (default: 2m/n of the graph)");
    find_cmd->add_option("--n", find.n, "Vertex count used in the window (default: graph size)");

    std::string stats_graph;
    std::uint64_t d_min = 0;
    auto *stats_cmd = app.add_subcommand("stats", "Vertex/edge counts, mean degree and fitted power-law exponent");
    stats_cmd->add_option("--graph", stats_graph, "Edge-list file")->required();
    stats_cmd->add_option("--dmin", d_min, "Fixed lower cutoff for the fit (default: KS scan)");

    std::string config, csv, log;
    unsigned threads = 0;
    auto *exp_cmd = app.add_subcommand("experiment", "Run a replication experiment from a key=value config");
    exp_cmd->add_option("--config", config, "Config file")->required();
    exp_cmd->add_option("--csv", csv, "CSV output (overrides config)");
    exp_cmd->add_option("--log", log, "Per-replication JSON-lines log (overrides config)");
    exp_cmd->add_option("--threads", threads, "Worker threads (overrides config)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*find_cmd)
            return run_find(find);
        if (*stats_cmd)
            return run_stats(stats_graph, d_min);
        if (*exp_cmd) {
            if (auto st = motif_experiment_run(config.c_str(), csv.empty() ? nullptr : csv.c_str(),
                                               log.empty() ? nullptr : log.c_str(), threads))
                return report(st);
            return 0;
        }
    } catch (const std::exception &e) {
        std::cerr << "motif: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
