#include "motif/motif.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <string>

#include "motif/error.hpp"
#include "motif/experiment.hpp"
#include "motif/graph.hpp"
#include "motif/ingest.hpp"
#include "motif/irg.hpp"
#include "motif/pattern.hpp"
#include "motif/search.hpp"

struct motif_graph {
    motif::Graph graph;
    std::vector<std::int64_t> labels;  // empty: identity
    std::vector<double> weights;       // empty: not generated
};

struct motif_pattern {
    motif::Pattern pattern;
};

namespace {

thread_local std::string last_error;

motif_status fail(motif_status status, const char *what) {
    last_error = what;
    return status;
}

// Runs body, translating exceptions into status codes.
template <class F>
motif_status guarded(F &&body) noexcept {
    try {
        body();
        last_error.clear();
        return MOTIF_OK;
    } catch (const motif::parse_error &e) {
        return fail(MOTIF_ERR_PARSE, e.what());
    } catch (const motif::io_error &e) {
        return fail(MOTIF_ERR_IO, e.what());
    } catch (const motif::fit_error &e) {
        return fail(MOTIF_ERR_FIT, e.what());
    } catch (const motif::refused_error &e) {
        return fail(MOTIF_ERR_REFUSED, e.what());
    } catch (const motif::parameter_error &e) {
        return fail(MOTIF_ERR_PARAM, e.what());
    } catch (const motif::input_error &e) {
        return fail(MOTIF_ERR_INPUT, e.what());
    } catch (const std::bad_alloc &) {
        return fail(MOTIF_ERR_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return fail(MOTIF_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(MOTIF_ERR_INTERNAL, "unknown error");
    }
}

void require(const void *p, const char *name) {
    if (!p)
        throw motif::input_error(std::string(name) + " is null");
}

} // namespace

extern "C" {

const char *motif_version(void) { return "1.0.0"; }

const char *motif_last_error(void) { return last_error.c_str(); }

const char *motif_status_name(motif_status status) {
    switch (status) {
    case MOTIF_OK: return "ok";
    case MOTIF_ERR_INPUT: return "input error";
    case MOTIF_ERR_PARAM: return "parameter error";
    case MOTIF_ERR_PARSE: return "parse error";
    case MOTIF_ERR_IO: return "I/O error";
    case MOTIF_ERR_FIT: return "fit error";
    case MOTIF_ERR_REFUSED: return "refused";
    case MOTIF_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

motif_status motif_graph_from_edges(uint64_t n, const uint64_t *pairs, size_t count, motif_graph **out) {
    return guarded([&] {
        require(out, "out");
        if (count)
            require(pairs, "pairs");
        if (n > 0xffffffffu)
            throw motif::input_error("n exceeds the 32-bit vertex id range");
        std::vector<motif::Edge> edges(count);
        for (size_t i = 0; i < count; ++i) {
            if (pairs[2 * i] >= n || pairs[2 * i + 1] >= n)
                throw motif::input_error("edge " + std::to_string(i) + " has an endpoint >= n");
            edges[i] = {static_cast<motif::vertex_t>(pairs[2 * i]), static_cast<motif::vertex_t>(pairs[2 * i + 1])};
        }
        *out = new motif_graph{motif::Graph::from_edges(n, edges), {}, {}};
    });
}

motif_status motif_graph_read_edgelist(const char *path, motif_graph **out) {
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        motif::LabeledGraph data = motif::read_edge_list_file(path);
        *out = new motif_graph{std::move(data.graph), std::move(data.labels), {}};
    });
}

motif_status motif_graph_generate_irg(const motif_irg_params *params, motif_graph **out) {
    return guarded([&] {
        require(params, "params");
        require(out, "out");
        motif::ModelParams model{params->n, params->tau, params->w_min};
        motif::Rng rng(params->seed);
        auto weights = motif::sample_weights(model, rng);
        motif::Graph g = params->generator == MOTIF_GEN_NAIVE ? motif::generate_naive(weights, model.mean(), rng)
                                                              : motif::generate_fast(weights, model.mean(), rng);
        *out = new motif_graph{std::move(g), {}, std::move(weights)};
    });
}

void motif_graph_free(motif_graph *graph) { delete graph; }

uint64_t motif_graph_num_vertices(const motif_graph *graph) { return graph ? graph->graph.num_vertices() : 0; }

uint64_t motif_graph_num_edges(const motif_graph *graph) { return graph ? graph->graph.num_edges() : 0; }

uint64_t motif_graph_degree(const motif_graph *graph, uint64_t v) {
    if (!graph || v >= graph->graph.num_vertices())
        return 0;
    return graph->graph.degree(static_cast<motif::vertex_t>(v));
}

int64_t motif_graph_label(const motif_graph *graph, uint64_t v) {
    if (graph && v < graph->labels.size())
        return graph->labels[v];
    return static_cast<int64_t>(v);
}

double motif_graph_weight(const motif_graph *graph, uint64_t v) {
    if (graph && v < graph->weights.size())
        return graph->weights[v];
    return 0.0;
}

motif_status motif_graph_write_edgelist(const motif_graph *graph, const char *path) {
    return guarded([&] {
        require(graph, "graph");
        require(path, "path");
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw motif::io_error(std::string("cannot write '") + path + "'");
        motif::write_edge_list(out, graph->graph);
        if (!out)
            throw motif::io_error(std::string("failed writing '") + path + "'");
    });
}

motif_status motif_graph_write_weights(const motif_graph *graph, const char *path) {
    return guarded([&] {
        require(graph, "graph");
        require(path, "path");
        if (graph->weights.empty())
            throw motif::input_error("graph carries no weights");
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw motif::io_error(std::string("cannot write '") + path + "'");
        char buf[64];
        for (size_t v = 0; v < graph->weights.size(); ++v) {
            auto [end, ec] = std::to_chars(buf, buf + sizeof buf, graph->weights[v]);
            out << v << ' ';
            out.write(buf, end - buf);
            out << '\n';
        }
        if (!out)
            throw motif::io_error(std::string("failed writing '") + path + "'");
    });
}

motif_status motif_pattern_parse(const char *spec, motif_pattern **out) {
    return guarded([&] {
        require(spec, "spec");
        require(out, "out");
        *out = new motif_pattern{motif::Pattern::parse(spec)};
    });
}

void motif_pattern_free(motif_pattern *pattern) { delete pattern; }

int motif_pattern_size(const motif_pattern *pattern) { return pattern ? pattern->pattern.size() : 0; }

int motif_pattern_edge_count(const motif_pattern *pattern) { return pattern ? pattern->pattern.edge_count() : 0; }

motif_status motif_pattern_tree_order(const motif_pattern *pattern, int *anchors, size_t capacity) {
    return guarded([&] {
        require(pattern, "pattern");
        require(anchors, "anchors");
        const auto order = motif::spanning_tree_order(pattern->pattern);
        if (capacity < order.anchors.size())
            throw motif::input_error("anchor buffer too small");
        std::copy(order.anchors.begin(), order.anchors.end(), anchors);
    });
}

void motif_search_options_init(motif_search_options *options) {
    if (!options)
        return;
    *options = {};
    options->algorithm = 2;
    options->window = MOTIF_WINDOW_SQRT;
    options->f1_inverse_log = 1;
    options->f2 = 0.9;
    options->gamma = 0.5;
    options->budget = 10000;
    options->seed = 1;
}

motif_status motif_find(const motif_graph *graph, const motif_pattern *pattern, const motif_search_options *options,
                        motif_search_result *result) {
    return guarded([&] {
        require(graph, "graph");
        require(pattern, "pattern");
        require(options, "options");
        require(result, "result");
        const motif::Graph &g = graph->graph;
        const std::size_t n = options->n ? options->n : g.num_vertices();
        double mu = options->mu;
        if (!(mu > 0.0))
            mu = g.num_vertices() ? 2.0 * static_cast<double>(g.num_edges()) / static_cast<double>(g.num_vertices())
                                  : 0.0;

        motif::DegreeWindow window;
        switch (options->window) {
        case MOTIF_WINDOW_SQRT: {
            const double f1 = options->f1_inverse_log ? 1.0 / std::log(static_cast<double>(n)) : options->f1;
            window = motif::window_sqrt(f1, options->f2, mu, n);
            break;
        }
        case MOTIF_WINDOW_GAMMA:
            window = motif::window_gamma(options->gamma, mu, n);
            break;
        case MOTIF_WINDOW_ALL:
            window = motif::window_all();
            break;
        default:
            throw motif::parameter_error("unknown window kind");
        }

        motif::Rng rng(options->seed);
        motif::SearchOutcome outcome;
        if (options->algorithm == 1)
            outcome = motif::random_partition_search(g, pattern->pattern, window, rng);
        else if (options->algorithm == 2)
            outcome = motif::neighborhood_search(g, pattern->pattern, window, options->budget, rng);
        else
            throw motif::parameter_error("algorithm must be 1 or 2");

        *result = {};
        result->found = outcome.found() ? 1 : 0;
        result->k = pattern->pattern.size();
        result->checks = outcome.checks;
        result->attempts = outcome.attempts;
        result->selected = outcome.selected;
        result->window_lo = window.lo;
        result->window_hi = window.hi;
        if (outcome.embedding)
            for (size_t a = 0; a < outcome.embedding->size(); ++a)
                result->embedding[a] = (*outcome.embedding)[a];
    });
}

motif_status motif_dataset_stats_compute(const motif_graph *graph, uint64_t d_min, motif_dataset_stats *out) {
    return guarded([&] {
        require(graph, "graph");
        require(out, "out");
        const auto stats = motif::dataset_stats(graph->graph, d_min ? std::optional<std::size_t>(d_min) : std::nullopt);
        *out = {stats.n, stats.m, stats.mean_degree, stats.fit.tau, stats.fit.d_min, stats.fit.tail_size};
    });
}

motif_status motif_experiment_run(const char *config_path, const char *csv_path, const char *log_path,
                                  unsigned threads) {
    return guarded([&] {
        require(config_path, "config_path");
        auto config = motif::ExperimentConfig::parse_file(config_path);
        if (csv_path)
            config.csv_path = csv_path;
        if (log_path)
            config.log_path = log_path;
        if (threads)
            config.threads = threads;
        if (config.csv_path.empty())
            throw motif::parameter_error("no CSV output path given");

        const auto result = motif::run_experiment(config);
        motif::emit_csv(result, config.csv_path);
        if (!config.log_path.empty()) {
            std::ofstream log(config.log_path, std::ios::binary);
            if (!log)
                throw motif::io_error("cannot write '" + config.log_path + "'");
            motif::emit_log(result, log);
        }
    });
}

} // extern "C"
