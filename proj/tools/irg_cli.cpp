// irg: sample an inhomogeneous random graph and write it as an edge list.
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "motif/motif.h"

int main(int argc, char **argv) {
    CLI::App app{"Inhomogeneous random graph generator"};
    app.require_subcommand(1);

    motif_irg_params params{};
    params.n = 100000;
    params.tau = 2.5;
    params.w_min = 1.0;
    params.seed = 1;
    params.generator = MOTIF_GEN_FAST;
    std::string out, weights;
    bool naive = false;

    auto *gen = app.add_subcommand("gen", "Generate one graph");
    gen->add_option("--n", params.n, "Number of vertices");
    gen->add_option("--tau", params.tau, "Power-law exponent in (2, 3)");
    gen->add_option("--wmin", params.w_min, "Minimum weight");
    gen->add_option("--seed", params.seed, "Random seed");
    gen->add_option("--out", out, "Edge-list output file")->required();
    gen->add_option("--weights", weights, "Optional `vertex weight` output file");
    gen->add_flag("--naive", naive, "Quadratic pairwise sampler (n <= 20000)");

    CLI11_PARSE(app, argc, argv);
    if (naive)
        params.generator = MOTIF_GEN_NAIVE;

    motif_graph *raw = nullptr;
    motif_status st = motif_graph_generate_irg(&params, &raw);
    std::unique_ptr<motif_graph, void (*)(motif_graph *)> graph(raw, motif_graph_free);
    if (st == MOTIF_OK)
        st = motif_graph_write_edgelist(graph.get(), out.c_str());
    if (st == MOTIF_OK && !weights.empty())
        st = motif_graph_write_weights(graph.get(), weights.c_str());
    if (st != MOTIF_OK) {
        std::cerr << "irg: " << motif_status_name(st) << ": " << motif_last_error() << '\n';
        return 1 + static_cast<int>(st);
    }
    return 0;
}
