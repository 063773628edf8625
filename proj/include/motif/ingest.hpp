#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "motif/graph.hpp"

namespace motif {

// Normalized edge-list graph plus the original label of each dense vertex id.
struct LabeledGraph {
    Graph graph;
    std::vector<std::int64_t> labels;
};

// Whitespace-separated integer pairs, one per line; extra columns ignored.
// Lines starting with '#' or '%' and blank lines are skipped. Labels are
// remapped to 0..n-1 in ascending label order, so any permutation of the
// lines yields the same graph. Throws parse_error with the 1-based line.
LabeledGraph read_edge_list(std::istream &in);
LabeledGraph read_edge_list_file(const std::string &path);

struct TauFit {
    double tau = 0.0;
    std::size_t d_min = 0;
    std::size_t tail_size = 0;
    double ks_distance = 0.0;
};

inline constexpr std::size_t min_fit_tail = 50;

// Discrete power-law exponent by the continuous approximation
// tau = 1 + N / sum ln(d / (d_min - 1/2)) over degrees d >= d_min.
// Without d_min, every distinct degree with a tail of at least min_fit_tail
// entries is tried and the one minimizing the KS distance is kept.
// Zero degrees are ignored. Throws fit_error on a short or degenerate tail.
TauFit fit_tau(std::span<const std::size_t> degrees, std::optional<std::size_t> d_min = std::nullopt);

struct DatasetStats {
    std::size_t n = 0;
    std::size_t m = 0;
    double mean_degree = 0.0;
    TauFit fit;
};

DatasetStats dataset_stats(const Graph &g, std::optional<std::size_t> d_min = std::nullopt);

void write_edge_list(std::ostream &out, const Graph &g);

} // namespace motif
