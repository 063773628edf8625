#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace motif {

class Pattern;

using vertex_t = std::uint32_t;

struct Edge {
    vertex_t u;
    vertex_t v;
};

// Row-bitmask adjacency of at most 16 vertices: bit j of row i is set iff i~j.
using AdjMatrix = std::array<std::uint16_t, 16>;

inline constexpr int max_pattern_size = 16;

// Injective map from pattern vertex a to the host vertex embedding[a].
using Embedding = std::vector<vertex_t>;

// Immutable undirected simple graph in compressed sparse row form. Neighbor
// lists are sorted, so membership is a binary search.
class Graph {
public:
    Graph() = default;

    // Drops self-loops and merges duplicate or reversed pairs.
    // Throws input_error when an endpoint is >= n.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);

    std::size_t num_vertices() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t num_edges() const noexcept { return adjacency_.size() / 2; }

    std::size_t degree(vertex_t v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

    std::span<const vertex_t> neighbors(vertex_t v) const noexcept {
        return {adjacency_.data() + offsets_[v], degree(v)};
    }

    bool has_edge(vertex_t u, vertex_t v) const noexcept;

    std::vector<std::size_t> degrees() const;

    // Every edge once with u < v, in ascending (u, v) order.
    std::vector<Edge> edge_list() const;

    friend bool operator==(const Graph &, const Graph &) = default;

private:
    std::vector<std::uint64_t> offsets_;
    std::vector<vertex_t> adjacency_;
};

// Induced subgraph on `vertices` with local ids 0..|vertices|-1, in the given order.
struct Subgraph {
    Graph graph;
    std::vector<vertex_t> to_host;
};

Subgraph induce(const Graph &g, std::span<const vertex_t> vertices);

// Adjacency among s[0..k) as a bit matrix. Requires |s| <= 16.
AdjMatrix induced_adjacency(const Graph &g, std::span<const vertex_t> s);

// An embedding whose image is exactly s and which preserves both edges and
// non-edges of h, or nullopt. Throws input_error when |s| != h.size() or s
// has repeated or out-of-range vertices.
std::optional<Embedding> is_induced_copy(const Graph &g, std::span<const vertex_t> s, const Pattern &h);

// Match on a precomputed host adjacency: returns position[a] in [0, k) such
// that host bits equal pattern bits for every pair.
std::optional<std::array<int, max_pattern_size>> match_induced(const AdjMatrix &host, const Pattern &h);

} // namespace motif
