#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "motif/graph.hpp"

namespace motif {

// Connected pattern graph on 3..16 vertices.
class Pattern {
public:
    // Throws input_error for k out of range, bad endpoints, loops, or a
    // disconnected result.
    static Pattern from_edges(int k, std::span<const std::pair<int, int>> edges);

    static Pattern cycle(int k);
    static Pattern clique(int k);
    static Pattern star(int k);   // center is vertex 0
    static Pattern path(int k);
    // Square 0-1-2-3 with a roof vertex 4 joined to 2 and 3.
    static Pattern house();

    // Either a literal `k;u-v,u-v,...` or a name: house, cycleK, cliqueK, starK, pathK.
    static Pattern parse(std::string_view spec);

    int size() const noexcept { return k_; }
    int edge_count() const noexcept { return edges_; }
    int degree(int a) const noexcept;
    bool has_edge(int a, int b) const noexcept { return (adj_[a] >> b) & 1u; }
    const AdjMatrix &adjacency() const noexcept { return adj_; }

    // Canonical literal form, edges in ascending (u, v) order with u < v.
    std::string to_literal() const;

    friend bool operator==(const Pattern &, const Pattern &) = default;

private:
    Pattern(int k, const AdjMatrix &adj);

    int k_ = 0;
    int edges_ = 0;
    AdjMatrix adj_{};
};

// Expansion order for neighborhood growth. Position 0 is the seed; the vertex
// inserted at position t (t >= 1) is attached to the vertex at 1-indexed
// position anchors[t - 1]. labeling[i] is the pattern vertex placed at
// position i, so pattern edges {labeling[anchors[t-1]-1], labeling[t]} form a
// spanning tree of the pattern.
struct TreeOrder {
    std::vector<int> anchors;
    std::vector<int> labeling;
};

// Depth-first spanning tree from vertex 0, lowest-index neighbor first.
TreeOrder spanning_tree_order(const Pattern &h);

} // namespace motif
