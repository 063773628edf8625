#pragma once

#include <algorithm>
#include <vector>

#include "motif/graph.hpp"
#include "motif/pattern.hpp"
#include "motif/rng.hpp"

namespace motif::testing {

inline Graph make_graph(std::size_t n, std::initializer_list<std::pair<vertex_t, vertex_t>> pairs) {
    std::vector<Edge> edges;
    for (auto [u, v] : pairs)
        edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

inline Graph cycle_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        edges.push_back({static_cast<vertex_t>(i), static_cast<vertex_t>((i + 1) % n)});
    return Graph::from_edges(n, edges);
}

inline Graph erdos_renyi(std::size_t n, double p, Rng &rng) {
    std::vector<Edge> edges;
    for (vertex_t u = 0; u < n; ++u)
        for (vertex_t v = u + 1; v < n; ++v)
            if (rng.uniform() < p)
                edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

inline Graph petersen() {
    std::vector<Edge> edges;
    for (vertex_t i = 0; i < 5; ++i) {
        edges.push_back({i, static_cast<vertex_t>((i + 1) % 5)});
        edges.push_back({i, static_cast<vertex_t>(i + 5)});
        edges.push_back({static_cast<vertex_t>(i + 5), static_cast<vertex_t>((i + 2) % 5 + 5)});
    }
    return Graph::from_edges(10, edges);
}

// Biconditional edge condition checked pair by pair against the host.
inline bool validates(const Graph &g, const Embedding &phi, const Pattern &h) {
    if (phi.size() != static_cast<std::size_t>(h.size()))
        return false;
    for (int a = 0; a < h.size(); ++a)
        for (int b = a + 1; b < h.size(); ++b) {
            if (phi[a] == phi[b])
                return false;
            if (h.has_edge(a, b) != g.has_edge(phi[a], phi[b]))
                return false;
        }
    return true;
}

// All k-subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<vertex_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<vertex_t>> out;
    std::vector<vertex_t> cur;
    auto rec = [&](auto &self, vertex_t from) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (vertex_t v = from; v < n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

inline std::vector<Pattern> standard_patterns() {
    return {Pattern::cycle(3), Pattern::cycle(4), Pattern::cycle(5), Pattern::clique(4), Pattern::star(4),
            Pattern::house()};
}

} // namespace motif::testing
