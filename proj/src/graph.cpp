#include "motif/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "motif/error.hpp"
#include "motif/pattern.hpp"

namespace motif {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g;
    g.offsets_.assign(n + 1, 0);
    for (const Edge &e : edges) {
        if (e.u >= n || e.v >= n)
            throw input_error("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                              ") has an endpoint >= n = " + std::to_string(n));
        if (e.u == e.v)
            continue;
        ++g.offsets_[e.u + 1];
        ++g.offsets_[e.v + 1];
    }
    for (std::size_t v = 0; v < n; ++v)
        g.offsets_[v + 1] += g.offsets_[v];

    std::vector<vertex_t> adjacency(g.offsets_[n]);
    std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const Edge &e : edges) {
        if (e.u == e.v)
            continue;
        adjacency[cursor[e.u]++] = e.v;
        adjacency[cursor[e.v]++] = e.u;
    }

    // Sort each list and squeeze out duplicates in place.
    std::uint64_t write = 0;
    for (std::size_t v = 0; v < n; ++v) {
        auto first = adjacency.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
        auto last = adjacency.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
        std::sort(first, last);
        last = std::unique(first, last);
        g.offsets_[v] = write;
        for (auto it = first; it != last; ++it)
            adjacency[write++] = *it;
    }
    g.offsets_[n] = write;
    adjacency.resize(write);
    adjacency.shrink_to_fit();
    g.adjacency_ = std::move(adjacency);
    return g;
}

bool Graph::has_edge(vertex_t u, vertex_t v) const noexcept {
    // Search the shorter list.
    if (degree(u) > degree(v))
        std::swap(u, v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::size_t> Graph::degrees() const {
    std::vector<std::size_t> d(num_vertices());
    for (std::size_t v = 0; v < d.size(); ++v)
        d[v] = degree(static_cast<vertex_t>(v));
    return d;
}

std::vector<Edge> Graph::edge_list() const {
    std::vector<Edge> out;
    out.reserve(num_edges());
    for (vertex_t u = 0; u < num_vertices(); ++u)
        for (vertex_t v : neighbors(u))
            if (u < v)
                out.push_back({u, v});
    return out;
}

Subgraph induce(const Graph &g, std::span<const vertex_t> vertices) {
    // (host vertex, local index), sorted by host vertex; neighbors are looked
    // up by binary search so the cost does not depend on the host size.
    std::vector<std::pair<vertex_t, vertex_t>> sorted(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] >= g.num_vertices())
            throw input_error("vertex " + std::to_string(vertices[i]) + " out of range");
        sorted[i] = {vertices[i], static_cast<vertex_t>(i)};
    }
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i].first == sorted[i - 1].first)
            throw input_error("vertex " + std::to_string(sorted[i].first) + " listed twice");

    std::vector<Edge> edges;
    for (const auto &[v, i] : sorted)
        for (vertex_t w : g.neighbors(v)) {
            const auto it = std::lower_bound(sorted.begin(), sorted.end(), std::pair{w, vertex_t{0}});
            if (it != sorted.end() && it->first == w && it->second > i)
                edges.push_back({i, it->second});
        }

    return {Graph::from_edges(vertices.size(), edges), {vertices.begin(), vertices.end()}};
}

AdjMatrix induced_adjacency(const Graph &g, std::span<const vertex_t> s) {
    if (s.size() > static_cast<std::size_t>(max_pattern_size))
        throw input_error("vertex set larger than 16");
    AdjMatrix adj{};
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.has_edge(s[i], s[j])) {
                adj[i] |= static_cast<std::uint16_t>(1u << j);
                adj[j] |= static_cast<std::uint16_t>(1u << i);
            }
    return adj;
}

std::optional<std::array<int, max_pattern_size>> match_induced(const AdjMatrix &host, const Pattern &h) {
    const int k = h.size();
    const AdjMatrix &pat = h.adjacency();

    std::array<int, max_pattern_size> host_degree{};
    std::array<int, max_pattern_size> pattern_degree{};
    for (int i = 0; i < k; ++i) {
        host_degree[i] = std::popcount(host[i]);
        pattern_degree[i] = std::popcount(pat[i]);
    }
    {
        auto a = host_degree, b = pattern_degree;
        std::sort(a.begin(), a.begin() + k);
        std::sort(b.begin(), b.begin() + k);
        if (!std::equal(a.begin(), a.begin() + k, b.begin()))
            return std::nullopt;
    }

    // Assign pattern vertices in a connected order so each new vertex is
    // constrained by at least one earlier neighbor.
    std::array<int, max_pattern_size> order{};
    {
        std::uint32_t placed = 0;
        int start = 0;
        for (int i = 1; i < k; ++i)
            if (pattern_degree[i] > pattern_degree[start])
                start = i;
        order[0] = start;
        placed |= 1u << start;
        for (int n = 1; n < k; ++n) {
            int best = -1, best_links = -1;
            for (int a = 0; a < k; ++a) {
                if (placed & (1u << a))
                    continue;
                const int links = std::popcount(static_cast<std::uint32_t>(pat[a]) & placed);
                if (links > best_links || (links == best_links && pattern_degree[a] > pattern_degree[best])) {
                    best = a;
                    best_links = links;
                }
            }
            order[n] = best;
            placed |= 1u << best;
        }
    }

    std::array<int, max_pattern_size> position{};
    std::uint32_t used = 0;
    std::array<int, max_pattern_size> next{};  // next host candidate per depth
    int depth = 0;
    next[0] = 0;
    while (depth >= 0) {
        if (depth == k)
            return position;
        const int a = order[depth];
        if (next[depth] > 0)
            used &= ~(1u << position[a]);
        bool advanced = false;
        for (int p = next[depth]; p < k; ++p) {
            if ((used & (1u << p)) || host_degree[p] != pattern_degree[a])
                continue;
            bool consistent = true;
            for (int d = 0; d < depth && consistent; ++d) {
                const int b = order[d];
                consistent = (((host[p] >> position[b]) ^ (pat[a] >> b)) & 1u) == 0;
            }
            if (!consistent)
                continue;
            position[a] = p;
            used |= 1u << p;
            next[depth] = p + 1;
            ++depth;
            if (depth < k)
                next[depth] = 0;
            advanced = true;
            break;
        }
        if (!advanced) {
            next[depth] = 0;
            --depth;
        }
    }
    return std::nullopt;
}

std::optional<Embedding> is_induced_copy(const Graph &g, std::span<const vertex_t> s, const Pattern &h) {
    if (s.size() != static_cast<std::size_t>(h.size()))
        throw input_error("vertex set has " + std::to_string(s.size()) + " vertices, pattern has " +
                          std::to_string(h.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] >= g.num_vertices())
            throw input_error("vertex " + std::to_string(s[i]) + " out of range");
        for (std::size_t j = 0; j < i; ++j)
            if (s[i] == s[j])
                throw input_error("vertex " + std::to_string(s[i]) + " repeated");
    }

    auto position = match_induced(induced_adjacency(g, s), h);
    if (!position)
        return std::nullopt;
    Embedding phi(s.size());
    for (std::size_t a = 0; a < s.size(); ++a)
        phi[a] = s[(*position)[a]];
    return phi;
}

} // namespace motif
