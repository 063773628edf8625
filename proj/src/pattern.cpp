#include "motif/pattern.hpp"

#include <bit>
#include <cctype>
#include <charconv>
#include <functional>
#include <string>

#include "motif/error.hpp"

namespace motif {

namespace {

void check_size(int k) {
    if (k < 3 || k > max_pattern_size)
        throw input_error("pattern size must be in [3, 16], got " + std::to_string(k));
}

bool connected(int k, const AdjMatrix &adj) {
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint32_t next = 0;
        for (int a = 0; a < k; ++a)
            if (frontier & (1u << a))
                next |= adj[a];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (1u << k) - 1;
}

int parse_int(std::string_view text, std::string_view spec) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw input_error("bad pattern '" + std::string(spec) + "'");
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace

Pattern::Pattern(int k, const AdjMatrix &adj) : k_(k), adj_(adj) {
    int bits = 0;
    for (int a = 0; a < k; ++a)
        bits += std::popcount(adj[a]);
    edges_ = bits / 2;
}

Pattern Pattern::from_edges(int k, std::span<const std::pair<int, int>> edges) {
    check_size(k);
    AdjMatrix adj{};
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= k || v >= k)
            throw input_error("pattern edge " + std::to_string(u) + "-" + std::to_string(v) + " out of range");
        if (u == v)
            throw input_error("pattern edge " + std::to_string(u) + "-" + std::to_string(v) + " is a loop");
        adj[u] |= static_cast<std::uint16_t>(1u << v);
        adj[v] |= static_cast<std::uint16_t>(1u << u);
    }
    if (!connected(k, adj))
        throw input_error("pattern is not connected");
    return Pattern(k, adj);
}

Pattern Pattern::cycle(int k) {
    check_size(k);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i)
        e.emplace_back(i, (i + 1) % k);
    return from_edges(k, e);
}

Pattern Pattern::clique(int k) {
    check_size(k);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            e.emplace_back(i, j);
    return from_edges(k, e);
}

Pattern Pattern::star(int k) {
    check_size(k);
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < k; ++i)
        e.emplace_back(0, i);
    return from_edges(k, e);
}

Pattern Pattern::path(int k) {
    check_size(k);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < k; ++i)
        e.emplace_back(i, i + 1);
    return from_edges(k, e);
}

Pattern Pattern::house() {
    const std::pair<int, int> e[] = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}, {3, 4}};
    return from_edges(5, e);
}

Pattern Pattern::parse(std::string_view spec) {
    const std::string_view text = trim(spec);
    if (auto semi = text.find(';'); semi != std::string_view::npos) {
        const int k = parse_int(trim(text.substr(0, semi)), spec);
        std::vector<std::pair<int, int>> edges;
        std::string_view rest = text.substr(semi + 1);
        while (!trim(rest).empty()) {
            const auto comma = rest.find(',');
            const std::string_view item = trim(rest.substr(0, comma));
            rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
            const auto dash = item.find('-');
            if (dash == std::string_view::npos)
                throw input_error("bad pattern edge '" + std::string(item) + "'");
            edges.emplace_back(parse_int(trim(item.substr(0, dash)), spec), parse_int(trim(item.substr(dash + 1)), spec));
        }
        return from_edges(k, edges);
    }

    if (text == "house")
        return house();
    const std::pair<std::string_view, Pattern (*)(int)> families[] = {
        {"cycle", &Pattern::cycle}, {"clique", &Pattern::clique}, {"star", &Pattern::star}, {"path", &Pattern::path}};
    for (auto [name, make] : families)
        if (text.starts_with(name) && text.size() > name.size())
            return make(parse_int(text.substr(name.size()), spec));
    throw input_error("unknown pattern '" + std::string(spec) + "'");
}

int Pattern::degree(int a) const noexcept { return std::popcount(adj_[a]); }

std::string Pattern::to_literal() const {
    std::string out = std::to_string(k_) + ";";
    bool first = true;
    for (int a = 0; a < k_; ++a)
        for (int b = a + 1; b < k_; ++b)
            if (has_edge(a, b)) {
                if (!first)
                    out += ',';
                out += std::to_string(a) + "-" + std::to_string(b);
                first = false;
            }
    return out;
}

TreeOrder spanning_tree_order(const Pattern &h) {
    const int k = h.size();
    TreeOrder order;
    std::vector<int> position(k, -1);

    std::function<void(int)> visit = [&](int a) {
        position[a] = static_cast<int>(order.labeling.size());
        order.labeling.push_back(a);
        for (int b = 0; b < k; ++b)
            if (h.has_edge(a, b) && position[b] < 0) {
                order.anchors.push_back(position[a] + 1);
                visit(b);
            }
    };
    visit(0);

    if (static_cast<int>(order.labeling.size()) != k)
        throw input_error("pattern is not connected");
    return order;
}

} // namespace motif
