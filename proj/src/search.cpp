#include "motif/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "motif/error.hpp"

namespace motif {

bool DegreeWindow::contains(std::size_t degree) const noexcept {
    const auto d = static_cast<double>(degree);
    return d >= lo && d <= hi;
}

DegreeWindow window_sqrt(double f1, double f2, double mu, std::size_t n) {
    if (!(f1 >= 0.0) || !(f2 > f1))
        throw parameter_error("window needs 0 <= f1 < f2, got f1 = " + std::to_string(f1) +
                              ", f2 = " + std::to_string(f2));
    if (!(mu > 0.0) || n == 0)
        throw parameter_error("window needs mu > 0 and n > 0");
    const double scale = mu * static_cast<double>(n);
    return {std::sqrt(f1 * scale), std::isinf(f2) ? f2 : std::sqrt(f2 * scale)};
}

DegreeWindow window_gamma(double gamma, double mu, std::size_t n) {
    if (!(gamma > 0.0 && gamma <= 1.0))
        throw parameter_error("gamma must lie in (0, 1], got " + std::to_string(gamma));
    if (!(mu > 0.0) || n < 2)
        throw parameter_error("gamma window needs mu > 0 and n >= 2");
    const double hi = std::pow(mu * static_cast<double>(n), gamma);
    return {hi / std::log(static_cast<double>(n)), hi};
}

DegreeWindow window_all() { return {0.0, std::numeric_limits<double>::infinity()}; }

std::vector<vertex_t> select_vertices(const Graph &g, DegreeWindow window) {
    std::vector<vertex_t> out;
    for (vertex_t v = 0; v < g.num_vertices(); ++v)
        if (window.contains(g.degree(v)))
            out.push_back(v);
    return out;
}

SearchOutcome random_partition_search(const Graph &g, const Pattern &h, DegreeWindow window, Rng &rng,
                                      const CandidateObserver &observer) {
    SearchOutcome out;
    std::vector<vertex_t> selected = select_vertices(g, window);
    out.selected = selected.size();

    for (std::size_t i = selected.size(); i > 1; --i)
        std::swap(selected[i - 1], selected[rng.below(i)]);

    const auto k = static_cast<std::size_t>(h.size());
    for (std::size_t first = 0; first + k <= selected.size(); first += k) {
        const std::span<const vertex_t> block(selected.data() + first, k);
        if (observer)
            observer(block);
        ++out.attempts;
        ++out.checks;
        if (auto phi = is_induced_copy(g, block, h)) {
            out.embedding = std::move(phi);
            break;
        }
    }
    return out;
}

SearchOutcome neighborhood_search(const Graph &g, const Pattern &h, DegreeWindow window, std::uint64_t budget,
                                  Rng &rng, const CandidateObserver &observer) {
    if (budget < 1)
        throw parameter_error("attempt budget must be at least 1");

    SearchOutcome out;
    const std::vector<vertex_t> selected = select_vertices(g, window);
    out.selected = selected.size();
    if (selected.empty())
        return out;

    const Subgraph sub = induce(g, selected);
    const Graph &local = sub.graph;
    const TreeOrder order = spanning_tree_order(h);
    const auto k = static_cast<std::size_t>(h.size());

    std::vector<vertex_t> set(k);
    std::vector<vertex_t> host(k);
    auto in_set = [&](vertex_t v, std::size_t size) {
        return std::find(set.begin(), set.begin() + static_cast<std::ptrdiff_t>(size), v) !=
               set.begin() + static_cast<std::ptrdiff_t>(size);
    };

    for (std::uint64_t attempt = 0; attempt < budget; ++attempt) {
        ++out.attempts;
        set[0] = static_cast<vertex_t>(rng.below(selected.size()));

        std::size_t size = 1;
        for (; size < k; ++size) {
            const vertex_t anchor = set[static_cast<std::size_t>(order.anchors[size - 1] - 1)];
            const auto nb = local.neighbors(anchor);

            std::size_t taken = 0;
            for (std::size_t j = 0; j < size; ++j)
                taken += std::binary_search(nb.begin(), nb.end(), set[j]) ? 1 : 0;
            const std::size_t eligible = nb.size() - taken;
            if (eligible == 0)
                break;

            vertex_t pick;
            if (2 * eligible >= nb.size()) {
                do
                    pick = nb[rng.below(nb.size())];
                while (in_set(pick, size));
            } else {
                std::uint64_t rank = rng.below(eligible);
                auto it = nb.begin();
                for (;; ++it) {
                    if (in_set(*it, size))
                        continue;
                    if (rank-- == 0)
                        break;
                }
                pick = *it;
            }
            set[size] = pick;
        }
        if (size < k)
            continue;

        for (std::size_t i = 0; i < k; ++i)
            host[i] = sub.to_host[set[i]];
        if (observer)
            observer(host);
        ++out.checks;
        if (auto phi = is_induced_copy(local, set, h)) {
            for (vertex_t &v : *phi)
                v = sub.to_host[v];
            out.embedding = std::move(phi);
            break;
        }
    }
    return out;
}

} // namespace motif
