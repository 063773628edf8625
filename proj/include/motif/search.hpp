#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "motif/graph.hpp"
#include "motif/pattern.hpp"
#include "motif/rng.hpp"

namespace motif {

// Closed real interval of admissible degrees; hi may be +inf.
struct DegreeWindow {
    double lo = 0.0;
    double hi = 0.0;

    bool contains(std::size_t degree) const noexcept;
};

// [sqrt(f1 mu n), sqrt(f2 mu n)]. f2 may be +inf. Requires 0 <= f1 < f2.
DegreeWindow window_sqrt(double f1, double f2, double mu, std::size_t n);

// [(mu n)^gamma / ln n, (mu n)^gamma] for 0 < gamma <= 1, n >= 2.
DegreeWindow window_gamma(double gamma, double mu, std::size_t n);

// [0, inf): every vertex.
DegreeWindow window_all();

// Vertices whose degree lies in the window, ascending.
std::vector<vertex_t> select_vertices(const Graph &g, DegreeWindow window);

struct SearchOutcome {
    std::optional<Embedding> embedding;
    std::uint64_t checks = 0;
    std::uint64_t attempts = 0;
    std::size_t selected = 0;

    bool found() const noexcept { return embedding.has_value(); }
};

// Called with every candidate k-set (host vertex ids) right before it is checked.
using CandidateObserver = std::function<void(std::span<const vertex_t>)>;

// Random partition search: shuffle the selected vertices, cut them into
// floor(|V'|/k) disjoint k-sets and check each until one holds an induced copy.
SearchOutcome random_partition_search(const Graph &g, const Pattern &h, DegreeWindow window, Rng &rng,
                                      const CandidateObserver &observer = {});

// Neighborhood search on the subgraph induced by the selected vertices: up to
// `budget` attempts, each seeding a uniform selected vertex and growing the set
// along the pattern's spanning-tree order with uniform fresh neighbors of the
// anchor. An attempt whose anchor has no fresh neighbor is abandoned; it uses
// budget but is not a check.
SearchOutcome neighborhood_search(const Graph &g, const Pattern &h, DegreeWindow window, std::uint64_t budget,
                                  Rng &rng, const CandidateObserver &observer = {});

} // namespace motif
