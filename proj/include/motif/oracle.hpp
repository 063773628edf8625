#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "motif/graph.hpp"
#include "motif/pattern.hpp"

// Brute-force ground truth for tests. Nothing here shares code with the
// search or isomorphism routines it is used to check.
namespace motif::oracle {

// Every injective map pattern -> host whose edges and non-edges all agree,
// in lexicographic order of the mapping. Refuses (refused_error) when
// n > 30 and C(n, k) > 10^6.
std::vector<Embedding> enumerate_induced(const Graph &g, const Pattern &h);

struct PairFrequency {
    vertex_t u = 0;
    vertex_t v = 0;
    double expected = 0.0;
    double observed = 0.0;
    double z = 0.0;  // (observed - expected) / binomial sd; 0 when expected is 0 or 1 and matched
    bool within_band = true;
};

enum class Generator { naive, fast };

// Edge frequency of every pair over `reps` graphs drawn with fixed weights,
// judged against min(w_u w_v / (mu n), 1) at `sigmas` binomial standard
// deviations. Pairs with probability exactly 0 or 1 must match exactly.
// Refuses n > 200.
std::vector<PairFrequency> edge_prob_check(std::span<const double> weights, double mu, std::size_t reps,
                                           std::uint64_t seed, Generator generator, double sigmas = 3.0);

} // namespace motif::oracle
