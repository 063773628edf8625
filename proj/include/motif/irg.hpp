#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "motif/graph.hpp"
#include "motif/rng.hpp"

namespace motif {

// Inhomogeneous random graph with i.i.d. Pareto weights, P(w > x) = (x / w_min)^(1 - tau),
// and independent edges with probability min(w w' / (mu n), 1).
struct ModelParams {
    std::size_t n = 0;
    double tau = 2.5;
    double w_min = 1.0;

    // Mean of the weight law: w_min (tau - 1) / (tau - 2).
    double mean() const;
    void validate() const;
};

inline constexpr std::size_t naive_generation_limit = 20'000;

// Inverse-CDF sampling, w_i = w_min U^(-1/(tau-1)). Throws parameter_error
// unless tau is in (2, 3), w_min > 0 and n >= 1.
std::vector<double> sample_weights(const ModelParams &params, Rng &rng);

inline double edge_probability(double wu, double wv, double mu_n) {
    const double p = wu * wv / mu_n;
    return p < 1.0 ? p : 1.0;
}

// One Bernoulli trial per unordered pair. Refuses n > naive_generation_limit.
Graph generate_naive(std::span<const double> weights, double mu, Rng &rng);

// Same edge law as generate_naive in expected O(n log n + m) time: weights are
// visited in decreasing order, geometric skips jump over runs of absent
// pairs at the current (upper-bound) probability, and each landing pair is
// thinned to its exact probability.
Graph generate_fast(std::span<const double> weights, double mu, Rng &rng);

} // namespace motif
