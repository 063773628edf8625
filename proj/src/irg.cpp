#include "motif/irg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "motif/error.hpp"

namespace motif {

double ModelParams::mean() const { return w_min * (tau - 1.0) / (tau - 2.0); }

void ModelParams::validate() const {
    if (!(tau > 2.0 && tau < 3.0))
        throw parameter_error("tau must lie in (2, 3), got " + std::to_string(tau));
    if (!(w_min > 0.0) || !std::isfinite(w_min))
        throw parameter_error("w_min must be positive and finite");
    if (n < 1)
        throw parameter_error("n must be at least 1");
    if (n > std::size_t{0xffffffffu})
        throw parameter_error("n exceeds the 32-bit vertex id range");
}

std::vector<double> sample_weights(const ModelParams &params, Rng &rng) {
    params.validate();
    const double exponent = -1.0 / (params.tau - 1.0);
    std::vector<double> w(params.n);
    for (double &x : w)
        x = params.w_min * std::pow(rng.uniform_open0(), exponent);
    return w;
}

namespace {

double checked_scale(std::span<const double> weights, double mu) {
    if (!(mu > 0.0) || !std::isfinite(mu))
        throw parameter_error("mu must be positive and finite");
    if (weights.size() > std::size_t{0xffffffffu})
        throw parameter_error("n exceeds the 32-bit vertex id range");
    for (double w : weights)
        if (!(w >= 0.0) || !std::isfinite(w))
            throw parameter_error("weights must be finite and non-negative");
    return mu * static_cast<double>(weights.size());
}

} // namespace

Graph generate_naive(std::span<const double> weights, double mu, Rng &rng) {
    const std::size_t n = weights.size();
    if (n > naive_generation_limit)
        throw refused_error("naive generation is quadratic; n = " + std::to_string(n) + " exceeds " +
                            std::to_string(naive_generation_limit));
    const double mu_n = checked_scale(weights, mu);

    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (rng.uniform() < edge_probability(weights[u], weights[v], mu_n))
                edges.push_back({static_cast<vertex_t>(u), static_cast<vertex_t>(v)});
    return Graph::from_edges(n, edges);
}

Graph generate_fast(std::span<const double> weights, double mu, Rng &rng) {
    const std::size_t n = weights.size();
    const double mu_n = checked_scale(weights, mu);

    std::vector<vertex_t> by_weight(n);
    std::iota(by_weight.begin(), by_weight.end(), vertex_t{0});
    std::stable_sort(by_weight.begin(), by_weight.end(),
                     [&](vertex_t a, vertex_t b) { return weights[a] > weights[b]; });
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i)
        w[i] = weights[by_weight[i]];

    // For a fixed u, p(u, v) is non-increasing in v, so the probability at the
    // last landing point bounds every pair up to the next landing point.
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(std::accumulate(w.begin(), w.end(), 0.0) / 2.0 * 1.05) + 16);
    for (std::size_t u = 0; u + 1 < n; ++u) {
        std::size_t v = u + 1;
        double p = edge_probability(w[u], w[v], mu_n);
        while (v < n && p > 0.0) {
            if (p < 1.0) {
                const double skip = std::floor(std::log(rng.uniform_open0()) / std::log1p(-p));
                if (skip >= static_cast<double>(n - v))
                    break;
                v += static_cast<std::size_t>(skip);
            }
            const double q = edge_probability(w[u], w[v], mu_n);
            if (rng.uniform() * p < q)
                edges.push_back({by_weight[u], by_weight[v]});
            p = q;
            ++v;
        }
    }
    return Graph::from_edges(n, edges);
}

} // namespace motif
