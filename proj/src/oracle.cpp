#include "motif/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "motif/error.hpp"
#include "motif/irg.hpp"
#include "motif/rng.hpp"

namespace motif::oracle {

namespace {

double binomial(std::size_t n, std::size_t k) {
    if (k > n)
        return 0.0;
    double r = 1.0;
    for (std::size_t i = 1; i <= k; ++i)
        r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    return r;
}

struct Enumerator {
    std::size_t n;
    std::vector<char> dense;
    const Pattern &h;
    Embedding current;
    std::vector<char> used;
    std::vector<Embedding> found;

    void extend(int a) {
        const int k = h.size();
        if (a == k) {
            found.push_back(current);
            return;
        }
        for (std::size_t x = 0; x < n; ++x) {
            if (used[x])
                continue;
            bool ok = true;
            for (int b = 0; b < a && ok; ++b)
                ok = (dense[x * n + current[b]] != 0) == h.has_edge(a, b);
            if (!ok)
                continue;
            used[x] = 1;
            current[a] = static_cast<vertex_t>(x);
            extend(a + 1);
            used[x] = 0;
        }
    }
};

} // namespace

std::vector<Embedding> enumerate_induced(const Graph &g, const Pattern &h) {
    const std::size_t n = g.num_vertices();
    const auto k = static_cast<std::size_t>(h.size());
    if (n > 30 && binomial(n, k) > 1e6)
        throw refused_error("brute-force enumeration refused for n = " + std::to_string(n));

    Enumerator e{n, std::vector<char>(n * n, 0), h, Embedding(k), std::vector<char>(n, 0), {}};
    for (std::size_t u = 0; u < n; ++u)
        for (vertex_t v : g.neighbors(static_cast<vertex_t>(u)))
            e.dense[u * n + v] = 1;
    if (k <= n)
        e.extend(0);
    return std::move(e.found);
}

std::vector<PairFrequency> edge_prob_check(std::span<const double> weights, double mu, std::size_t reps,
                                           std::uint64_t seed, Generator generator, double sigmas) {
    const std::size_t n = weights.size();
    if (n > 200)
        throw refused_error("edge_prob_check is limited to n <= 200");
    if (reps == 0)
        throw parameter_error("reps must be positive");

    std::vector<std::size_t> hits(n * n, 0);
    for (std::size_t r = 0; r < reps; ++r) {
        Rng rng = Rng::stream(seed, r);
        const Graph g = generator == Generator::fast ? generate_fast(weights, mu, rng) : generate_naive(weights, mu, rng);
        for (const Edge &e : g.edge_list())
            ++hits[e.u * n + e.v];
    }

    std::vector<PairFrequency> table;
    table.reserve(n * (n - (n > 0 ? 1 : 0)) / 2);
    const double total = mu * static_cast<double>(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
            PairFrequency f;
            f.u = static_cast<vertex_t>(u);
            f.v = static_cast<vertex_t>(v);
            f.expected = std::min(weights[u] * weights[v] / total, 1.0);
            f.observed = static_cast<double>(hits[u * n + v]) / static_cast<double>(reps);
            if (f.expected <= 0.0 || f.expected >= 1.0) {
                f.within_band = f.observed == f.expected;
                f.z = f.within_band ? 0.0 : INFINITY;
            } else {
                const double sd = std::sqrt(f.expected * (1.0 - f.expected) / static_cast<double>(reps));
                f.z = (f.observed - f.expected) / sd;
                f.within_band = std::abs(f.z) <= sigmas;
            }
            table.push_back(f);
        }
    return table;
}

} // namespace motif::oracle
