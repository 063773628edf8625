// End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any criterion fails.
//
//   motif_acceptance            run all criteria
//   motif_acceptance 3 6        run only criteria 3 and 6
//
// MOTIF_DATA_DIR may point at a directory holding SNAP edge lists of the
// reference data sets for the real-data half of criterion 7.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "motif/experiment.hpp"
#include "motif/ingest.hpp"
#include "motif/irg.hpp"
#include "motif/oracle.hpp"
#include "motif/search.hpp"

using namespace motif;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
    bool pass = false;
    std::string detail;
};

std::string fmt(double x, int precision = 4) {
    std::ostringstream s;
    s.precision(precision);
    s << x;
    return s.str();
}

// Ordinary least squares slope of y on x.
double ols_slope(const std::vector<double> &x, const std::vector<double> &y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

bool embedding_valid(const Graph &g, const Embedding &phi, const Pattern &h) {
    for (int a = 0; a < h.size(); ++a)
        for (int b = a + 1; b < h.size(); ++b)
            if (phi[a] == phi[b] || h.has_edge(a, b) != g.has_edge(phi[a], phi[b]))
                return false;
    return true;
}

// ---------------------------------------------------------------------------
// 1. is_induced_copy agrees with brute-force enumeration on every k-set.

Verdict oracle_equivalence() {
    const auto start = Clock::now();
    const std::vector<Pattern> patterns{Pattern::cycle(3), Pattern::cycle(4), Pattern::cycle(5),
                                        Pattern::clique(4), Pattern::star(4), Pattern::house()};
    Rng rng(20240101);
    std::size_t instances = 0, mismatches = 0, invalid = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 6 + rng.below(7);  // 6..12
        std::vector<Edge> edges;
        for (vertex_t u = 0; u < n; ++u)
            for (vertex_t v = u + 1; v < n; ++v)
                if (rng.uniform() < 0.3)
                    edges.push_back({u, v});
        const Graph g = Graph::from_edges(n, edges);

        for (const Pattern &h : patterns) {
            std::set<std::vector<vertex_t>> images;
            for (Embedding phi : oracle::enumerate_induced(g, h)) {
                std::sort(phi.begin(), phi.end());
                images.insert(phi);
            }
            const auto k = static_cast<std::size_t>(h.size());
            std::vector<vertex_t> s(k);
            std::vector<bool> pick(n, false);
            std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
            do {
                std::size_t j = 0;
                for (vertex_t v = 0; v < n; ++v)
                    if (pick[v])
                        s[j++] = v;
                const auto phi = is_induced_copy(g, s, h);
                ++instances;
                if (phi.has_value() != (images.count(s) == 1))
                    ++mismatches;
                if (phi && !embedding_valid(g, *phi, h))
                    ++invalid;
            } while (std::prev_permutation(pick.begin(), pick.end()));
        }
    }
    const double elapsed = seconds_since(start);
    return {mismatches == 0 && invalid == 0 && elapsed < 60.0,
            std::to_string(instances) + " (graph, k-set) instances, " + std::to_string(mismatches) +
                " disagreements, " + std::to_string(invalid) + " invalid embeddings, " + fmt(elapsed, 3) +
                " s (limit 60 s)"};
}

// ---------------------------------------------------------------------------
// 2. Fast generator reproduces the pairwise law of the naive one; expected
//    degrees track weights.

Verdict model_fidelity() {
    const auto start = Clock::now();
    const std::size_t n = 500, reps = 2000;
    const ModelParams params{n, 2.5, 1.0};
    Rng wrng(500);
    const auto w = sample_weights(params, wrng);
    const double mu = params.mean();

    std::vector<std::uint32_t> fast(n * n, 0), naive(n * n, 0);
    std::vector<double> degree_sum(n, 0.0);
    for (std::size_t r = 0; r < reps; ++r) {
        Rng a = Rng::stream(501, r), b = Rng::stream(502, r);
        const Graph gf = generate_fast(w, mu, a);
        const Graph gn = generate_naive(w, mu, b);
        for (const Edge &e : gf.edge_list())
            ++fast[e.u * n + e.v];
        for (const Edge &e : gn.edge_list())
            ++naive[e.u * n + e.v];
        for (vertex_t v = 0; v < n; ++v)
            degree_sum[v] += static_cast<double>(gf.degree(v));
    }

    std::size_t pairs = 0, agree = 0;
    const double R = static_cast<double>(reps);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
            ++pairs;
            const double pf = fast[u * n + v] / R, pn = naive[u * n + v] / R;
            const double pooled = (pf + pn) / 2.0;
            const double band = 3.0 * std::sqrt(pooled * (1.0 - pooled) * 2.0 / R);
            if (std::abs(pf - pn) <= band)
                ++agree;
        }
    const double agree_frac = static_cast<double>(agree) / static_cast<double>(pairs);

    double rel_sum = 0.0, model_rel_sum = 0.0;
    std::size_t heavy = 0;
    const double mu_n = mu * static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (w[i] < 10.0)
            continue;
        ++heavy;
        const double mean_degree = degree_sum[i] / R;
        rel_sum += std::abs(mean_degree - w[i]) / w[i];
        double model = 0.0;  // exact conditional expectation sum_j p_ij
        for (std::size_t j = 0; j < n; ++j)
            if (j != i)
                model += std::min(w[i] * w[j] / mu_n, 1.0);
        model_rel_sum += std::abs(mean_degree - model) / model;
    }
    const double rel = heavy ? rel_sum / static_cast<double>(heavy) : 0.0;
    const double model_rel = heavy ? model_rel_sum / static_cast<double>(heavy) : 0.0;
    const double mean_w = std::accumulate(w.begin(), w.end(), 0.0) / static_cast<double>(n);
    const double elapsed = seconds_since(start);

    return {agree_frac >= 0.99 && heavy > 0 && rel < 0.05 && elapsed < 600.0,
            "pairs within 3 sigma " + fmt(100.0 * agree_frac) + "% (need >= 99%); mean |E[D]-w|/w over " +
                std::to_string(heavy) + " vertices with w >= 10: " + fmt(rel) + " (need < 0.05) [vs sum_j p_ij: " +
                fmt(model_rel) + ", sample mean weight " + fmt(mean_w) + " vs mu 3]; " + fmt(elapsed, 3) +
                " s (limit 600 s)"};
}

// ---------------------------------------------------------------------------
// 3. |V'| grows like n^((3 - tau)/2).

Verdict selected_set_scaling() {
    const auto start = Clock::now();
    const ModelParams base{0, 2.5, 1.0};
    std::vector<double> x, y;
    std::ostringstream means;
    for (std::size_t n : {std::size_t{10'000}, std::size_t{100'000}, std::size_t{1'000'000}, std::size_t{10'000'000}}) {
        double total = 0.0;
        for (std::uint64_t r = 0; r < 20; ++r) {
            ModelParams params = base;
            params.n = n;
            Rng rng = Rng::stream(3000 + n, r);
            const auto w = sample_weights(params, rng);
            const Graph g = generate_fast(w, params.mean(), rng);
            const auto window = window_sqrt(1.0 / std::log(static_cast<double>(n)), 0.9, params.mean(), n);
            const auto selected = select_vertices(g, window).size();
            x.push_back(std::log(static_cast<double>(n)));
            y.push_back(std::log(static_cast<double>(std::max<std::size_t>(selected, 1))));
            total += static_cast<double>(selected);
        }
        means << " n=" << n << ":" << fmt(total / 20.0);
    }
    const double slope = ols_slope(x, y);
    const double elapsed = seconds_since(start);
    return {std::abs(slope - 0.25) <= 0.08 && elapsed < 1800.0,
            "slope of ln|V'| on ln n = " + fmt(slope) + " (need 0.25 +- 0.08); mean |V'|" + means.str() + "; " +
                fmt(elapsed, 3) + " s (limit 1800 s)"};
}

// ---------------------------------------------------------------------------
// 4. House pattern success rates in the three window settings.

Verdict house_success() {
    const auto start = Clock::now();
    ExperimentConfig config;
    config.source = ExperimentConfig::Source::irg;
    config.model = {1'000'000, 2.5, 1.0};
    config.pattern = "house";
    config.algorithm = 2;
    config.windows = {WindowSpec::parse("sqrt:1/ln:0.9"), WindowSpec::parse("sqrt:1/ln:inf"),
                      WindowSpec::parse("sqrt:0:inf")};
    config.budget = 10'000;
    config.reps = 100;
    config.seed = 4;
    const auto result = run_experiment(config);
    const double elapsed = seconds_since(start);

    const double main = result.rows[0].success_rate, open = result.rows[1].success_rate,
                 whole = result.rows[2].success_rate;
    const bool pass = main >= 0.32 && main <= 0.62 && open <= 0.05 && whole <= 0.05 && elapsed < 7200.0;
    std::ostringstream d;
    d << "success rates (1/ln n, 0.9) = " << fmt(main) << " (need [0.32, 0.62]), (1/ln n, inf) = " << fmt(open)
      << " (need <= 0.05), (0, inf) = " << fmt(whole) << " (need <= 0.05); mean checks on success "
      << fmt(result.rows[0].mean_checks) << " / " << fmt(result.rows[1].mean_checks) << " / "
      << fmt(result.rows[2].mean_checks) << "; mean |V'| " << fmt(result.rows[0].selected_mean) << "; "
      << fmt(elapsed, 3) << " s (limit 7200 s)";
    return {pass, d.str()};
}

// ---------------------------------------------------------------------------
// 5. Neighborhood growth beats random partition on cycles.

Verdict algorithm_ordering() {
    const auto start = Clock::now();
    ExperimentConfig config;
    config.source = ExperimentConfig::Source::irg;
    config.model = {1'000'000, 2.5, 1.0};
    config.pattern = "cycle";
    config.ks = {4, 5, 6};
    config.windows = {WindowSpec::parse("sqrt:1/ln:0.9")};
    config.budget = 10'000;
    config.reps = 50;
    config.seed = 5;

    config.algorithm = 1;
    const auto partition = run_experiment(config);
    config.algorithm = 2;
    const auto growth = run_experiment(config);
    const double elapsed = seconds_since(start);

    bool pass = elapsed < 7200.0;
    std::ostringstream d;
    for (std::size_t i = 0; i < config.ks.size(); ++i) {
        const auto &a1 = partition.rows[i], &a2 = growth.rows[i];
        pass = pass && a2.success_rate > a1.success_rate;
        if (a2.k <= 5)
            pass = pass && a2.successes > 0 && a2.mean_checks < 500.0;
        d << "k=" << a2.k << ": alg1 " << fmt(a1.success_rate) << " alg2 " << fmt(a2.success_rate)
          << " (mean checks " << fmt(a2.mean_checks) << "); ";
    }
    d << "need alg2 > alg1 at every k and alg2 mean checks < 500 for k <= 5; " << fmt(elapsed, 3)
      << " s (limit 7200 s)";
    return {pass, d.str()};
}

// ---------------------------------------------------------------------------
// 6. Select + search time is (at most) linear in n.

Verdict linear_runtime() {
    const auto start = Clock::now();
    const Pattern h = Pattern::cycle(4);
    std::vector<double> x, y;
    std::ostringstream d;
    for (std::size_t n : {std::size_t{100'000}, std::size_t{1'000'000}, std::size_t{10'000'000}}) {
        const ModelParams params{n, 2.5, 1.0};
        std::vector<double> times;
        for (std::uint64_t r = 0; r < 5; ++r) {
            Rng rng = Rng::stream(6000 + n, r);
            const auto w = sample_weights(params, rng);
            const Graph g = generate_fast(w, params.mean(), rng);
            const auto window = window_sqrt(1.0 / std::log(static_cast<double>(n)), 0.9, params.mean(), n);
            // Repeat short runs so the timer resolution does not dominate.
            const int inner = n <= 100'000 ? 20 : (n <= 1'000'000 ? 5 : 1);
            const auto t0 = Clock::now();
            for (int i = 0; i < inner; ++i) {
                Rng search_rng = Rng::stream(7000 + r, static_cast<std::uint64_t>(i));
                const auto out = neighborhood_search(g, h, window, 1000, search_rng);
                if (out.found() && !embedding_valid(g, *out.embedding, h))
                    return {false, "invalid embedding at n = " + std::to_string(n)};
            }
            times.push_back(seconds_since(t0) / inner);
        }
        std::sort(times.begin(), times.end());
        const double median = times[times.size() / 2];
        x.push_back(std::log(static_cast<double>(n)));
        y.push_back(std::log(median));
        d << "n=" << n << ": " << fmt(median * 1e3) << " ms; ";
    }
    const double beta = ols_slope(x, y);
    const double elapsed = seconds_since(start);
    d << "fitted exponent beta = " << fmt(beta) << " (need <= 1.15); " << fmt(elapsed, 3) << " s (limit 1800 s)";
    return {beta <= 1.15 && elapsed < 1800.0, d.str()};
}

// ---------------------------------------------------------------------------
// 7. Power-law exponent fit.

Verdict tau_fit() {
    // Discrete power law with known cutoff: round a continuous Pareto with
    // x_min = d_min - 1/2.
    const std::size_t d_min = 10;
    Rng rng(7);
    std::vector<std::size_t> degrees(100'000);
    for (auto &d : degrees)
        d = static_cast<std::size_t>(
            std::llround((static_cast<double>(d_min) - 0.5) * std::pow(rng.uniform_open0(), -1.0 / 1.5)));
    const auto fit = fit_tau(degrees, d_min);
    bool pass = std::abs(fit.tau - 2.5) <= 0.05;
    std::ostringstream d;
    d << "synthetic tau-hat = " << fmt(fit.tau) << " (need 2.5 +- 0.05)";

    // Reference exponents for the four real data sets.
    const std::map<std::string, double> reference{{"wiki-Talk", 2.46}, {"wikipedia", 2.46}, {"loc-gowalla", 2.65},
                                                  {"gowalla", 2.65},   {"baidu", 2.29},     {"as-skitter", 2.35}};
    const char *dir = std::getenv("MOTIF_DATA_DIR");
    bool any = false;
    if (dir && fs::is_directory(dir)) {
        for (const auto &entry : fs::directory_iterator(dir)) {
            if (!entry.is_regular_file())
                continue;
            const std::string name = entry.path().filename().string();
            for (const auto &[stem, tau] : reference) {
                if (name.find(stem) == std::string::npos)
                    continue;
                const auto data = read_edge_list_file(entry.path().string());
                const auto stats = dataset_stats(data.graph);
                const bool ok = std::abs(stats.fit.tau - tau) <= 0.15;
                pass = pass && ok;
                any = true;
                d << "; " << name << ": n=" << stats.n << " m=" << stats.m << " tau-hat=" << fmt(stats.fit.tau)
                  << " (reference " << tau << " +- 0.15, d_min " << stats.fit.d_min << ")";
                break;
            }
        }
    }
    if (!any)
        d << "; real-data check not run (no reference data set under MOTIF_DATA_DIR)";
    return {pass, d.str()};
}

// ---------------------------------------------------------------------------
// 8. Every CLI invocation is byte-identical across two runs.

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

Verdict cli_determinism() {
    const fs::path work = fs::current_path() / "acceptance_cli";
    fs::remove_all(work);
    fs::create_directories(work);
    {
        std::ofstream cfg(work / "exp.cfg");
        cfg << "source = irg\nn = 100000\npattern = cycle\nk = 3..6\nalg = 2\n"
               "windows = sqrt:1/ln:0.9; sqrt:1/ln:inf; gamma:0.3\ns = 1000\nreps = 6\nseed = 8\nthreads = 2\n";
    }
    const std::string motif = MOTIF_CLI_PATH, irg = IRG_CLI_PATH;
    const std::string w = work.string();
    // Each command writes its artifacts with a round suffix {R}.
    const std::vector<std::pair<std::string, std::vector<std::string>>> commands{
        {irg + " gen --n 200000 --tau 2.5 --seed 12 --out " + w + "/g{R}.txt --weights " + w + "/w{R}.txt",
         {"g{R}.txt", "w{R}.txt"}},
        {irg + " gen --n 3000 --tau 2.7 --seed 2 --naive --out " + w + "/n{R}.txt", {"n{R}.txt"}},
        {motif + " find --graph " + w + "/ga.txt --pattern house --alg 2 --s 10000 --seed 1 --mu 3 --n 200000 > " + w +
             "/f2{R}.out",
         {"f2{R}.out"}},
        {motif + " find --graph " + w + "/ga.txt --pattern cycle4 --alg 1 --seed 1 > " + w + "/f1{R}.out",
         {"f1{R}.out"}},
        {motif + " find --graph " + w + "/ga.txt --pattern cycle6 --gamma 0.3 --s 2000 --seed 4 > " + w +
             "/fg{R}.out",
         {"fg{R}.out"}},
        {motif + " find --graph " + w + "/ga.txt --pattern cycle5 --all --s 2000 --seed 4 > " + w + "/fa{R}.out",
         {"fa{R}.out"}},
        {motif + " stats --graph " + w + "/ga.txt > " + w + "/s{R}.out", {"s{R}.out"}},
        {motif + " experiment --config " + w + "/exp.cfg --csv " + w + "/e{R}.csv --log " + w + "/e{R}.jsonl",
         {"e{R}.csv", "e{R}.jsonl"}},
    };
    auto expand = [](std::string s, const std::string &round) {
        for (auto at = s.find("{R}"); at != std::string::npos; at = s.find("{R}"))
            s.replace(at, 3, round);
        return s;
    };

    std::size_t compared = 0;
    for (const auto &[command, outputs] : commands) {
        for (const std::string round : {"a", "b"}) {
            const std::string cmd = expand(command, round);
            if (std::system(cmd.c_str()) != 0)
                return {false, "command failed: " + cmd};
        }
        for (const std::string &out : outputs) {
            const std::string a = slurp(work / expand(out, "a")), b = slurp(work / expand(out, "b"));
            if (a.empty() || a != b)
                return {false, "outputs differ or are empty: " + expand(out, "a")};
            ++compared;
        }
    }
    return {true, std::to_string(commands.size()) + " CLI invocations, " + std::to_string(compared) +
                      " output files byte-identical across two runs"};
}

} // namespace

int main(int argc, char **argv) {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"oracle equivalence", oracle_equivalence},
        {"model fidelity", model_fidelity},
        {"selected-set scaling", selected_set_scaling},
        {"house success rates", house_success},
        {"alg 2 vs alg 1 on cycles", algorithm_ordering},
        {"linear runtime", linear_runtime},
        {"tau fitting", tau_fit},
        {"CLI determinism", cli_determinism},
    };

    std::set<int> only;
    for (int i = 1; i < argc; ++i)
        only.insert(std::atoi(argv[i]));

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        if (!only.empty() && !only.count(id))
            continue;
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception &e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        failures += !v.pass;
        std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << id << ". " << criteria[i].first << ": " << v.detail
                  << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
