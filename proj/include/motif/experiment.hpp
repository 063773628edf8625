#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "motif/irg.hpp"
#include "motif/pattern.hpp"
#include "motif/search.hpp"

namespace motif {

// Degree-window setting of one sweep column, e.g. `sqrt:1/ln:0.9`,
// `sqrt:0:inf`, `gamma:0.3` or `all`.
struct WindowSpec {
    enum class Kind { sqrt, gamma, all };

    Kind kind = Kind::sqrt;
    double f1 = 0.0;
    bool f1_inverse_log = true;  // f1 = 1 / ln n
    double f2 = 0.9;
    double gamma = 0.5;

    static WindowSpec parse(std::string_view text);
    std::string label() const;
    DegreeWindow resolve(double mu, std::size_t n) const;
};

struct ExperimentConfig {
    enum class Source { irg, edge_list };

    Source source = Source::irg;
    ModelParams model{1'000'000, 2.5, 1.0};
    std::string graph_path;

    // A family (cycle, clique, star, path) swept over `ks`, or any single
    // pattern accepted by Pattern::parse, in which case `ks` is ignored.
    std::string pattern = "cycle";
    std::vector<int> ks{3, 4, 5, 6, 7, 8};

    int algorithm = 2;
    std::vector<WindowSpec> windows;
    std::uint64_t budget = 10'000;
    std::size_t reps = 100;
    std::uint64_t seed = 1;
    unsigned threads = 0;  // 0: hardware concurrency

    std::string csv_path;
    std::string log_path;

    // key = value lines; `#` starts a comment. List values are comma
    // separated, window lists are `;` separated.
    static ExperimentConfig parse(std::istream &in);
    static ExperimentConfig parse_file(const std::string &path);

    void validate() const;
    std::vector<Pattern> patterns() const;
};

struct ReplicationRecord {
    std::size_t rep = 0;
    int k = 0;
    std::string setting;
    bool found = false;
    std::uint64_t checks = 0;
    std::size_t selected = 0;
    double seconds = 0.0;  // select + search, excludes graph generation
};

struct ExperimentRow {
    int k = 0;
    std::string setting;
    std::size_t reps = 0;
    std::size_t successes = 0;
    double success_rate = 0.0;
    double mean_checks = 0.0;  // over successful replications only; NaN if none
    double selected_mean = 0.0;
    double mean_seconds = 0.0;
};

struct ExperimentResult {
    std::uint64_t seed = 0;
    std::vector<ExperimentRow> rows;
    std::vector<ReplicationRecord> records;  // rep-major, then row order
};

// Replications run concurrently; replication r draws from stream r of the
// master seed, so the aggregates do not depend on the thread count. Throws
// io_error when the edge-list source cannot be read.
ExperimentResult run_experiment(const ExperimentConfig &config);

// Columns k,setting,success_rate,mean_checks,selected_mean,reps,seed.
void emit_csv(const ExperimentResult &result, std::ostream &out);
void emit_csv(const ExperimentResult &result, const std::string &path);

// One JSON object per replication record; no timings, so logs are reproducible.
void emit_log(const ExperimentResult &result, std::ostream &out);

} // namespace motif
