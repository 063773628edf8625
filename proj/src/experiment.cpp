#include "motif/experiment.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "motif/error.hpp"
#include "motif/ingest.hpp"

namespace motif {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    while (true) {
        const auto at = s.find(sep);
        parts.push_back(trim(s.substr(0, at)));
        if (at == std::string_view::npos)
            return parts;
        s = s.substr(at + 1);
    }
}

template <class T>
T parse_number(std::string_view text, std::string_view what) {
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw input_error("bad " + std::string(what) + " '" + std::string(text) + "'");
    return value;
}

double parse_real(std::string_view text, std::string_view what) {
    if (text == "inf" || text == "Inf" || text == "infinity")
        return std::numeric_limits<double>::infinity();
    return parse_number<double>(text, what);
}

std::string format_real(double x) {
    if (std::isnan(x))
        return "nan";
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, end);
}

std::vector<int> parse_ks(std::string_view text) {
    std::vector<int> ks;
    for (std::string_view item : split(text, ',')) {
        if (item.empty())
            continue;
        if (auto dots = item.find(".."); dots != std::string_view::npos) {
            const int lo = parse_number<int>(trim(item.substr(0, dots)), "k range");
            const int hi = parse_number<int>(trim(item.substr(dots + 2)), "k range");
            for (int k = lo; k <= hi; ++k)
                ks.push_back(k);
        } else {
            ks.push_back(parse_number<int>(item, "k"));
        }
    }
    return ks;
}

bool is_family(std::string_view name) {
    return name == "cycle" || name == "clique" || name == "star" || name == "path";
}

std::vector<WindowSpec> default_windows() {
    return {WindowSpec::parse("sqrt:1/ln:0.9"), WindowSpec::parse("sqrt:1/ln:inf"), WindowSpec::parse("sqrt:0:inf")};
}

} // namespace

WindowSpec WindowSpec::parse(std::string_view text) {
    const auto parts = split(trim(text), ':');
    WindowSpec w;
    if (parts.size() == 1 && parts[0] == "all") {
        w.kind = Kind::all;
        return w;
    }
    if (parts.size() == 2 && parts[0] == "gamma") {
        w.kind = Kind::gamma;
        w.gamma = parse_real(parts[1], "gamma");
        if (!(w.gamma > 0.0 && w.gamma <= 1.0))
            throw parameter_error("gamma must lie in (0, 1]");
        return w;
    }
    if (parts.size() == 3 && parts[0] == "sqrt") {
        w.kind = Kind::sqrt;
        w.f1_inverse_log = parts[1] == "1/ln";
        w.f1 = w.f1_inverse_log ? 0.0 : parse_real(parts[1], "f1");
        w.f2 = parse_real(parts[2], "f2");
        if (!w.f1_inverse_log && !(w.f1 >= 0.0 && w.f2 > w.f1))
            throw parameter_error("window needs 0 <= f1 < f2");
        return w;
    }
    throw input_error("bad window '" + std::string(text) + "' (expected sqrt:F1:F2, gamma:G or all)");
}

std::string WindowSpec::label() const {
    switch (kind) {
    case Kind::all:
        return "all";
    case Kind::gamma:
        return "gamma:" + format_real(gamma);
    case Kind::sqrt:
        break;
    }
    return "sqrt:" + (f1_inverse_log ? std::string("1/ln") : format_real(f1)) + ":" + format_real(f2);
}

DegreeWindow WindowSpec::resolve(double mu, std::size_t n) const {
    switch (kind) {
    case Kind::all:
        return window_all();
    case Kind::gamma:
        return window_gamma(gamma, mu, n);
    case Kind::sqrt:
        break;
    }
    const double lower = f1_inverse_log ? 1.0 / std::log(static_cast<double>(n)) : f1;
    return window_sqrt(lower, f2, mu, n);
}

ExperimentConfig ExperimentConfig::parse(std::istream &in) {
    ExperimentConfig c;
    bool windows_given = false;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw parse_error(line_no, "expected key = value");
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        try {
            if (key == "source") {
                if (value == "irg")
                    c.source = Source::irg;
                else if (value == "edgelist")
                    c.source = Source::edge_list;
                else
                    throw input_error("source must be irg or edgelist");
            } else if (key == "n") {
                c.model.n = parse_number<std::size_t>(value, "n");
            } else if (key == "tau") {
                c.model.tau = parse_real(value, "tau");
            } else if (key == "w_min") {
                c.model.w_min = parse_real(value, "w_min");
            } else if (key == "graph") {
                c.graph_path = std::string(value);
            } else if (key == "pattern") {
                c.pattern = std::string(value);
            } else if (key == "k") {
                c.ks = parse_ks(value);
            } else if (key == "alg") {
                c.algorithm = parse_number<int>(value, "alg");
            } else if (key == "windows" || key == "window") {
                if (!windows_given)
                    c.windows.clear();
                windows_given = true;
                for (std::string_view item : split(value, ';'))
                    if (!item.empty())
                        c.windows.push_back(WindowSpec::parse(item));
            } else if (key == "gamma") {
                // Shorthand for a sweep of gamma windows.
                if (!windows_given)
                    c.windows.clear();
                windows_given = true;
                for (std::string_view item : split(value, ','))
                    if (!item.empty())
                        c.windows.push_back(WindowSpec::parse("gamma:" + std::string(item)));
            } else if (key == "s" || key == "budget") {
                c.budget = parse_number<std::uint64_t>(value, "s");
            } else if (key == "reps") {
                c.reps = parse_number<std::size_t>(value, "reps");
            } else if (key == "seed") {
                c.seed = parse_number<std::uint64_t>(value, "seed");
            } else if (key == "threads") {
                c.threads = parse_number<unsigned>(value, "threads");
            } else if (key == "csv") {
                c.csv_path = std::string(value);
            } else if (key == "log") {
                c.log_path = std::string(value);
            } else {
                throw input_error("unknown key '" + std::string(key) + "'");
            }
        } catch (const std::logic_error &e) {
            throw parse_error(line_no, e.what());
        }
    }
    if (!windows_given)
        c.windows = default_windows();
    return c;
}

ExperimentConfig ExperimentConfig::parse_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw io_error("cannot open config '" + path + "'");
    return parse(in);
}

void ExperimentConfig::validate() const {
    if (reps < 1)
        throw parameter_error("reps must be at least 1");
    if (algorithm != 1 && algorithm != 2)
        throw parameter_error("alg must be 1 or 2");
    if (budget < 1)
        throw parameter_error("s must be at least 1");
    if (windows.empty())
        throw parameter_error("at least one window is required");
    if (source == Source::irg)
        model.validate();
    else if (graph_path.empty())
        throw parameter_error("edgelist source needs a graph path");
    (void)patterns();
}

std::vector<Pattern> ExperimentConfig::patterns() const {
    std::vector<Pattern> out;
    if (is_family(pattern)) {
        if (ks.empty())
            throw parameter_error("pattern family needs at least one k");
        for (int k : ks)
            out.push_back(Pattern::parse(pattern + std::to_string(k)));
    } else {
        out.push_back(Pattern::parse(pattern));
    }
    return out;
}

ExperimentResult run_experiment(const ExperimentConfig &config) {
    config.validate();
    const std::vector<Pattern> patterns = config.patterns();
    const std::size_t cells = config.windows.size() * patterns.size();

    LabeledGraph data;
    if (config.source == ExperimentConfig::Source::edge_list)
        data = read_edge_list_file(config.graph_path);

    ExperimentResult result;
    result.seed = config.seed;
    result.records.resize(config.reps * cells);

    auto run_rep = [&](std::size_t rep) {
        const std::uint64_t rep_seed = derive_seed(config.seed, rep);
        Graph generated;
        double mu;
        std::size_t n;
        if (config.source == ExperimentConfig::Source::irg) {
            Rng rng = Rng::stream(rep_seed, 0);
            const auto weights = sample_weights(config.model, rng);
            mu = config.model.mean();
            n = config.model.n;
            generated = generate_fast(weights, mu, rng);
        } else {
            n = data.graph.num_vertices();
            mu = n ? 2.0 * static_cast<double>(data.graph.num_edges()) / static_cast<double>(n) : 0.0;
        }
        const Graph &g = config.source == ExperimentConfig::Source::irg ? generated : data.graph;

        std::size_t cell = 0;
        for (const WindowSpec &spec : config.windows)
            for (const Pattern &h : patterns) {
                Rng rng = Rng::stream(rep_seed, 1 + cell);
                const auto start = std::chrono::steady_clock::now();
                const DegreeWindow window = spec.resolve(mu, n);
                const SearchOutcome outcome = config.algorithm == 1
                                                  ? random_partition_search(g, h, window, rng)
                                                  : neighborhood_search(g, h, window, config.budget, rng);
                const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

                ReplicationRecord &rec = result.records[rep * cells + cell];
                rec.rep = rep;
                rec.k = h.size();
                rec.setting = spec.label();
                rec.found = outcome.found();
                rec.checks = outcome.checks;
                rec.selected = outcome.selected;
                rec.seconds = elapsed.count();
                ++cell;
            }
    };

    unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, config.reps));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t rep; (rep = next.fetch_add(1)) < config.reps;) {
            try {
                run_rep(rep);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next.store(config.reps);
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);

    std::size_t cell = 0;
    for (const WindowSpec &spec : config.windows)
        for (const Pattern &h : patterns) {
            ExperimentRow row;
            row.k = h.size();
            row.setting = spec.label();
            row.reps = config.reps;
            double checks = 0.0, selected = 0.0, seconds = 0.0;
            for (std::size_t rep = 0; rep < config.reps; ++rep) {
                const ReplicationRecord &rec = result.records[rep * cells + cell];
                selected += static_cast<double>(rec.selected);
                seconds += rec.seconds;
                if (rec.found) {
                    ++row.successes;
                    checks += static_cast<double>(rec.checks);
                }
            }
            const auto reps = static_cast<double>(config.reps);
            row.success_rate = static_cast<double>(row.successes) / reps;
            row.mean_checks = row.successes ? checks / static_cast<double>(row.successes)
                                            : std::numeric_limits<double>::quiet_NaN();
            row.selected_mean = selected / reps;
            row.mean_seconds = seconds / reps;
            result.rows.push_back(row);
            ++cell;
        }
    return result;
}

void emit_csv(const ExperimentResult &result, std::ostream &out) {
    out << "k,setting,success_rate,mean_checks,selected_mean,reps,seed\n";
    for (const ExperimentRow &row : result.rows)
        out << row.k << ',' << row.setting << ',' << format_real(row.success_rate) << ','
            << format_real(row.mean_checks) << ',' << format_real(row.selected_mean) << ',' << row.reps << ','
            << result.seed << '\n';
}

void emit_csv(const ExperimentResult &result, const std::string &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw io_error("cannot write '" + path + "'");
    emit_csv(result, out);
    if (!out)
        throw io_error("failed writing '" + path + "'");
}

void emit_log(const ExperimentResult &result, std::ostream &out) {
    for (const ReplicationRecord &rec : result.records) {
        nlohmann::ordered_json j;
        j["rep"] = rec.rep;
        j["k"] = rec.k;
        j["setting"] = rec.setting;
        j["found"] = rec.found;
        j["checks"] = rec.checks;
        j["selected"] = rec.selected;
        out << j.dump() << '\n';
    }
}

} // namespace motif
