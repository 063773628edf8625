#include "motif/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>

#include "motif/error.hpp"

namespace motif {

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

LabeledGraph parse_edge_text(std::string_view text) {
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

        const char *p = line.data();
        const char *end = p + line.size();
        while (p != end && is_blank(*p))
            ++p;
        if (p == end || *p == '#' || *p == '%')
            continue;

        std::int64_t ids[2];
        for (std::int64_t &id : ids) {
            while (p != end && is_blank(*p))
                ++p;
            auto [next, ec] = std::from_chars(p, end, id);
            if (ec != std::errc{} || (next != end && !is_blank(*next)))
                throw parse_error(line_no, "expected two integer vertex labels, got '" + std::string(line) + "'");
            p = next;
        }
        pairs.emplace_back(ids[0], ids[1]);
    }

    LabeledGraph out;
    out.labels.reserve(pairs.size() * 2);
    for (auto [a, b] : pairs) {
        out.labels.push_back(a);
        out.labels.push_back(b);
    }
    std::sort(out.labels.begin(), out.labels.end());
    out.labels.erase(std::unique(out.labels.begin(), out.labels.end()), out.labels.end());
    if (out.labels.size() > std::size_t{0xffffffffu})
        throw input_error("edge list has more than 2^32 distinct labels");

    auto id_of = [&](std::int64_t label) {
        return static_cast<vertex_t>(std::lower_bound(out.labels.begin(), out.labels.end(), label) - out.labels.begin());
    };
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [a, b] : pairs)
        edges.push_back({id_of(a), id_of(b)});
    pairs.clear();
    pairs.shrink_to_fit();

    out.graph = Graph::from_edges(out.labels.size(), edges);
    out.labels.shrink_to_fit();
    return out;
}

} // namespace

LabeledGraph read_edge_list(std::istream &in) {
    std::string text(std::istreambuf_iterator<char>(in), {});
    return parse_edge_text(text);
}

LabeledGraph read_edge_list_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw io_error("cannot open edge list '" + path + "'");
    std::string text;
    in.seekg(0, std::ios::end);
    if (const auto size = in.tellg(); size > 0)
        text.resize(static_cast<std::size_t>(size));
    in.seekg(0, std::ios::beg);
    in.read(text.data(), static_cast<std::streamsize>(text.size()));
    if (!in)
        throw io_error("failed reading edge list '" + path + "'");
    return parse_edge_text(text);
}

TauFit fit_tau(std::span<const std::size_t> degrees, std::optional<std::size_t> d_min) {
    if (d_min && *d_min < 1)
        throw fit_error("d_min must be at least 1");

    // Histogram of positive degrees, ascending.
    std::vector<std::size_t> sorted;
    sorted.reserve(degrees.size());
    for (std::size_t d : degrees)
        if (d > 0)
            sorted.push_back(d);
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> value;
    std::vector<double> count;
    for (std::size_t d : sorted) {
        if (value.empty() || value.back() != static_cast<double>(d)) {
            value.push_back(static_cast<double>(d));
            count.push_back(0.0);
        }
        count.back() += 1.0;
    }

    // Suffix sums of counts and count * ln(value).
    const std::size_t u = value.size();
    std::vector<double> tail_count(u + 1, 0.0), tail_log(u + 1, 0.0);
    for (std::size_t i = u; i-- > 0;) {
        tail_count[i] = tail_count[i + 1] + count[i];
        tail_log[i] = tail_log[i + 1] + count[i] * std::log(value[i]);
    }

    auto fit_at = [&](std::size_t i) {
        const double dm = value[i];
        const double n_tail = tail_count[i];
        const double log_sum = tail_log[i] - n_tail * std::log(dm - 0.5);
        TauFit fit;
        fit.tau = 1.0 + n_tail / log_sum;
        fit.d_min = static_cast<std::size_t>(dm);
        fit.tail_size = static_cast<std::size_t>(n_tail);
        const double shape = 1.0 - fit.tau;
        double ks = 0.0;
        for (std::size_t j = i; j < u; ++j) {
            const double at_least = tail_count[j] / n_tail;
            const double above = tail_count[j + 1] / n_tail;
            ks = std::max(ks, std::abs(at_least - std::pow((value[j] - 0.5) / (dm - 0.5), shape)));
            ks = std::max(ks, std::abs(above - std::pow((value[j] + 0.5) / (dm - 0.5), shape)));
        }
        fit.ks_distance = ks;
        return fit;
    };

    if (d_min) {
        const auto i = static_cast<std::size_t>(
            std::lower_bound(value.begin(), value.end(), static_cast<double>(*d_min)) - value.begin());
        if (i == u || tail_count[i] < static_cast<double>(min_fit_tail))
            throw fit_error("fewer than " + std::to_string(min_fit_tail) + " degrees >= d_min = " +
                            std::to_string(*d_min));
        if (i + 1 == u)
            throw fit_error("degree tail is constant");
        TauFit fit = fit_at(i);
        fit.d_min = *d_min;
        if (*d_min != static_cast<std::size_t>(value[i])) {
            // The requested cutoff need not be an observed degree.
            const double n_tail = tail_count[i];
            fit.tau = 1.0 + n_tail / (tail_log[i] - n_tail * std::log(static_cast<double>(*d_min) - 0.5));
        }
        return fit;
    }

    std::optional<TauFit> best;
    for (std::size_t i = 0; i + 1 < u && tail_count[i] >= static_cast<double>(min_fit_tail); ++i) {
        TauFit fit = fit_at(i);
        if (!best || fit.ks_distance < best->ks_distance)
            best = fit;
    }
    if (!best)
        throw fit_error("no cutoff leaves a non-constant tail of " + std::to_string(min_fit_tail) + " degrees");
    return *best;
}

DatasetStats dataset_stats(const Graph &g, std::optional<std::size_t> d_min) {
    DatasetStats stats;
    stats.n = g.num_vertices();
    stats.m = g.num_edges();
    stats.mean_degree = stats.n ? 2.0 * static_cast<double>(stats.m) / static_cast<double>(stats.n) : 0.0;
    const auto degrees = g.degrees();
    stats.fit = fit_tau(degrees, d_min);
    return stats;
}

void write_edge_list(std::ostream &out, const Graph &g) {
    out << "# n=" << g.num_vertices() << " m=" << g.num_edges() << '\n';
    std::string buffer;
    buffer.reserve(1 << 16);
    char digits[24];
    auto put = [&](vertex_t x, char tail) {
        auto [end, ec] = std::to_chars(digits, digits + sizeof digits, x);
        buffer.append(digits, end);
        buffer.push_back(tail);
    };
    for (vertex_t u = 0; u < g.num_vertices(); ++u)
        for (vertex_t v : g.neighbors(u)) {
            if (v <= u)
                continue;
            put(u, ' ');
            put(v, '\n');
            if (buffer.size() > (1 << 16) - 32) {
                out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
                buffer.clear();
            }
        }
    out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
}

} // namespace motif
