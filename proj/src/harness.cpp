#include "aenergy/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <thread>

#include "aenergy/error.hpp"
#include "aenergy/graph_io.hpp"

namespace aenergy {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

Graph labeled_graph(std::size_t n, std::uint64_t mask) {
    std::vector<Edge> edges;
    std::size_t k = 0;
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u, ++k)
            if (mask >> k & 1U) edges.emplace_back(u, v);
    return make_graph(n, edges);
}

void enumerate_labeled_graphs(std::size_t n, const std::function<void(const Graph&)>& visit) {
    if (n > kMaxExhaustiveOrder) {
        throw Error(ErrorCode::CorpusTooLarge, "exhaustive enumeration is capped at n=" +
                                                   std::to_string(kMaxExhaustiveOrder) + ", got n=" + std::to_string(n));
    }
    if (n == 0) return;
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < total; ++mask) visit(labeled_graph(n, mask));
}

std::vector<Graph> labeled_graphs(std::size_t n) {
    std::vector<Graph> out;
    enumerate_labeled_graphs(n, [&](const Graph& g) { out.push_back(g); });
    return out;
}

Graph random_gnp(std::size_t n, double p, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u)
            if (rng.uniform() < p) edges.emplace_back(u, v);
    return make_graph(n, edges);
}

Graph generate_strictly_binary_tree(std::size_t internal_count, std::uint64_t seed) {
    if (internal_count < 1) throw Error(ErrorCode::InvalidFamilyParam, "strictly binary tree needs internal_count >= 1");
    SplitMix64 rng(seed);
    std::vector<Edge> edges{{0, 1}, {0, 2}};
    std::vector<Vertex> leaves{1, 2};
    Vertex next = 3;
    for (std::size_t i = 1; i < internal_count; ++i) {
        auto pick = static_cast<std::size_t>(rng.below(leaves.size()));
        Vertex parent = leaves[pick];
        edges.emplace_back(parent, next);
        edges.emplace_back(parent, next + 1);
        leaves[pick] = next;
        leaves.push_back(next + 1);
        next += 2;
    }
    return make_graph(next, edges);
}

std::vector<RandomSpec> standard_random_corpus() {
    std::vector<RandomSpec> out;
    for (std::size_t n : {8, 12, 16, 20}) {
        for (int tenths : {2, 5, 8}) {
            out.push_back({n, tenths / 10.0, 50, 1'000'000ULL * n + 1000ULL * static_cast<std::uint64_t>(tenths)});
        }
    }
    return out;
}

std::vector<Graph> build_corpus(const CorpusSpec& spec) {
    std::vector<Graph> out;
    for (std::size_t n = 1; n <= spec.exhaustive_max_n; ++n) {
        enumerate_labeled_graphs(n, [&](const Graph& g) { out.push_back(g); });
    }
    for (const auto& r : spec.random)
        for (std::size_t i = 0; i < r.count; ++i) out.push_back(random_gnp(r.n, r.p, r.seed + i));
    for (const auto& f : spec.families) out.push_back(generate_family(f));
    out.insert(out.end(), spec.graphs.begin(), spec.graphs.end());
    return out;
}

std::vector<double> default_alpha_grid() {
    std::vector<double> grid;
    for (int i = 0; i < 20; ++i) grid.push_back(i / 20.0);
    return grid;
}

std::size_t VerificationReport::violation_count() const {
    std::size_t total = 0;
    for (const auto& [id, stats] : bounds) total += stats.violations.size();
    return total;
}

bool VerificationReport::equality_ok() const {
    return std::all_of(equality_cases.begin(), equality_cases.end(), [](const EqualityCase& c) { return c.ok(); });
}

namespace {

std::vector<double> alphas_for(const Graph& g, const SweepOptions& options) {
    std::vector<double> alphas = options.alphas;
    const auto n = static_cast<double>(g.order());
    if (options.add_branch_threshold && g.order() >= 2) {
        const double threshold = n / (2.0 * (n - 1.0));
        if (threshold < 1.0) alphas.push_back(threshold);
    }
    std::sort(alphas.begin(), alphas.end());
    alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
    return alphas;
}

void record(BoundStats& stats, const Check& c, const std::string& graph6, double alpha, const SweepOptions& options) {
    ++stats.count;
    if (!c.applicable) {
        ++stats.inapplicable_reasons[c.reason];
        return;
    }
    ++stats.applicable;
    if (!stats.min_slack || c.slack < *stats.min_slack) {
        stats.min_slack = c.slack;
        stats.argmin_graph6 = graph6;
        stats.argmin_alpha = alpha;
    }
    if (c.violated()) stats.violations.push_back({graph6, alpha, c.slack});
    if (c.slack >= -kSlackTolerance && c.slack < options.near_equality_threshold) {
        ++stats.near_equality_count;
        if (stats.near_equality.size() < options.near_equality_cap) stats.near_equality.push_back({graph6, alpha, c.slack});
    }
}

// `later` covers graphs that come after those in `into`; ties keep the earlier argmin.
void merge_into(VerificationReport& into, const VerificationReport& later, const SweepOptions& options) {
    into.graphs += later.graphs;
    into.instances += later.instances;
    for (const auto& [id, s] : later.bounds) {
        auto& t = into.bounds[id];
        t.count += s.count;
        t.applicable += s.applicable;
        if (s.min_slack && (!t.min_slack || *s.min_slack < *t.min_slack)) {
            t.min_slack = s.min_slack;
            t.argmin_graph6 = s.argmin_graph6;
            t.argmin_alpha = s.argmin_alpha;
        }
        t.violations.insert(t.violations.end(), s.violations.begin(), s.violations.end());
        t.near_equality_count += s.near_equality_count;
        for (const auto& ne : s.near_equality) {
            if (t.near_equality.size() >= options.near_equality_cap) break;
            t.near_equality.push_back(ne);
        }
        for (const auto& [reason, count] : s.inapplicable_reasons) t.inapplicable_reasons[reason] += count;
    }
}

VerificationReport sweep_range(std::span<const Graph> corpus, const SweepOptions& options) {
    VerificationReport report;
    for (BoundId id : options.bounds) report.bounds[id];
    for (const auto& g : corpus) {
        ++report.graphs;
        const std::string graph6 = write_graph6(g);
        GraphProfile profile(g);
        for (double alpha : alphas_for(g, options)) {
            ++report.instances;
            EnergyInstance x(profile, alpha);
            for (BoundId id : options.bounds) record(report.bounds[id], evaluate(x, id), graph6, alpha, options);
        }
    }
    return report;
}

}  // namespace

VerificationReport sweep(std::span<const Graph> corpus, const SweepOptions& options) {
    for (double a : options.alphas) check_alpha_below_one(a);
    const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, corpus.size()));

    VerificationReport report;
    for (BoundId id : options.bounds) report.bounds[id];
    report.alphas = options.alphas;
    if (jobs <= 1) {
        merge_into(report, sweep_range(corpus, options), options);
    } else {
        // Contiguous chunks merged in corpus order give the single-threaded result.
        std::vector<VerificationReport> parts(jobs);
        std::vector<std::thread> workers;
        const std::size_t chunk = (corpus.size() + jobs - 1) / jobs;
        for (std::size_t j = 0; j < jobs; ++j) {
            const std::size_t begin = std::min(corpus.size(), j * chunk);
            const std::size_t end = std::min(corpus.size(), begin + chunk);
            workers.emplace_back([&, j, begin, end] { parts[j] = sweep_range(corpus.subspan(begin, end - begin), options); });
        }
        for (auto& w : workers) w.join();
        for (const auto& part : parts) merge_into(report, part, options);
    }
    report.equality_cases = equality_suite();
    return report;
}

VerificationReport sweep(const CorpusSpec& corpus, const SweepOptions& options) {
    auto graphs = build_corpus(corpus);
    return sweep(std::span<const Graph>(graphs), options);
}

std::vector<EqualityCase> equality_suite() {
    std::vector<EqualityCase> out;
    auto add = [&](const std::string& family, double alpha, BoundId id) {
        Graph g = generate_family(parse_family_spec(family));
        GraphProfile profile(g);
        EnergyInstance x(profile, alpha);
        auto c = evaluate(x, id);
        if (!c.applicable) throw std::logic_error(family + " is not applicable for " + std::string(to_string(id)));
        out.push_back({family, write_graph6(g), alpha, id, c.gap, 1e-9 * (1.0 + std::abs(c.target))});
    };
    const auto grid = default_alpha_grid();
    const std::vector<double> lower_alphas{0.0, 0.3, 0.5, 0.7};

    for (double a : grid) add("complete:2", a, BoundId::UB_T31);
    for (int n = 4; n <= 10; ++n)
        for (double a : {0.6, 0.75, 0.9}) add("star:" + std::to_string(n), a, BoundId::UB_T35);
    for (int n : {4, 6, 8}) {
        const std::string kn = "complete:" + std::to_string(n);
        const std::string kbal = "bipartite:" + std::to_string(n / 2) + "," + std::to_string(n / 2);
        for (double a : lower_alphas) {
            add(kn, a, BoundId::LB_T41);
            add(kbal, a, BoundId::LB_T41);
        }
        for (double a : {0.0, 0.3, 0.5, 0.7, 0.9}) {
            const auto id = a <= 0.5 ? BoundId::LB_T45a : BoundId::LB_T45b;
            add(kn, a, id);
            add(kbal, a, id);
            add(kbal, a, BoundId::LB_C44);
            add(kbal, a, BoundId::SPREAD_L28);
        }
        add(kbal, 0.5, BoundId::REL_T51);
    }
    for (int n = 4; n <= 10; ++n) add("star:" + std::to_string(n), 0.5, BoundId::LB_T45a);
    for (int n = 3; n <= 12; ++n) {
        const std::string cn = "cycle:" + std::to_string(n);
        add(cn, 0.5, BoundId::REL_T52);
        for (double a : grid) add(cn, a, BoundId::REL_T55);
    }
    return out;
}

// ---- Published tables ----

const std::array<PublishedRow, 5> kTable1Published{{
    {"S_4", "star:4", 0.50, {"2.25", "2.24"}},
    {"F_3", "friendship:3", 0.60, {"4.89", "2.20"}},
    {"C_9", "cycle:9", 0.70, {"2.78", "2.71"}},
    {"B_4", "book:4", 0.80, {"7.00", "6.43"}},
    {"P_10", "path:10", 0.90, {"2.68", "0.76"}},
}};

const std::array<PublishedRow, 2> kRemark32Published{{
    {"S_20", "star:20", 0.60, {"43.32", "48.35"}},
    {"S_{12,21}", "doublestar:12,21", 0.70, {"92.48", "98.56"}},
}};

std::string round2(double value) {
    // std::round rounds halfway cases away from zero.
    const double rounded = std::round(value * 100.0) / 100.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", rounded == 0.0 ? 0.0 : rounded);
    return buf;
}

bool ReproductionTable::ok() const { return mismatches().empty(); }

std::vector<std::string> ReproductionTable::mismatches() const {
    std::vector<std::string> out;
    for (const auto& row : rows) {
        for (const auto& cell : row.cells) {
            if (!cell.match()) {
                out.push_back(name + " row " + row.label + " column " + cell.column + ": computed " + cell.shown +
                              ", published " + cell.expected);
            }
        }
        if (!row.ordering_ok) out.push_back(name + " row " + row.label + ": published ordering does not hold");
    }
    return out;
}

namespace {

ReproductionTable reproduce(std::string name, std::array<std::string, 2> columns, std::span<const PublishedRow> published,
                            BoundResult (*first)(const EnergyInstance&), BoundResult (*second)(const EnergyInstance&),
                            bool (*ordering)(double, double)) {
    ReproductionTable table{std::move(name), columns, {}};
    for (const auto& p : published) {
        GraphProfile profile(generate_family(parse_family_spec(p.family)));
        EnergyInstance x(profile, p.alpha);
        const std::array<BoundResult, 2> results{first(x), second(x)};
        ReproducedRow row;
        row.label = p.label;
        row.alpha = p.alpha;
        for (std::size_t c = 0; c < 2; ++c) {
            row.cells[c].column = columns[c];
            row.cells[c].computed = results[c].value;
            row.cells[c].shown = results[c].applicable ? round2(results[c].value) : "n/a";
            row.cells[c].expected = p.values[c];
        }
        row.ordering_ok = results[0].applicable && results[1].applicable && ordering(results[0].value, results[1].value);
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace

ReproductionTable reproduce_table1(std::span<const PublishedRow> published) {
    return reproduce("table1", {"LB_T41", "LB_L42"}, published, &lb_spread, &lb_zhou,
                     [](double ours, double theirs) { return ours >= theirs; });
}

ReproductionTable reproduce_remark32(std::span<const PublishedRow> published) {
    return reproduce("remark32", {"UB_T31", "UB_EQ3"}, published, &ub_edge_decomposition, &ub_pirzada,
                     [](double ours, double theirs) { return ours < theirs; });
}

void require_match(const ReproductionTable& table) {
    auto diffs = table.mismatches();
    if (diffs.empty()) return;
    std::string what;
    for (const auto& d : diffs) what += (what.empty() ? "" : "; ") + d;
    throw Error(ErrorCode::ReproductionFailure, what);
}

}  // namespace aenergy
