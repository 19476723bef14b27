#include "aenergy/graph.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "aenergy/error.hpp"

namespace aenergy {

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

Graph make_graph(std::size_t n, std::span<const Edge> edges) {
    Graph g;
    g.n_ = n;
    g.edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) {
            throw Error(ErrorCode::InvalidEdge, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                                    ") out of range for n=" + std::to_string(n));
        }
        if (u == v) throw Error(ErrorCode::InvalidEdge, "self-loop at vertex " + std::to_string(u));
        g.edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
    return g;
}

std::vector<std::vector<Vertex>> adjacency_lists(const Graph& g) {
    std::vector<std::vector<Vertex>> adj(g.order());
    for (auto [u, v] : g.edges()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

DegreeSummary degree_summary(const Graph& g) {
    DegreeSummary s;
    s.degrees.assign(g.order(), 0);
    for (auto [u, v] : g.edges()) {
        ++s.degrees[u];
        ++s.degrees[v];
    }
    if (!s.degrees.empty()) {
        auto [lo, hi] = std::minmax_element(s.degrees.begin(), s.degrees.end());
        s.min_degree = *lo;
        s.max_degree = *hi;
    }
    std::size_t total = 0;
    for (std::size_t d : s.degrees) {
        total += d;
        s.zagreb1 += static_cast<std::uint64_t>(d) * d;
        if (d == 0) ++s.isolated_count;
        if (d == 1) ++s.pendant_count;
    }
    if (total != 2 * g.size()) throw std::logic_error("degree sum does not match edge count");
    return s;
}

namespace {

std::vector<std::size_t> bfs_distances(const std::vector<std::vector<Vertex>>& adj, Vertex source) {
    constexpr auto unreached = static_cast<std::size_t>(-1);
    std::vector<std::size_t> dist(adj.size(), unreached);
    std::queue<Vertex> frontier;
    dist[source] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
        Vertex x = frontier.front();
        frontier.pop();
        for (Vertex y : adj[x]) {
            if (dist[y] == unreached) {
                dist[y] = dist[x] + 1;
                frontier.push(y);
            }
        }
    }
    return dist;
}

}  // namespace

Connectivity connectivity(const Graph& g) {
    Connectivity c;
    if (g.order() == 0) return c;
    auto adj = adjacency_lists(g);
    std::size_t diameter = 0;
    for (Vertex s = 0; s < g.order(); ++s) {
        auto dist = bfs_distances(adj, s);
        for (std::size_t d : dist) {
            if (d == static_cast<std::size_t>(-1)) return c;
            diameter = std::max(diameter, d);
        }
    }
    c.connected = true;
    c.diameter = diameter;
    return c;
}

std::size_t adjacency_rank(const Graph& g) {
    using boost::multiprecision::cpp_int;
    const std::size_t n = g.order();
    std::vector<std::vector<cpp_int>> a(n, std::vector<cpp_int>(n, 0));
    for (auto [u, v] : g.edges()) {
        a[u][v] = 1;
        a[v][u] = 1;
    }
    // Bareiss elimination with column skipping: every division below is exact.
    cpp_int previous = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t pivot = rank;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t i = rank + 1; i < n; ++i) {
            for (std::size_t j = col + 1; j < n; ++j) {
                a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / previous;
            }
            a[i][col] = 0;
        }
        previous = a[rank][col];
        ++rank;
    }
    return rank;
}

Graph line_graph(const Graph& g) {
    const auto& edges = g.edges();
    // Edges incident to each vertex, in edge-label order.
    std::vector<std::vector<Vertex>> incident(g.order());
    for (Vertex i = 0; i < edges.size(); ++i) {
        incident[edges[i].first].push_back(i);
        incident[edges[i].second].push_back(i);
    }
    std::vector<Edge> out;
    for (const auto& around : incident) {
        for (std::size_t a = 0; a < around.size(); ++a) {
            for (std::size_t b = a + 1; b < around.size(); ++b) out.emplace_back(around[a], around[b]);
        }
    }
    // Two distinct edges of a simple graph share at most one endpoint, so no duplicates arise.
    return make_graph(edges.size(), out);
}

namespace {

struct FamilyInfo {
    Family family;
    const char* name;
    std::size_t arity;
};

constexpr std::array<FamilyInfo, 11> kFamilies{{
    {Family::Path, "path", 1},
    {Family::Cycle, "cycle", 1},
    {Family::Complete, "complete", 1},
    {Family::CompleteBipartite, "bipartite", 2},
    {Family::Star, "star", 1},
    {Family::DoubleStar, "doublestar", 2},
    {Family::Wheel, "wheel", 1},
    {Family::Ladder, "ladder", 1},
    {Family::Book, "book", 1},
    {Family::Friendship, "friendship", 1},
    {Family::Comb, "comb", 2},
}};

const FamilyInfo& info(Family f) {
    for (const auto& i : kFamilies)
        if (i.family == f) return i;
    throw std::logic_error("unregistered family");
}

[[noreturn]] void bad_param(const FamilySpec& spec, const std::string& why) {
    throw Error(ErrorCode::InvalidFamilyParam, family_name(spec.family) + ": " + why);
}

}  // namespace

std::size_t family_arity(Family family) { return info(family).arity; }
std::string family_name(Family family) { return info(family).name; }

std::optional<Family> family_from_name(std::string_view name) {
    for (const auto& i : kFamilies)
        if (name == i.name) return i.family;
    return std::nullopt;
}

void validate(const FamilySpec& spec) {
    const auto& p = spec.params;
    if (p.size() != family_arity(spec.family)) {
        bad_param(spec, "expected " + std::to_string(family_arity(spec.family)) + " parameter(s), got " +
                            std::to_string(p.size()));
    }
    auto need_at_least = [&](std::size_t idx, std::int64_t lo) {
        if (p[idx] < lo) bad_param(spec, "parameter " + std::to_string(idx + 1) + " must be >= " + std::to_string(lo));
    };
    // Keeps accidental huge inputs from allocating dense matrices the solver cannot handle.
    constexpr std::int64_t kMaxParam = 1 << 20;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] > kMaxParam) bad_param(spec, "parameter too large");
    switch (spec.family) {
        case Family::Cycle: need_at_least(0, 3); break;
        case Family::Wheel: need_at_least(0, 4); break;
        case Family::CompleteBipartite:
            need_at_least(0, 1);
            need_at_least(1, 1);
            break;
        case Family::DoubleStar:
            need_at_least(0, 0);
            need_at_least(1, 0);
            break;
        case Family::Comb:
            need_at_least(0, 1);
            need_at_least(1, 0);
            if (p[1] > p[0]) bad_param(spec, "comb requires b <= a");
            break;
        default: need_at_least(0, 1); break;
    }
}

Graph generate_family(const FamilySpec& spec) {
    validate(spec);
    std::vector<Edge> e;
    auto u = [](std::int64_t x) { return static_cast<Vertex>(x); };
    const auto& p = spec.params;
    std::size_t n = 0;
    switch (spec.family) {
        case Family::Path:
            n = u(p[0]);
            for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
            break;
        case Family::Cycle:
            n = u(p[0]);
            for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
            break;
        case Family::Complete:
            n = u(p[0]);
            for (Vertex i = 0; i < n; ++i)
                for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
            break;
        case Family::CompleteBipartite: {
            Vertex a = u(p[0]), b = u(p[1]);
            n = a + b;
            for (Vertex i = 0; i < a; ++i)
                for (Vertex j = 0; j < b; ++j) e.emplace_back(i, a + j);
            break;
        }
        case Family::Star:
            n = u(p[0]);
            for (Vertex i = 1; i < n; ++i) e.emplace_back(0, i);
            break;
        case Family::DoubleStar: {
            Vertex a = u(p[0]), b = u(p[1]);
            n = a + b + 2;
            e.emplace_back(0, 1);
            for (Vertex i = 0; i < a; ++i) e.emplace_back(0, 2 + i);
            for (Vertex i = 0; i < b; ++i) e.emplace_back(1, 2 + a + i);
            break;
        }
        case Family::Wheel: {
            n = u(p[0]);
            Vertex rim = static_cast<Vertex>(n - 1);
            for (Vertex i = 0; i < rim; ++i) {
                e.emplace_back(0, 1 + i);
                e.emplace_back(1 + i, 1 + (i + 1) % rim);
            }
            break;
        }
        case Family::Ladder: {
            Vertex k = u(p[0]);
            n = 2 * static_cast<std::size_t>(k);
            for (Vertex i = 0; i < k; ++i) {
                e.emplace_back(i, i + k);
                if (i + 1 < k) {
                    e.emplace_back(i, i + 1);
                    e.emplace_back(i + k, i + k + 1);
                }
            }
            break;
        }
        case Family::Book: {
            Vertex k = u(p[0]);
            n = 2 * static_cast<std::size_t>(k) + 2;
            e.emplace_back(0, 1);
            for (Vertex i = 0; i < k; ++i) {
                e.emplace_back(0, 2 + 2 * i);
                e.emplace_back(2 + 2 * i, 3 + 2 * i);
                e.emplace_back(1, 3 + 2 * i);
            }
            break;
        }
        case Family::Friendship: {
            Vertex k = u(p[0]);
            n = 2 * static_cast<std::size_t>(k) + 1;
            for (Vertex i = 0; i < k; ++i) {
                e.emplace_back(0, 2 * i + 1);
                e.emplace_back(0, 2 * i + 2);
                e.emplace_back(2 * i + 1, 2 * i + 2);
            }
            break;
        }
        case Family::Comb: {
            Vertex a = u(p[0]), b = u(p[1]);
            n = a + b;
            for (Vertex i = 0; i + 1 < a; ++i) e.emplace_back(i, i + 1);
            for (Vertex j = 0; j < b; ++j) e.emplace_back(j, a + j);
            break;
        }
    }
    return make_graph(n, e);
}

}  // namespace aenergy
