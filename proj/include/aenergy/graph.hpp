#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace aenergy {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph. Edges are stored normalized (u < v), unique and
/// sorted lexicographically; the position of an edge in edges() is its label
/// in the line graph.
class Graph {
public:
    Graph() = default;

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    bool has_edge(Vertex u, Vertex v) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend Graph make_graph(std::size_t n, std::span<const Edge> edges);
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
};

// Throws Error{InvalidEdge} on self-loops or out-of-range endpoints.
Graph make_graph(std::size_t n, std::span<const Edge> edges);
inline Graph make_graph(std::size_t n, std::initializer_list<Edge> edges) {
    return make_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

std::vector<std::vector<Vertex>> adjacency_lists(const Graph& g);

struct DegreeSummary {
    std::vector<std::size_t> degrees;
    std::size_t max_degree = 0;
    std::size_t min_degree = 0;
    std::uint64_t zagreb1 = 0;
    std::size_t isolated_count = 0;
    std::size_t pendant_count = 0;
};

DegreeSummary degree_summary(const Graph& g);

struct Connectivity {
    bool connected = false;
    // Empty when the graph is disconnected.
    std::optional<std::size_t> diameter;
};

Connectivity connectivity(const Graph& g);

// Exact rank of the 0/1 adjacency matrix over the rationals.
std::size_t adjacency_rank(const Graph& g);

// Vertex i of the result is edges()[i] of g.
Graph line_graph(const Graph& g);

enum class Family {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Star,
    DoubleStar,
    Wheel,
    Ladder,
    Book,
    Friendship,
    Comb,
};

struct FamilySpec {
    Family family = Family::Path;
    std::vector<std::int64_t> params;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

std::size_t family_arity(Family family);
std::string family_name(Family family);
std::optional<Family> family_from_name(std::string_view name);

// Checks arity and per-family constraints; throws Error{InvalidFamilyParam}.
void validate(const FamilySpec& spec);

/// Builds the named graph with a fixed labeling:
///  - path/cycle: 0-1-...-(k-1) (cycle closes k-1 to 0)
///  - complete_bipartite(a,b): parts {0..a-1}, {a..a+b-1}
///  - star(a) = K_{1,a-1}: hub 0
///  - double_star(a,b): centers 0 and 1, leaves 2..a+1 on 0, a+2..a+b+1 on 1
///  - wheel(k): hub 0, rim cycle 1..k-1
///  - ladder(k): rails 0..k-1 and k..2k-1, rungs (i, i+k)
///  - book(k): spine {0,1}; page i uses 2+2i (on 0) and 3+2i (on 1)
///  - friendship(k): hub 0; triangle i is {0, 2i+1, 2i+2}
///  - comb(a,b): path 0..a-1, pendant a+j on path vertex j for j < b
Graph generate_family(const FamilySpec& spec);

}  // namespace aenergy
