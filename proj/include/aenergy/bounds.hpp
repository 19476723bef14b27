#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "aenergy/graph.hpp"
#include "aenergy/spectra.hpp"

namespace aenergy {

// Stable identifiers used in every output format.
enum class BoundId {
    UB_T31,      // edge-decomposition upper bound
    UB_EQ3,      // degree-variance upper bound (comparison baseline)
    UB_T35,      // star-dominated upper bound, connected, 1/2 < a < 1
    LB_T41,      // spread lower bound
    LB_L42,      // two-branch deviation lower bound, 1/2 <= a < 1
    LB_C44,      // Zagreb square-root lower bound
    LB_T45a,     // connected, 0 <= a <= 1/2
    LB_T45b,     // connected, 1/2 < a < 1
    REL_T51,     // E_Aa + a E_L >= 2 E(G) - 4 a m zeta / n
    REL_T52,     // line-graph relation with isolated vertices
    REL_T55,     // line-graph relation with pendant vertices
    SPREAD_L28,  // spread upper bound
};

inline constexpr std::array<BoundId, 12> kAllBoundIds{
    BoundId::UB_T31,  BoundId::UB_EQ3,  BoundId::UB_T35,  BoundId::LB_T41,
    BoundId::LB_L42,  BoundId::LB_C44,  BoundId::LB_T45a, BoundId::LB_T45b,
    BoundId::REL_T51, BoundId::REL_T52, BoundId::REL_T55, BoundId::SPREAD_L28,
};

std::string_view to_string(BoundId id);
std::optional<BoundId> bound_id_from_string(std::string_view name);
bool is_relation(BoundId id);

// A bound or relation holds when its slack is at least -kSlackTolerance.
inline constexpr double kSlackTolerance = 1e-7;
// xi_n below this counts as zero in LB_L42.
inline constexpr double kZeroDeviation = 1e-9;
// Spreads at or below this make LB_T41 inapplicable.
inline constexpr double kZeroSpread = 1e-12;

enum class Side { Upper, Lower };

struct BoundResult {
    BoundId id = BoundId::UB_T31;
    Side side = Side::Upper;
    bool applicable = false;
    std::string reason;  // set when not applicable
    std::string branch;
    double value = 0.0;
    double energy = 0.0;  // the spread for SPREAD_L28
    double slack = 0.0;   // value - energy (upper) or energy - value (lower)
};

enum class Sense { LhsAtMostRhs, LhsAtLeastRhs };

struct RelationResult {
    BoundId id = BoundId::REL_T52;
    Sense sense = Sense::LhsAtMostRhs;
    bool applicable = false;
    std::string reason;
    double lhs = 0.0;
    double rhs = 0.0;
    bool satisfied = false;
    double gap = 0.0;  // |lhs - rhs|

    // Signed margin in the direction of the relation.
    double slack() const { return sense == Sense::LhsAtMostRhs ? rhs - lhs : lhs - rhs; }
};

/// Alpha-independent data for one graph. The spectral pieces (adjacency
/// energy, Laplacian energy, line-graph energy, adjacency rank) are computed
/// on first use and cached, so a profile must not be shared between threads.
class GraphProfile {
public:
    explicit GraphProfile(Graph g);

    const Graph& graph() const noexcept { return graph_; }
    const DegreeSummary& degrees() const noexcept { return degrees_; }
    bool connected() const noexcept { return connected_; }
    std::size_t n() const noexcept { return graph_.order(); }
    std::size_t m() const noexcept { return graph_.size(); }
    double zagreb1() const noexcept { return static_cast<double>(degrees_.zagreb1); }
    double max_degree() const noexcept { return static_cast<double>(degrees_.max_degree); }

    double adjacency_energy() const;
    double laplacian_energy() const;
    double line_graph_energy() const;
    std::size_t rank() const;

private:
    Graph graph_;
    DegreeSummary degrees_;
    bool connected_ = false;
    mutable std::optional<double> adjacency_energy_;
    mutable std::optional<double> laplacian_energy_;
    mutable std::optional<double> line_graph_energy_;
    mutable std::optional<std::size_t> rank_;
};

/// One (graph, alpha) evaluation point: the A_alpha spectrum and energy.
class EnergyInstance {
public:
    // Throws InvalidAlpha unless 0 <= alpha <= 1.
    EnergyInstance(const GraphProfile& profile, double alpha);

    const GraphProfile& profile() const noexcept { return *profile_; }
    double alpha() const noexcept { return alpha_; }
    const Spectrum& spectrum() const noexcept { return spectrum_; }
    double energy() const noexcept { return energy_; }
    double shift() const noexcept { return shift_; }
    double spread() const { return spectrum_.size() ? spectrum_.largest() - spectrum_.smallest() : 0.0; }
    // a^2 Z1 + 2(1-a)^2 m - 4 a^2 m^2 / n, shared by several bounds.
    double second_moment_excess() const;

private:
    const GraphProfile* profile_;
    double alpha_;
    Spectrum spectrum_;
    double shift_ = 0.0;
    double energy_ = 0.0;
};

BoundResult ub_edge_decomposition(const EnergyInstance& x);
BoundResult ub_pirzada(const EnergyInstance& x);
BoundResult ub_star_dominated(const EnergyInstance& x);
BoundResult lb_spread(const EnergyInstance& x);
BoundResult lb_zhou(const EnergyInstance& x);
BoundResult lb_zagreb_sqrt(const EnergyInstance& x);
// Reports LB_T45a for alpha <= 1/2 and LB_T45b above.
BoundResult lb_degree_branch(const EnergyInstance& x);
BoundResult spread_bound(const EnergyInstance& x);
RelationResult rel_laplacian(const EnergyInstance& x);
RelationResult rel_line_graph(const EnergyInstance& x);
RelationResult rel_line_graph_pendant(const EnergyInstance& x);

// Convenience overloads that build the profile internally.
BoundResult ub_edge_decomposition(const Graph& g, double alpha);
BoundResult ub_pirzada(const Graph& g, double alpha);
BoundResult ub_star_dominated(const Graph& g, double alpha);
BoundResult lb_spread(const Graph& g, double alpha);
BoundResult lb_zhou(const Graph& g, double alpha);
BoundResult lb_zagreb_sqrt(const Graph& g, double alpha);
BoundResult lb_degree_branch(const Graph& g, double alpha);
RelationResult rel_laplacian(const Graph& g, double alpha);
RelationResult rel_line_graph(const Graph& g, double alpha);
RelationResult rel_line_graph_pendant(const Graph& g, double alpha);

// Upper bound on the A_alpha spread from n, m and Z1.
double ub_spread_invariant(const Graph& g, double alpha);

// Upper bound on S^(k) via a star plus single edges. Requires 1/2 <= a < 1
// (throws Inapplicable otherwise) and 1 <= k <= n (throws InvalidK).
double ub_partial_sum_star(const Graph& g, double alpha, std::size_t k);

// Uniform view of any bound or relation for sweeps and reports.
struct Check {
    BoundId id = BoundId::UB_T31;
    bool applicable = false;
    std::string reason;
    std::string branch;
    double value = 0.0;   // bound value, or rhs for relations
    double target = 0.0;  // energy/spread, or lhs for relations
    double slack = 0.0;
    double gap = 0.0;     // |value - target|

    bool violated() const { return applicable && slack < -kSlackTolerance; }
};

Check evaluate(const EnergyInstance& x, BoundId id);
std::array<Check, kAllBoundIds.size()> evaluate_all(const EnergyInstance& x);

// |value - energy| (or the relation gap). Throws Inapplicable when the bound
// does not apply to the instance.
double equality_gap(const EnergyInstance& x, BoundId id);
double equality_gap(const Graph& g, double alpha, BoundId id);

}  // namespace aenergy
