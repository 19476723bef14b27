#include "aenergy/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "aenergy/error.hpp"

namespace aenergy {

namespace {

struct IdName {
    BoundId id;
    std::string_view name;
};

constexpr std::array<IdName, 12> kNames{{
    {BoundId::UB_T31, "UB_T31"},   {BoundId::UB_EQ3, "UB_EQ3"},   {BoundId::UB_T35, "UB_T35"},
    {BoundId::LB_T41, "LB_T41"},   {BoundId::LB_L42, "LB_L42"},   {BoundId::LB_C44, "LB_C44"},
    {BoundId::LB_T45a, "LB_T45a"}, {BoundId::LB_T45b, "LB_T45b"}, {BoundId::REL_T51, "REL_T51"},
    {BoundId::REL_T52, "REL_T52"}, {BoundId::REL_T55, "REL_T55"}, {BoundId::SPREAD_L28, "SPREAD_L28"},
}};

}  // namespace

std::string_view to_string(BoundId id) {
    for (const auto& e : kNames)
        if (e.id == id) return e.name;
    return "UNKNOWN";
}

std::optional<BoundId> bound_id_from_string(std::string_view name) {
    for (const auto& e : kNames)
        if (e.name == name) return e.id;
    return std::nullopt;
}

bool is_relation(BoundId id) {
    return id == BoundId::REL_T51 || id == BoundId::REL_T52 || id == BoundId::REL_T55;
}

GraphProfile::GraphProfile(Graph g)
    : graph_(std::move(g)), degrees_(degree_summary(graph_)), connected_(connectivity(graph_).connected) {}

double GraphProfile::adjacency_energy() const {
    if (!adjacency_energy_) adjacency_energy_ = energy(graph_, MatrixKind::adjacency()).energy;
    return *adjacency_energy_;
}

double GraphProfile::laplacian_energy() const {
    if (!laplacian_energy_) laplacian_energy_ = energy(graph_, MatrixKind::laplacian()).energy;
    return *laplacian_energy_;
}

double GraphProfile::line_graph_energy() const {
    if (!line_graph_energy_) line_graph_energy_ = energy(line_graph(graph_), MatrixKind::adjacency()).energy;
    return *line_graph_energy_;
}

std::size_t GraphProfile::rank() const {
    if (!rank_) rank_ = adjacency_rank(graph_);
    return *rank_;
}

EnergyInstance::EnergyInstance(const GraphProfile& profile, double alpha) : profile_(&profile), alpha_(alpha) {
    check_alpha(alpha);
    const auto kind = MatrixKind::a_alpha(alpha);
    spectrum_ = graph_spectrum(profile.graph(), kind);
    shift_ = mean_shift(profile.graph(), kind);
    energy_ = deviation_sum(spectrum_, shift_);
}

double EnergyInstance::second_moment_excess() const {
    const double a = alpha_;
    const auto n = static_cast<double>(profile_->n());
    const auto m = static_cast<double>(profile_->m());
    return a * a * profile_->zagreb1() + 2.0 * (1.0 - a) * (1.0 - a) * m - 4.0 * a * a * m * m / n;
}

namespace {

BoundResult inapplicable(BoundId id, Side side, double energy, std::string reason) {
    BoundResult r;
    r.id = id;
    r.side = side;
    r.energy = energy;
    r.reason = std::move(reason);
    return r;
}

BoundResult applicable(BoundId id, Side side, double value, double energy, std::string branch = {}) {
    BoundResult r;
    r.id = id;
    r.side = side;
    r.applicable = true;
    r.branch = std::move(branch);
    r.value = value;
    r.energy = energy;
    r.slack = side == Side::Upper ? value - energy : energy - value;
    return r;
}

RelationResult relation(BoundId id, Sense sense, double lhs, double rhs) {
    RelationResult r;
    r.id = id;
    r.sense = sense;
    r.applicable = true;
    r.lhs = lhs;
    r.rhs = rhs;
    r.gap = std::abs(lhs - rhs);
    r.satisfied = r.slack() >= -kSlackTolerance;
    return r;
}

RelationResult relation_inapplicable(BoundId id, Sense sense, std::string reason) {
    RelationResult r;
    r.id = id;
    r.sense = sense;
    r.reason = std::move(reason);
    return r;
}

constexpr const char* kAlphaOne = "alpha must be < 1";

double as_double(std::size_t v) { return static_cast<double>(v); }

// |E_Aa - (1-a) E(L(G)) - 2(1-a)(n-m)|, shared by both line-graph relations.
double line_graph_lhs(const EnergyInstance& x) {
    const auto& p = x.profile();
    const double a = x.alpha();
    return std::abs(x.energy() - (1.0 - a) * p.line_graph_energy() -
                    2.0 * (1.0 - a) * (as_double(p.n()) - as_double(p.m())));
}

}  // namespace

BoundResult ub_edge_decomposition(const EnergyInstance& x) {
    constexpr auto id = BoundId::UB_T31;
    const auto& p = x.profile();
    if (p.n() < 2) return inapplicable(id, Side::Upper, x.energy(), "requires n >= 2");
    if (x.alpha() >= 1.0) return inapplicable(id, Side::Upper, x.energy(), kAlphaOne);
    const double n = as_double(p.n()), m = as_double(p.m()), a = x.alpha();
    const double threshold = n / (2.0 * (n - 1.0));
    if (a >= threshold) return applicable(id, Side::Upper, 4.0 * a * m * (1.0 - 1.0 / n), x.energy(), "alpha>=n/(2(n-1))");
    return applicable(id, Side::Upper, 2.0 * m * (1.0 - 2.0 * a / n), x.energy(), "alpha<n/(2(n-1))");
}

BoundResult ub_pirzada(const EnergyInstance& x) {
    constexpr auto id = BoundId::UB_EQ3;
    const auto& p = x.profile();
    if (x.alpha() >= 1.0) return inapplicable(id, Side::Upper, x.energy(), kAlphaOne);
    if (p.n() == 0) return inapplicable(id, Side::Upper, x.energy(), "requires n >= 1");
    const double n = as_double(p.n()), m = as_double(p.m()), a = x.alpha();
    const double avg = 2.0 * m / n;
    double variance_sum = 0.0;
    for (auto d : p.degrees().degrees) variance_sum += (as_double(d) - avg) * (as_double(d) - avg);
    const double value = std::sqrt(2.0 * (1.0 - a) * (1.0 - a) * m * n + a * a * n * variance_sum);
    return applicable(id, Side::Upper, value, x.energy());
}

BoundResult ub_star_dominated(const EnergyInstance& x) {
    constexpr auto id = BoundId::UB_T35;
    const auto& p = x.profile();
    const double a = x.alpha();
    if (!p.connected()) return inapplicable(id, Side::Upper, x.energy(), "requires a connected graph");
    if (p.n() < 2) return inapplicable(id, Side::Upper, x.energy(), "requires n >= 2");
    if (!(a > 0.5 && a < 1.0)) return inapplicable(id, Side::Upper, x.energy(), "requires 1/2 < alpha < 1");
    const double n = as_double(p.n()), m = as_double(p.m()), delta = p.max_degree();
    const double radicand = a * a * (delta + 1.0) * (delta + 1.0) + 4.0 * (1.0 - 2.0 * a) * delta;
    if (radicand < 0.0) return inapplicable(id, Side::Upper, x.energy(), "negative radicand");
    const double value = a * (4.0 * m - 3.0 * delta - 4.0 * m / n + 1.0) + std::sqrt(radicand);
    return applicable(id, Side::Upper, value, x.energy());
}

BoundResult lb_spread(const EnergyInstance& x) {
    constexpr auto id = BoundId::LB_T41;
    if (x.alpha() >= 1.0) return inapplicable(id, Side::Lower, x.energy(), kAlphaOne);
    const double theta = x.spread();
    if (theta <= kZeroSpread) return inapplicable(id, Side::Lower, x.energy(), "zero spread");
    return applicable(id, Side::Lower, 2.0 / theta * x.second_moment_excess(), x.energy());
}

BoundResult lb_zhou(const EnergyInstance& x) {
    constexpr auto id = BoundId::LB_L42;
    const double a = x.alpha();
    if (!(a >= 0.5 && a < 1.0)) return inapplicable(id, Side::Lower, x.energy(), "requires 1/2 <= alpha < 1");
    std::vector<double> xi;
    xi.reserve(x.spectrum().size());
    for (double rho : x.spectrum().values) xi.push_back(std::abs(rho - x.shift()));
    std::sort(xi.begin(), xi.end(), std::greater<>());
    if (xi.empty()) return inapplicable(id, Side::Lower, x.energy(), "empty graph");
    const double first = xi.front(), last = xi.back();
    const double excess = x.second_moment_excess();
    if (last > kZeroDeviation) {
        const double n = as_double(x.profile().n());
        const double value = 2.0 * std::sqrt(excess * n) * std::sqrt(first * last) / (first + last);
        return applicable(id, Side::Lower, value, x.energy(), "xi_n>0");
    }
    if (first <= kZeroDeviation) return inapplicable(id, Side::Lower, x.energy(), "zero-energy graph");
    return applicable(id, Side::Lower, excess / first, x.energy(), "xi_n=0");
}

BoundResult lb_zagreb_sqrt(const EnergyInstance& x) {
    constexpr auto id = BoundId::LB_C44;
    if (x.alpha() >= 1.0) return inapplicable(id, Side::Lower, x.energy(), kAlphaOne);
    if (x.profile().n() == 0) return inapplicable(id, Side::Lower, x.energy(), "requires n >= 1");
    // The radicand is 2 * excess >= 0 mathematically; clamp rounding noise.
    return applicable(id, Side::Lower, std::sqrt(std::max(0.0, 2.0 * x.second_moment_excess())), x.energy());
}

BoundResult lb_degree_branch(const EnergyInstance& x) {
    const auto& p = x.profile();
    const double a = x.alpha();
    const auto id = a <= 0.5 ? BoundId::LB_T45a : BoundId::LB_T45b;
    if (!p.connected()) return inapplicable(id, Side::Lower, x.energy(), "requires a connected graph");
    if (p.m() == 0) return inapplicable(id, Side::Lower, x.energy(), "requires m >= 1");
    if (a >= 1.0) return inapplicable(id, Side::Lower, x.energy(), kAlphaOne);
    const double n = as_double(p.n()), m = as_double(p.m()), z1 = p.zagreb1();
    if (id == BoundId::LB_T45a) {
        const double value = 2.0 * ((1.0 - a) * z1 / m - 2.0 * a * m / n + (2.0 * a - 1.0) * p.max_degree());
        return applicable(id, Side::Lower, value, x.energy(), "alpha<=1/2");
    }
    return applicable(id, Side::Lower, 2.0 * a * z1 / m + 4.0 * (1.0 - 3.0 * a) * m / n, x.energy(), "1/2<alpha<1");
}

double ub_spread_invariant(const Graph& g, double alpha) {
    check_alpha(alpha);
    if (g.order() == 0) return 0.0;
    const auto d = degree_summary(g);
    const double n = as_double(g.order()), m = as_double(g.size()), a = alpha;
    const double radicand =
        2.0 * a * a * static_cast<double>(d.zagreb1) + 4.0 * (1.0 - a) * (1.0 - a) * m - 8.0 * a * a * m * m / n;
    return std::sqrt(std::max(0.0, radicand));
}

BoundResult spread_bound(const EnergyInstance& x) {
    constexpr auto id = BoundId::SPREAD_L28;
    if (x.profile().n() == 0) return inapplicable(id, Side::Upper, 0.0, "requires n >= 1");
    return applicable(id, Side::Upper, ub_spread_invariant(x.profile().graph(), x.alpha()), x.spread());
}

double ub_partial_sum_star(const Graph& g, double alpha, std::size_t k) {
    check_alpha(alpha);
    if (!(alpha >= 0.5 && alpha < 1.0)) throw Error(ErrorCode::Inapplicable, "requires 1/2 <= alpha < 1");
    if (k < 1 || k > g.order()) throw Error(ErrorCode::InvalidK, "k must lie in [1, n]");
    const auto d = degree_summary(g);
    const double a = alpha, m = as_double(g.size()), delta = as_double(d.max_degree), kk = as_double(k);
    const double root = std::sqrt(a * a * (delta + 1.0) * (delta + 1.0) + 4.0 * delta * (1.0 - 2.0 * a));
    const double floor_term = k == 1 ? 1.0 : 0.0;
    return 0.5 * (a * (4.0 * m - 3.0 * delta + 2.0 * kk - 1.0) + root) - floor_term * (2.0 * a - 1.0) * (m - delta);
}

RelationResult rel_laplacian(const EnergyInstance& x) {
    constexpr auto id = BoundId::REL_T51;
    constexpr auto sense = Sense::LhsAtLeastRhs;
    const auto& p = x.profile();
    const double a = x.alpha();
    if (!p.connected()) return relation_inapplicable(id, sense, "requires a connected graph");
    if (p.n() < 2) return relation_inapplicable(id, sense, "requires n >= 2");
    if (!(a >= 0.5 && a < 1.0)) return relation_inapplicable(id, sense, "requires 1/2 <= alpha < 1");
    const double n = as_double(p.n()), m = as_double(p.m());
    const double lhs = x.energy() + a * p.laplacian_energy();
    const double rhs = 2.0 * p.adjacency_energy() - 4.0 * a * m * as_double(p.rank()) / n;
    return relation(id, sense, lhs, rhs);
}

RelationResult rel_line_graph(const EnergyInstance& x) {
    constexpr auto id = BoundId::REL_T52;
    constexpr auto sense = Sense::LhsAtMostRhs;
    const auto& p = x.profile();
    const double a = x.alpha();
    if (a >= 1.0) return relation_inapplicable(id, sense, kAlphaOne);
    if (p.n() == 0) return relation_inapplicable(id, sense, "requires n >= 1");
    const double n = as_double(p.n()), m = as_double(p.m()), s = as_double(p.degrees().isolated_count);
    const double rhs = std::abs(2.0 * a - 1.0) * (2.0 * m - n + 2.0 * s) + std::abs(n - 2.0 * a * m);
    return relation(id, sense, line_graph_lhs(x), rhs);
}

RelationResult rel_line_graph_pendant(const EnergyInstance& x) {
    constexpr auto id = BoundId::REL_T55;
    constexpr auto sense = Sense::LhsAtMostRhs;
    const auto& p = x.profile();
    const double a = x.alpha();
    if (a >= 1.0) return relation_inapplicable(id, sense, kAlphaOne);
    if (p.n() == 0) return relation_inapplicable(id, sense, "requires n >= 1");
    const double n = as_double(p.n()), m = as_double(p.m());
    const double s = as_double(p.degrees().isolated_count), pend = as_double(p.degrees().pendant_count);
    const double rhs = std::abs(2.0 * a - 1.0) * (2.0 * m - 2.0 * n + 4.0 * s + 2.0 * pend) + 2.0 * a * std::abs(n - m);
    return relation(id, sense, line_graph_lhs(x), rhs);
}

namespace {

template <typename Result>
Result with_instance(const Graph& g, double alpha, Result (*fn)(const EnergyInstance&)) {
    GraphProfile profile(g);
    EnergyInstance x(profile, alpha);
    return fn(x);
}

Check to_check(const BoundResult& r) {
    Check c;
    c.id = r.id;
    c.applicable = r.applicable;
    c.reason = r.reason;
    c.branch = r.branch;
    c.value = r.value;
    c.target = r.energy;
    c.slack = r.slack;
    c.gap = std::abs(r.value - r.energy);
    return c;
}

Check to_check(const RelationResult& r) {
    Check c;
    c.id = r.id;
    c.applicable = r.applicable;
    c.reason = r.reason;
    c.value = r.rhs;
    c.target = r.lhs;
    c.slack = r.slack();
    c.gap = r.gap;
    return c;
}

}  // namespace

BoundResult ub_edge_decomposition(const Graph& g, double a) { return with_instance(g, a, &ub_edge_decomposition); }
BoundResult ub_pirzada(const Graph& g, double a) { return with_instance(g, a, &ub_pirzada); }
BoundResult ub_star_dominated(const Graph& g, double a) { return with_instance(g, a, &ub_star_dominated); }
BoundResult lb_spread(const Graph& g, double a) { return with_instance(g, a, &lb_spread); }
BoundResult lb_zhou(const Graph& g, double a) { return with_instance(g, a, &lb_zhou); }
BoundResult lb_zagreb_sqrt(const Graph& g, double a) { return with_instance(g, a, &lb_zagreb_sqrt); }
BoundResult lb_degree_branch(const Graph& g, double a) { return with_instance(g, a, &lb_degree_branch); }
RelationResult rel_laplacian(const Graph& g, double a) { return with_instance(g, a, &rel_laplacian); }
RelationResult rel_line_graph(const Graph& g, double a) { return with_instance(g, a, &rel_line_graph); }
RelationResult rel_line_graph_pendant(const Graph& g, double a) { return with_instance(g, a, &rel_line_graph_pendant); }

Check evaluate(const EnergyInstance& x, BoundId id) {
    switch (id) {
        case BoundId::UB_T31: return to_check(ub_edge_decomposition(x));
        case BoundId::UB_EQ3: return to_check(ub_pirzada(x));
        case BoundId::UB_T35: return to_check(ub_star_dominated(x));
        case BoundId::LB_T41: return to_check(lb_spread(x));
        case BoundId::LB_L42: return to_check(lb_zhou(x));
        case BoundId::LB_C44: return to_check(lb_zagreb_sqrt(x));
        case BoundId::LB_T45a:
        case BoundId::LB_T45b: {
            auto r = lb_degree_branch(x);
            if (r.id != id) {
                Check c;
                c.id = id;
                c.target = x.energy();
                c.reason = id == BoundId::LB_T45a ? "requires alpha <= 1/2" : "requires 1/2 < alpha < 1";
                return c;
            }
            return to_check(r);
        }
        case BoundId::REL_T51: return to_check(rel_laplacian(x));
        case BoundId::REL_T52: return to_check(rel_line_graph(x));
        case BoundId::REL_T55: return to_check(rel_line_graph_pendant(x));
        case BoundId::SPREAD_L28: return to_check(spread_bound(x));
    }
    throw std::logic_error("unhandled bound id");
}

std::array<Check, kAllBoundIds.size()> evaluate_all(const EnergyInstance& x) {
    std::array<Check, kAllBoundIds.size()> out;
    for (std::size_t i = 0; i < kAllBoundIds.size(); ++i) out[i] = evaluate(x, kAllBoundIds[i]);
    return out;
}

double equality_gap(const EnergyInstance& x, BoundId id) {
    auto c = evaluate(x, id);
    if (!c.applicable) throw Error(ErrorCode::Inapplicable, std::string(to_string(id)) + ": " + c.reason);
    return c.gap;
}

double equality_gap(const Graph& g, double alpha, BoundId id) {
    GraphProfile profile(g);
    EnergyInstance x(profile, alpha);
    return equality_gap(x, id);
}

}  // namespace aenergy
