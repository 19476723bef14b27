#include "aenergy/bounds.hpp"

#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "aenergy/error.hpp"
#include "aenergy/graph_io.hpp"
#include "aenergy/harness.hpp"
#include "aenergy/spectra.hpp"

namespace aenergy {
namespace {

Graph family(const char* text) { return generate_family(parse_family_spec(text)); }

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an aenergy::Error";
    return ErrorCode::ParseError;
}

double round2(double x) { return std::round(x * 100) / 100; }

TEST(UbEdgeDecomposition, PublishedValues) {
    auto s20 = ub_edge_decomposition(family("star:20"), 0.6);
    ASSERT_TRUE(s20.applicable);
    EXPECT_EQ(s20.branch, "alpha>=n/(2(n-1))");
    EXPECT_DOUBLE_EQ(round2(s20.value), 43.32);
    EXPECT_DOUBLE_EQ(round2(ub_edge_decomposition(family("doublestar:12,21"), 0.7).value), 92.48);
}

TEST(UbEdgeDecomposition, K2IsTight) {
    auto r = ub_edge_decomposition(make_graph(2, {{0, 1}}), 0.3);
    EXPECT_NEAR(r.value, 1.4, 1e-12);
    EXPECT_NEAR(r.slack, 0.0, 1e-12);
    for (double a : default_alpha_grid()) EXPECT_LE(equality_gap(make_graph(2, {{0, 1}}), a, BoundId::UB_T31), 1e-9);
}

TEST(UbEdgeDecomposition, SeamValues) {
    // At a = n/(2(n-1)) the upper branch reads 2m and the lower 2m(n-2)/(n-1).
    for (int n = 3; n <= 12; ++n) {
        Graph g = generate_family({Family::Cycle, {n}});
        double m = double(n);
        double seam = double(n) / (2.0 * (n - 1));
        EXPECT_NEAR(ub_edge_decomposition(g, seam).value, 2 * m, 1e-9);
        double below = std::nextafter(seam, 0.0);
        EXPECT_EQ(ub_edge_decomposition(g, below).branch, "alpha<n/(2(n-1))");
        EXPECT_NEAR(ub_edge_decomposition(g, below).value, 2 * m * (n - 2) / (n - 1), 1e-9);
    }
}

TEST(UbEdgeDecomposition, Inapplicable) {
    EXPECT_FALSE(ub_edge_decomposition(make_graph(1, {}), 0.5).applicable);
    EXPECT_FALSE(ub_edge_decomposition(family("path:3"), 1.0).applicable);
}

TEST(UbPirzada, Examples) {
    EXPECT_DOUBLE_EQ(round2(ub_pirzada(family("star:20"), 0.6).value), 48.35);
    EXPECT_DOUBLE_EQ(round2(ub_pirzada(family("doublestar:12,21"), 0.7).value), 98.56);
    EXPECT_NEAR(ub_pirzada(family("bipartite:2,2"), 0.0).value, std::sqrt(32.0), 1e-12);
    EXPECT_FALSE(ub_pirzada(family("path:3"), 1.0).applicable);
}

TEST(UbPartialSumStar, Examples) {
    EXPECT_NEAR(ub_partial_sum_star(family("star:4"), 0.5, 1), 2.0, 1e-12);
    EXPECT_GE(ub_partial_sum_star(family("star:4"), 0.5, 1), partial_sum(family("star:4"), 0.5, 1) - 1e-12);
    EXPECT_NEAR(ub_partial_sum_star(family("complete:4"), 0.5, 2), 5.5, 1e-12);
    EXPECT_NEAR(partial_sum(family("complete:4"), 0.5, 2), 4.0, 1e-12);
    EXPECT_NEAR(ub_partial_sum_star(make_graph(2, {{0, 1}}), 0.5, 1), 1.0, 1e-12);
    EXPECT_EQ(code_of([] { ub_partial_sum_star(family("star:4"), 0.3, 1); }), ErrorCode::Inapplicable);
    EXPECT_EQ(code_of([] { ub_partial_sum_star(family("star:4"), 0.6, 0); }), ErrorCode::InvalidK);
}

TEST(UbPartialSumStar, DominatesPartialSums) {
    for (std::size_t n = 2; n <= 5; ++n)
        for (const auto& g : labeled_graphs(n))
            for (double a : {0.5, 0.65, 0.8, 0.95})
                for (std::size_t k = 1; k <= n; ++k)
                    ASSERT_GE(ub_partial_sum_star(g, a, k), partial_sum(g, a, k) - kSlackTolerance) << write_graph6(g);
}

TEST(UbStarDominated, Examples) {
    auto s = ub_star_dominated(family("star:10"), 0.75);
    ASSERT_TRUE(s.applicable);
    EXPECT_NEAR(s.value, 4.8 + std::sqrt(38.25), 1e-12);
    EXPECT_NEAR(s.slack, 0.0, 1e-9);
    auto c6 = ub_star_dominated(family("cycle:6"), 0.75);
    EXPECT_NEAR(c6.value, 11.25 + std::sqrt(1.0625), 1e-12);
    EXPECT_DOUBLE_EQ(round2(c6.value), 12.28);
    EXPECT_GT(c6.slack, 0.0);
    auto p3 = ub_star_dominated(family("path:3"), 0.6);
    EXPECT_TRUE(p3.applicable);
    EXPECT_GE(p3.slack, 0.0);
    EXPECT_LE(equality_gap(family("star:8"), 0.8, BoundId::UB_T35), 1e-9);
}

TEST(UbStarDominated, Inapplicable) {
    EXPECT_FALSE(ub_star_dominated(make_graph(4, {{0, 1}, {2, 3}}), 0.75).applicable);
    EXPECT_FALSE(ub_star_dominated(family("star:5"), 0.5).applicable);
    EXPECT_FALSE(ub_star_dominated(family("star:5"), 1.0).applicable);
}

TEST(LbSpread, Examples) {
    EXPECT_DOUBLE_EQ(round2(lb_spread(family("star:4"), 0.5).value), 2.25);
    EXPECT_DOUBLE_EQ(round2(lb_spread(family("cycle:9"), 0.7).value), 2.78);
    for (int n = 4; n <= 8; ++n)
        for (double a : {0.0, 0.3, 0.6, 0.9}) {
            auto r = lb_spread(generate_family({Family::Complete, {n}}), a);
            EXPECT_NEAR(r.value, 2 * (1 - a) * (n - 1), 1e-9);
            EXPECT_NEAR(r.slack, 0.0, 1e-9);
        }
    EXPECT_LE(equality_gap(family("complete:6"), 0.3, BoundId::LB_T41), 1e-9);
    EXPECT_FALSE(lb_spread(make_graph(3, {}), 0.5).applicable);
}

TEST(LbZhou, Examples) {
    auto s4 = lb_zhou(family("star:4"), 0.5);
    EXPECT_EQ(s4.branch, "xi_n>0");
    EXPECT_DOUBLE_EQ(round2(s4.value), 2.24);
    EXPECT_DOUBLE_EQ(round2(lb_zhou(family("book:4"), 0.8).value), 6.43);
    EXPECT_DOUBLE_EQ(round2(lb_zhou(family("path:10"), 0.9).value), 0.76);
    EXPECT_DOUBLE_EQ(round2(lb_zhou(family("friendship:3"), 0.6).value), 2.20);
    EXPECT_EQ(lb_zhou(family("bipartite:2,2"), 0.75).branch, "xi_n=0");
    EXPECT_FALSE(lb_zhou(family("star:4"), 0.4).applicable);
}

TEST(LbZagrebSqrt, Examples) {
    auto k22 = lb_zagreb_sqrt(family("bipartite:2,2"), 0.0);
    EXPECT_NEAR(k22.value, 4.0, 1e-12);
    EXPECT_NEAR(k22.slack, 0.0, 1e-12);
    EXPECT_NEAR(lb_zagreb_sqrt(make_graph(2, {{0, 1}}), 0.0).value, 2.0, 1e-12);
    // 2 a^2 Z1 = 27, 4 (1-a)^2 m = 9, 8 a^2 m^2 / n = 27.
    EXPECT_NEAR(lb_zagreb_sqrt(family("bipartite:3,3"), 0.5).value, 3.0, 1e-12);
    for (double a : default_alpha_grid()) EXPECT_LE(equality_gap(family("bipartite:4,4"), a, BoundId::LB_C44), 1e-9);
}

TEST(LbDegreeBranch, Examples) {
    auto k4 = lb_degree_branch(family("complete:4"), 0.5);
    EXPECT_EQ(k4.id, BoundId::LB_T45a);
    EXPECT_NEAR(k4.value, 3.0, 1e-12);
    EXPECT_NEAR(k4.slack, 0.0, 1e-12);
    auto k22 = lb_degree_branch(family("bipartite:2,2"), 0.75);
    EXPECT_EQ(k22.id, BoundId::LB_T45b);
    EXPECT_NEAR(k22.value, 1.0, 1e-12);
    EXPECT_NEAR(k22.energy, 1.0, 1e-12);
    auto s4 = lb_degree_branch(family("star:4"), 0.5);
    EXPECT_NEAR(s4.value, 2.5, 1e-12);
    EXPECT_NEAR(s4.slack, 0.0, 1e-12);
    EXPECT_FALSE(lb_degree_branch(make_graph(4, {{0, 1}, {2, 3}}), 0.3).applicable);
}

TEST(SpreadBound, Examples) {
    EXPECT_NEAR(ub_spread_invariant(family("bipartite:2,2"), 0.5), 2.0, 1e-12);
    EXPECT_NEAR(spread(family("bipartite:2,2"), 0.5), 2.0, 1e-12);
    EXPECT_NEAR(ub_spread_invariant(make_graph(2, {{0, 1}}), 0.0), 2.0, 1e-12);
    EXPECT_GE(ub_spread_invariant(family("path:4"), 0.3), spread(family("path:4"), 0.3));
}

TEST(RelLaplacian, Examples) {
    auto k22 = rel_laplacian(family("bipartite:2,2"), 0.5);
    EXPECT_NEAR(k22.lhs, 4.0, 1e-12);
    EXPECT_NEAR(k22.rhs, 4.0, 1e-12);
    EXPECT_NEAR(k22.gap, 0.0, 1e-12);
    auto k4 = rel_laplacian(family("complete:4"), 0.5);
    EXPECT_TRUE(k4.satisfied);
    EXPECT_GT(k4.lhs, k4.rhs);
    EXPECT_TRUE(rel_laplacian(family("path:3"), 0.7).satisfied);
    EXPECT_FALSE(rel_laplacian(family("path:3"), 0.3).applicable);
}

TEST(RelLineGraph, Examples) {
    for (int n = 3; n <= 12; ++n) {
        auto r = rel_line_graph(generate_family({Family::Cycle, {n}}), 0.5);
        EXPECT_NEAR(r.lhs, 0.0, 1e-9);
        EXPECT_NEAR(r.rhs, 0.0, 1e-12);
    }
    auto p4 = rel_line_graph(family("path:4"), 0.0);
    EXPECT_NEAR(p4.lhs, std::abs(2 * std::sqrt(5.0) - 2 * std::sqrt(2.0) - 2), 1e-12);
    EXPECT_NEAR(p4.rhs, 6.0, 1e-12);
    auto empty = rel_line_graph(make_graph(3, {}), 0.5);
    EXPECT_TRUE(empty.applicable);
    EXPECT_NEAR(empty.lhs, 3.0, 1e-12);
    EXPECT_NEAR(empty.rhs, 3.0, 1e-12);
}

TEST(RelLineGraphPendant, Examples) {
    for (int n = 3; n <= 12; ++n)
        for (double a : {0.0, 0.3, 0.75}) {
            auto r = rel_line_graph_pendant(generate_family({Family::Cycle, {n}}), a);
            EXPECT_NEAR(r.lhs, 0.0, 1e-9);
            EXPECT_NEAR(r.rhs, 0.0, 1e-12);
        }
    auto p4 = rel_line_graph_pendant(family("path:4"), 0.0);
    EXPECT_NEAR(p4.lhs, 0.3562911697, 1e-9);
    EXPECT_NEAR(p4.rhs, 2.0, 1e-12);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph t = generate_strictly_binary_tree(3, seed);
        auto r = rel_line_graph_pendant(t, 0.0);
        EXPECT_LE(r.lhs, 6.0 + 1e-7);
        EXPECT_NEAR(r.rhs, 6.0, 1e-12);
    }
}

TEST(EqualityGap, Examples) {
    EXPECT_LE(equality_gap(make_graph(2, {{0, 1}}), 0.4, BoundId::UB_T31), 1e-12);
    EXPECT_LE(equality_gap(family("star:8"), 0.8, BoundId::UB_T35), 1e-9);
    EXPECT_LE(equality_gap(family("complete:6"), 0.3, BoundId::LB_T41), 1e-9);
    EXPECT_EQ(code_of([] { equality_gap(family("star:8"), 0.3, BoundId::UB_T35); }), ErrorCode::Inapplicable);
}

TEST(BoundIds, RoundTrip) {
    for (BoundId id : kAllBoundIds) EXPECT_EQ(bound_id_from_string(to_string(id)), id);
    EXPECT_FALSE(bound_id_from_string("UB_T99").has_value());
    EXPECT_TRUE(is_relation(BoundId::REL_T51));
    EXPECT_FALSE(is_relation(BoundId::SPREAD_L28));
}

TEST(Evaluate, BranchMismatchIsInapplicable) {
    GraphProfile p(family("cycle:5"));
    EnergyInstance low(p, 0.3), high(p, 0.8);
    EXPECT_TRUE(evaluate(low, BoundId::LB_T45a).applicable);
    EXPECT_FALSE(evaluate(low, BoundId::LB_T45b).applicable);
    EXPECT_FALSE(evaluate(high, BoundId::LB_T45a).applicable);
    EXPECT_TRUE(evaluate(high, BoundId::LB_T45b).applicable);
    // Only the spread bound covers a = 1.
    for (const auto& c : evaluate_all(EnergyInstance(p, 1.0)))
        EXPECT_EQ(c.applicable, c.id == BoundId::SPREAD_L28) << to_string(c.id);
}

// Every formula again, straight from the statements, fed by degrees and
// spectra recomputed here.
struct Oracle {
    double n, m, z1, dmax, s = 0, p = 0, e, theta;
    std::vector<double> rho;
    double adj, lap, line;
    double zeta = 0;
    bool connected;

    Oracle(const Graph& g, double a) {
        n = double(g.order());
        m = double(g.size());
        std::vector<double> d(g.order(), 0.0);
        for (auto [u, v] : g.edges()) {
            d[u] += 1;
            d[v] += 1;
        }
        z1 = 0;
        dmax = 0;
        for (double x : d) {
            z1 += x * x;
            dmax = std::max(dmax, x);
            s += x == 0;
            p += x == 1;
        }
        rho = graph_spectrum(g, MatrixKind::a_alpha(a)).values;
        e = 0;
        for (double r : rho) e += std::abs(r - 2 * a * m / n);
        theta = rho.front() - rho.back();
        auto av = graph_spectrum(g, MatrixKind::adjacency()).values;
        adj = 0;
        for (double x : av) {
            adj += std::abs(x);
            zeta += std::abs(x) > 1e-8;
        }
        lap = energy(g, MatrixKind::laplacian()).energy;
        Graph l = line_graph(g);
        line = l.order() ? energy(l, MatrixKind::adjacency()).energy : 0.0;
        connected = connectivity(g).connected;
    }
};

TEST(OracleAgreement, RandomGraphs) {
    SplitMix64 rng(4242);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t nn = 2 + rng.below(11);
        Graph g = random_gnp(nn, 0.2 + 0.6 * rng.uniform(), rng.next());
        double a = 0.05 * double(rng.below(20));
        Oracle o(g, a);
        GraphProfile prof(g);
        EnergyInstance x(prof, a);
        ASSERT_NEAR(x.energy(), o.e, 1e-9);
        const double n = o.n, m = o.m, z1 = o.z1;
        const double excess = a * a * z1 + 2 * (1 - a) * (1 - a) * m - 4 * a * a * m * m / n;
        const std::string tag = write_graph6(g) + " a=" + std::to_string(a);

        double t31 = a >= n / (2 * (n - 1)) ? 4 * a * m * (1 - 1 / n) : 2 * m * (1 - 2 * a / n);
        EXPECT_NEAR(ub_edge_decomposition(x).value, t31, 1e-9) << tag;

        double var = 0;
        for (auto dv : prof.degrees().degrees) var += (double(dv) - 2 * m / n) * (double(dv) - 2 * m / n);
        EXPECT_NEAR(ub_pirzada(x).value, std::sqrt(2 * (1 - a) * (1 - a) * m * n + a * a * n * var), 1e-9) << tag;

        if (o.connected && a > 0.5) {
            double t35 = a * (4 * m - 3 * o.dmax - 4 * m / n + 1) +
                         std::sqrt(a * a * (o.dmax + 1) * (o.dmax + 1) + 4 * (1 - 2 * a) * o.dmax);
            EXPECT_NEAR(ub_star_dominated(x).value, t35, 1e-9) << tag;
        }
        if (o.theta > 1e-12) EXPECT_NEAR(lb_spread(x).value, 2 * excess / o.theta, 1e-9) << tag;
        EXPECT_NEAR(lb_zagreb_sqrt(x).value, std::sqrt(std::max(0.0, 2 * excess)), 1e-9) << tag;
        EXPECT_NEAR(ub_spread_invariant(g, a), std::sqrt(std::max(0.0, 2 * excess)), 1e-9) << tag;

        if (a >= 0.5) {
            std::vector<double> xi;
            for (double r : o.rho) xi.push_back(std::abs(r - 2 * a * m / n));
            std::sort(xi.rbegin(), xi.rend());
            auto z = lb_zhou(x);
            if (xi.back() > 1e-9) {
                double want = 2 * std::sqrt(excess * n) * std::sqrt(xi.front() * xi.back()) / (xi.front() + xi.back());
                EXPECT_NEAR(z.value, want, 1e-9) << tag;
            } else if (xi.front() > 1e-9) {
                EXPECT_NEAR(z.value, excess / xi.front(), 1e-9) << tag;
            }
        }
        if (o.connected && m > 0) {
            double t45 = a <= 0.5 ? 2 * ((1 - a) * z1 / m - 2 * a * m / n + (2 * a - 1) * o.dmax)
                                  : 2 * a * z1 / m + 4 * (1 - 3 * a) * m / n;
            EXPECT_NEAR(lb_degree_branch(x).value, t45, 1e-9) << tag;
        }
        if (o.connected && a >= 0.5) {
            auto r = rel_laplacian(x);
            EXPECT_NEAR(r.lhs, o.e + a * o.lap, 1e-9) << tag;
            EXPECT_NEAR(r.rhs, 2 * o.adj - 4 * a * m * o.zeta / n, 1e-9) << tag;
        }
        double lhs = std::abs(o.e - (1 - a) * o.line - 2 * (1 - a) * (n - m));
        auto r52 = rel_line_graph(x);
        EXPECT_NEAR(r52.lhs, lhs, 1e-9) << tag;
        EXPECT_NEAR(r52.rhs, std::abs(2 * a - 1) * (2 * m - n + 2 * o.s) + std::abs(n - 2 * a * m), 1e-9) << tag;
        auto r55 = rel_line_graph_pendant(x);
        EXPECT_NEAR(r55.lhs, lhs, 1e-9) << tag;
        EXPECT_NEAR(r55.rhs, std::abs(2 * a - 1) * (2 * m - 2 * n + 4 * o.s + 2 * o.p) + 2 * a * std::abs(n - m), 1e-9) << tag;
    }
}

}  // namespace
}  // namespace aenergy
