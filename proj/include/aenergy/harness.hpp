#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aenergy/bounds.hpp"
#include "aenergy/graph.hpp"

namespace aenergy {

inline constexpr std::size_t kMaxExhaustiveOrder = 7;

/// SplitMix64. Constants:
///   state += 0x9E3779B97F4A7C15
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
/// Portable and trivially reimplemented, so corpora are reproducible anywhere.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    // Uniform in [0, 1) from the top 53 bits.
    double uniform();
    // Uniform in [0, bound) by modulo reduction.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

// The labeled graph on n vertices whose edge set is `mask`, bit k standing for
// the k-th pair in graph6 order (0,1), (0,2), (1,2), (0,3), ...
Graph labeled_graph(std::size_t n, std::uint64_t mask);

// Calls visit for all 2^(n(n-1)/2) labeled graphs in ascending mask order.
// Throws CorpusTooLarge for n > 7.
void enumerate_labeled_graphs(std::size_t n, const std::function<void(const Graph&)>& visit);
std::vector<Graph> labeled_graphs(std::size_t n);

// Pairs visited in graph6 order; pair kept when uniform() < p.
Graph random_gnp(std::size_t n, double p, std::uint64_t seed);

// Root 0 gets two leaf children; then internal_count - 1 times a uniformly
// chosen leaf (below(leaf_count)) gets two new leaf children.
Graph generate_strictly_binary_tree(std::size_t internal_count, std::uint64_t seed);

struct RandomSpec {
    std::size_t n = 0;
    double p = 0.0;
    std::size_t count = 0;
    std::uint64_t seed = 0;  // graph i of the batch uses seed + i
};

struct CorpusSpec {
    std::size_t exhaustive_max_n = 0;  // 0 disables enumeration
    std::vector<RandomSpec> random;
    std::vector<FamilySpec> families;
    std::vector<Graph> graphs;
};

// n in {8, 12, 16, 20} x p in {0.2, 0.5, 0.8}, 50 graphs each.
std::vector<RandomSpec> standard_random_corpus();

std::vector<Graph> build_corpus(const CorpusSpec& spec);

// {0, 0.05, ..., 0.95}; 0.5 is already a member.
std::vector<double> default_alpha_grid();

struct SweepOptions {
    std::vector<double> alphas = default_alpha_grid();
    // Adds n/(2(n-1)) for each graph when it is below 1.
    bool add_branch_threshold = true;
    std::vector<BoundId> bounds{kAllBoundIds.begin(), kAllBoundIds.end()};
    std::size_t jobs = 1;
    // Applicable instances with 0 <= slack < near_equality_threshold are candidates.
    double near_equality_threshold = 1e-6;
    std::size_t near_equality_cap = 10;
};

struct Violation {
    std::string graph6;
    double alpha = 0.0;
    double slack = 0.0;
};

struct NearEquality {
    std::string graph6;
    double alpha = 0.0;
    double slack = 0.0;
};

struct BoundStats {
    std::size_t count = 0;
    std::size_t applicable = 0;
    std::optional<double> min_slack;
    std::string argmin_graph6;
    double argmin_alpha = 0.0;
    std::vector<Violation> violations;
    std::size_t near_equality_count = 0;
    std::vector<NearEquality> near_equality;  // first few in corpus order
    std::map<std::string, std::size_t> inapplicable_reasons;
};

struct EqualityCase {
    std::string graph;  // family spec text
    std::string graph6;
    double alpha = 0.0;
    BoundId id = BoundId::UB_T31;
    double gap = 0.0;
    double tolerance = 0.0;

    bool ok() const { return gap <= tolerance; }
};

struct VerificationReport {
    std::size_t graphs = 0;
    std::size_t instances = 0;  // (graph, alpha) pairs
    std::vector<double> alphas;
    std::map<BoundId, BoundStats> bounds;
    std::vector<EqualityCase> equality_cases;

    std::size_t violation_count() const;
    bool equality_ok() const;
    bool ok() const { return violation_count() == 0 && equality_ok(); }
};

VerificationReport sweep(std::span<const Graph> corpus, const SweepOptions& options = {});
VerificationReport sweep(const CorpusSpec& corpus, const SweepOptions& options = {});

// Every stated sharpness case, each with tolerance 1e-9 * (1 + |energy|).
std::vector<EqualityCase> equality_suite();

// ---- Published numerical tables ----

struct PublishedRow {
    std::string label;
    std::string family;  // family mini-language
    double alpha;
    std::array<std::string, 2> values;
};

struct ReproducedCell {
    std::string column;
    double computed = 0.0;
    std::string shown;  // rounded half away from zero to 2 decimals
    std::string expected;
    bool match() const { return shown == expected; }
};

struct ReproducedRow {
    std::string label;
    double alpha = 0.0;
    std::array<ReproducedCell, 2> cells;
    bool ordering_ok = true;  // the expected dominance between the two columns
};

struct ReproductionTable {
    std::string name;
    std::array<std::string, 2> columns;
    std::vector<ReproducedRow> rows;

    bool ok() const;
    // One line per failing cell or ordering, empty when ok().
    std::vector<std::string> mismatches() const;
};

std::string round2(double value);

extern const std::array<PublishedRow, 5> kTable1Published;
extern const std::array<PublishedRow, 2> kRemark32Published;

// LB_T41 vs LB_L42; ordering requires LB_T41 >= LB_L42.
ReproductionTable reproduce_table1(std::span<const PublishedRow> published = kTable1Published);
// UB_T31 vs UB_EQ3; ordering requires UB_T31 < UB_EQ3.
ReproductionTable reproduce_remark32(std::span<const PublishedRow> published = kRemark32Published);

// Throws ReproductionFailure naming each failing row and column.
void require_match(const ReproductionTable& table);

}  // namespace aenergy
