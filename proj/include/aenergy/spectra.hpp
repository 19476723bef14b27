#pragma once

#include <cstddef>
#include <string>

#include "aenergy/graph.hpp"
#include "aenergy/matrix_kind.hpp"
#include "aenergy/symmetric_eig.hpp"

namespace aenergy {

// Tolerance used when comparing eigenvalues against the mean shift 2am/n.
inline constexpr double kShiftTolerance = 1e-9;

// Throws InvalidAlpha unless 0 <= alpha <= 1.
void check_alpha(double alpha);
// Throws InvalidAlpha unless 0 <= alpha < 1.
void check_alpha_below_one(double alpha);

SymmetricMatrix build_matrix(const Graph& g, const MatrixKind& kind);

// Empty spectrum for the graph on zero vertices.
Spectrum graph_spectrum(const Graph& g, const MatrixKind& kind);

// 2am/n for A_alpha, 2m/n for the Laplacian kinds, 0 for adjacency.
double mean_shift(const Graph& g, const MatrixKind& kind);

double deviation_sum(const Spectrum& spectrum, double shift);

struct EnergyReport {
    std::string graph_id;  // graph6 of the input
    MatrixKind kind;
    double energy = 0.0;
    double mean_shift = 0.0;
    Spectrum spectrum;
};

EnergyReport energy(const Graph& g, const MatrixKind& kind);

double spread(const Graph& g, double alpha);

// Sum of the k largest values; k beyond the length sums everything.
double partial_sum(const Spectrum& spectrum, std::size_t k);
double partial_sum(const Graph& g, double alpha, std::size_t k);

// Largest k in [1, n] with spectrum[k-1] >= shift - kShiftTolerance.
std::size_t sigma_index(const Spectrum& spectrum, double shift);
std::size_t sigma_index(const Graph& g, double alpha);

struct PartialSumEnergy {
    std::size_t sigma = 0;
    double sigma_form = 0.0;  // 2 S^(sigma) - 4 a m sigma / n
    double max_form = 0.0;    // max over k of 2 S^(k) - 4 a m k / n
};

PartialSumEnergy energy_via_partial_sums(const Graph& g, double alpha);
PartialSumEnergy energy_via_partial_sums(const Spectrum& a_alpha_spectrum, double alpha, std::size_t m);

/// Exact A_alpha spectrum for families that have one: complete, star,
/// balanced complete bipartite K_{a,a}, cycle, and the path at alpha = 0
/// (K_2 is complete:2). Anything else throws NoClosedForm.
Spectrum closed_form_spectrum(const FamilySpec& family, double alpha);

}  // namespace aenergy
