#include "aenergy/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "aenergy/error.hpp"
#include "aenergy/graph_io.hpp"

namespace aenergy {

void check_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw Error(ErrorCode::InvalidAlpha, "alpha=" + std::to_string(alpha) + " outside [0,1]");
    }
}

void check_alpha_below_one(double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0)) {
        throw Error(ErrorCode::InvalidAlpha, "alpha=" + std::to_string(alpha) + " outside [0,1)");
    }
}

SymmetricMatrix build_matrix(const Graph& g, const MatrixKind& kind) {
    if (kind.tag == MatrixKind::Tag::AAlpha) check_alpha(kind.alpha);
    double diag_weight = 0.0;
    double off_weight = 1.0;
    switch (kind.tag) {
        case MatrixKind::Tag::Adjacency: break;
        case MatrixKind::Tag::Laplacian: diag_weight = 1.0; off_weight = -1.0; break;
        case MatrixKind::Tag::SignlessLaplacian: diag_weight = 1.0; break;
        case MatrixKind::Tag::AAlpha: diag_weight = kind.alpha; off_weight = 1.0 - kind.alpha; break;
    }
    SymmetricMatrix m(g.order());
    for (auto [u, v] : g.edges()) {
        m.set(u, v, off_weight);
        m.add(u, u, diag_weight);
        m.add(v, v, diag_weight);
    }
    return m;
}

Spectrum graph_spectrum(const Graph& g, const MatrixKind& kind) {
    if (kind.tag == MatrixKind::Tag::AAlpha) check_alpha(kind.alpha);
    Spectrum s;
    if (g.order() > 0) s = eigenvalues(build_matrix(g, kind));
    s.source = kind;
    return s;
}

double mean_shift(const Graph& g, const MatrixKind& kind) {
    if (g.order() == 0) return 0.0;
    const double avg_degree = 2.0 * static_cast<double>(g.size()) / static_cast<double>(g.order());
    switch (kind.tag) {
        case MatrixKind::Tag::Adjacency: return 0.0;
        case MatrixKind::Tag::Laplacian:
        case MatrixKind::Tag::SignlessLaplacian: return avg_degree;
        case MatrixKind::Tag::AAlpha: return kind.alpha * avg_degree;
    }
    return 0.0;
}

double deviation_sum(const Spectrum& spectrum, double shift) {
    double total = 0.0;
    for (double x : spectrum.values) total += std::abs(x - shift);
    return total;
}

EnergyReport energy(const Graph& g, const MatrixKind& kind) {
    EnergyReport r;
    r.graph_id = write_graph6(g);
    r.kind = kind;
    r.spectrum = graph_spectrum(g, kind);
    r.mean_shift = mean_shift(g, kind);
    r.energy = deviation_sum(r.spectrum, r.mean_shift);
    return r;
}

double spread(const Graph& g, double alpha) {
    check_alpha(alpha);
    if (g.order() == 0) return 0.0;
    auto s = graph_spectrum(g, MatrixKind::a_alpha(alpha));
    return s.largest() - s.smallest();
}

double partial_sum(const Spectrum& spectrum, std::size_t k) {
    if (k < 1) throw Error(ErrorCode::InvalidK, "k must be >= 1");
    k = std::min(k, spectrum.size());
    double total = 0.0;
    for (std::size_t i = 0; i < k; ++i) total += spectrum.values[i];
    return total;
}

double partial_sum(const Graph& g, double alpha, std::size_t k) {
    if (k < 1) throw Error(ErrorCode::InvalidK, "k must be >= 1");
    return partial_sum(graph_spectrum(g, MatrixKind::a_alpha(alpha)), k);
}

std::size_t sigma_index(const Spectrum& spectrum, double shift) {
    std::size_t sigma = 1;
    for (std::size_t i = 0; i < spectrum.size(); ++i)
        if (spectrum.values[i] >= shift - kShiftTolerance) sigma = i + 1;
    return sigma;
}

std::size_t sigma_index(const Graph& g, double alpha) {
    check_alpha_below_one(alpha);
    const auto kind = MatrixKind::a_alpha(alpha);
    return sigma_index(graph_spectrum(g, kind), mean_shift(g, kind));
}

PartialSumEnergy energy_via_partial_sums(const Spectrum& s, double alpha, std::size_t m) {
    check_alpha_below_one(alpha);
    PartialSumEnergy r;
    const std::size_t n = s.size();
    if (n == 0) return r;
    const double per_k = 4.0 * alpha * static_cast<double>(m) / static_cast<double>(n);
    r.sigma = sigma_index(s, per_k / 2.0);
    r.max_form = -std::numeric_limits<double>::infinity();
    double running = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
        running += s.values[k - 1];
        const double candidate = 2.0 * running - per_k * static_cast<double>(k);
        r.max_form = std::max(r.max_form, candidate);
        if (k == r.sigma) r.sigma_form = candidate;
    }
    return r;
}

PartialSumEnergy energy_via_partial_sums(const Graph& g, double alpha) {
    check_alpha_below_one(alpha);
    return energy_via_partial_sums(graph_spectrum(g, MatrixKind::a_alpha(alpha)), alpha, g.size());
}

namespace {

[[noreturn]] void no_closed_form(const FamilySpec& f, const std::string& why) {
    throw Error(ErrorCode::NoClosedForm, format_family_spec(f) + ": " + why);
}

}  // namespace

Spectrum closed_form_spectrum(const FamilySpec& family, double alpha) {
    check_alpha(alpha);
    validate(family);
    std::vector<double> v;
    const auto& p = family.params;
    switch (family.family) {
        case Family::Complete: {
            const auto n = static_cast<double>(p[0]);
            v.push_back(n - 1.0);
            v.insert(v.end(), static_cast<std::size_t>(p[0] - 1), alpha * n - 1.0);
            break;
        }
        case Family::Star: {
            if (p[0] == 1) {
                v.push_back(0.0);
                break;
            }
            const auto n = static_cast<double>(p[0]);
            const double root = std::sqrt(alpha * alpha * n * n + 4.0 * (1.0 - 2.0 * alpha) * (n - 1.0));
            v.push_back(0.5 * (alpha * n + root));
            v.insert(v.end(), static_cast<std::size_t>(p[0] - 2), alpha);
            v.push_back(0.5 * (alpha * n - root));
            break;
        }
        case Family::CompleteBipartite: {
            if (p[0] != p[1]) no_closed_form(family, "only the balanced K_{a,a} is supported");
            const double half = static_cast<double>(p[0]);
            v.push_back(half);
            v.insert(v.end(), static_cast<std::size_t>(2 * p[0] - 2), alpha * half);
            v.push_back(2.0 * alpha * half - half);
            break;
        }
        case Family::Cycle: {
            const auto n = static_cast<std::size_t>(p[0]);
            for (std::size_t k = 0; k < n; ++k) {
                v.push_back(2.0 * alpha + 2.0 * (1.0 - alpha) *
                                              std::cos(2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n)));
            }
            break;
        }
        case Family::Path: {
            if (alpha != 0.0) no_closed_form(family, "path closed form covers the adjacency matrix only");
            const auto n = static_cast<std::size_t>(p[0]);
            for (std::size_t k = 1; k <= n; ++k) {
                v.push_back(2.0 * std::cos(std::numbers::pi * static_cast<double>(k) / static_cast<double>(n + 1)));
            }
            break;
        }
        default: no_closed_form(family, "no closed-form spectrum implemented");
    }
    std::sort(v.begin(), v.end(), std::greater<>());
    return Spectrum{std::move(v), MatrixKind::a_alpha(alpha)};
}

}  // namespace aenergy
