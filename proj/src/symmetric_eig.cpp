#include "aenergy/symmetric_eig.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "aenergy/error.hpp"

namespace aenergy {

std::string to_string(const MatrixKind& kind) {
    switch (kind.tag) {
        case MatrixKind::Tag::Adjacency: return "adjacency";
        case MatrixKind::Tag::Laplacian: return "laplacian";
        case MatrixKind::Tag::SignlessLaplacian: return "signless_laplacian";
        case MatrixKind::Tag::AAlpha: return "a_alpha(" + std::to_string(kind.alpha) + ")";
    }
    return "unknown";
}

double SymmetricMatrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < order_; ++i) t += (*this)(i, i);
    return t;
}

double SymmetricMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double x : data_) s += x * x;
    return std::sqrt(s);
}

namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t p) {
    double s = 0.0;
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i + 1; j < p; ++j) s += 2.0 * a[i * p + j] * a[i * p + j];
    return std::sqrt(s);
}

}  // namespace

Spectrum eigenvalues(const SymmetricMatrix& m, const JacobiOptions& options) {
    const std::size_t p = m.order();
    if (p == 0) throw Error(ErrorCode::NumericalInput, "matrix of order 0");
    for (double x : m.data())
        if (!std::isfinite(x)) throw Error(ErrorCode::NumericalInput, "non-finite matrix entry");

    std::vector<double> a = m.data();
    const double threshold = options.relative_tolerance * (1.0 + m.frobenius_norm());

    int sweep = 0;
    while (off_diagonal_norm(a, p) > threshold) {
        if (sweep++ >= options.max_sweeps) {
            throw Error(ErrorCode::NoConvergence, "Jacobi did not converge in " + std::to_string(options.max_sweeps) +
                                                      " sweeps");
        }
        for (std::size_t r = 0; r + 1 < p; ++r) {
            for (std::size_t c = r + 1; c < p; ++c) {
                const double arc = a[r * p + c];
                if (arc == 0.0) continue;
                const double arr = a[r * p + r];
                const double acc = a[c * p + c];
                // Rotation angle chosen to annihilate a(r,c); t is the smaller root of
                // t^2 + 2*theta*t - 1 = 0 for stability.
                const double theta = (acc - arr) / (2.0 * arc);
                const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double cs = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * cs;

                for (std::size_t k = 0; k < p; ++k) {
                    if (k == r || k == c) continue;
                    const double akr = a[k * p + r];
                    const double akc = a[k * p + c];
                    const double nr = cs * akr - sn * akc;
                    const double nc = sn * akr + cs * akc;
                    a[k * p + r] = a[r * p + k] = nr;
                    a[k * p + c] = a[c * p + k] = nc;
                }
                a[r * p + r] = arr - t * arc;
                a[c * p + c] = acc + t * arc;
                a[r * p + c] = a[c * p + r] = 0.0;
            }
        }
    }

    Spectrum s;
    s.values.resize(p);
    for (std::size_t i = 0; i < p; ++i) s.values[i] = a[i * p + i];
    std::sort(s.values.begin(), s.values.end(), std::greater<>());
    return s;
}

Extremes spectral_extremes(const SymmetricMatrix& m) {
    auto s = eigenvalues(m);
    return {s.largest(), s.smallest()};
}

}  // namespace aenergy
