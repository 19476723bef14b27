#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "aenergy/matrix_kind.hpp"

namespace aenergy {

/// Dense real symmetric matrix, row-major. Writes go through set(), which
/// mirrors the entry, so the storage is symmetric by construction.
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(std::size_t order) : order_(order), data_(order * order, 0.0) {}

    std::size_t order() const noexcept { return order_; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * order_ + j]; }
    void set(std::size_t i, std::size_t j, double value) {
        data_[i * order_ + j] = value;
        data_[j * order_ + i] = value;
    }
    void add(std::size_t i, std::size_t j, double delta) { set(i, j, (*this)(i, j) + delta); }

    double trace() const;
    double frobenius_norm() const;
    const std::vector<double>& data() const noexcept { return data_; }

private:
    std::size_t order_;
    std::vector<double> data_;
};

struct Spectrum {
    std::vector<double> values;        // descending
    std::optional<MatrixKind> source;  // empty for a bare matrix

    std::size_t size() const noexcept { return values.size(); }
    double largest() const { return values.front(); }
    double smallest() const { return values.back(); }
};

struct JacobiOptions {
    double relative_tolerance = 1e-12;
    int max_sweeps = 100;
};

// Cyclic Jacobi. Stops once the off-diagonal Frobenius norm falls below
// relative_tolerance * (1 + ||m||_F). Throws NumericalInput / NoConvergence.
Spectrum eigenvalues(const SymmetricMatrix& m, const JacobiOptions& options = {});

struct Extremes {
    double largest;
    double smallest;
};

Extremes spectral_extremes(const SymmetricMatrix& m);

}  // namespace aenergy
