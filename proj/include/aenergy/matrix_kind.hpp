#pragma once

#include <string>

namespace aenergy {

struct MatrixKind {
    enum class Tag { Adjacency, Laplacian, SignlessLaplacian, AAlpha };

    Tag tag = Tag::Adjacency;
    double alpha = 0.0;  // meaningful for AAlpha only

    static MatrixKind adjacency() { return {Tag::Adjacency, 0.0}; }
    static MatrixKind laplacian() { return {Tag::Laplacian, 0.0}; }
    static MatrixKind signless_laplacian() { return {Tag::SignlessLaplacian, 0.0}; }
    static MatrixKind a_alpha(double alpha) { return {Tag::AAlpha, alpha}; }

    friend bool operator==(const MatrixKind&, const MatrixKind&) = default;
};

std::string to_string(const MatrixKind& kind);

}  // namespace aenergy
