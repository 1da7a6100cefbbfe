#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "singulact/rational.hpp"

// Small dense exact linear algebra over Q (Gauss-Jordan elimination).
namespace singulact::linalg {

using Vector = std::vector<Rat>;
using Matrix = std::vector<Vector>;  // row-major; all rows of equal length

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m, std::size_t cols);

std::size_t rank(Matrix m, std::size_t cols);

/// A basis of {x : m x = 0}, for matrices with `cols` columns (m may have no rows).
std::vector<Vector> nullspace(Matrix m, std::size_t cols);

/// The unique solution of the square-or-tall system m x = b, or nullopt when
/// the system is inconsistent or underdetermined.
std::optional<Vector> solve_unique(const Matrix& m, const Vector& b);

Rat determinant(Matrix m);

Rat dot(const Vector& a, const Vector& b);

}  // namespace singulact::linalg
