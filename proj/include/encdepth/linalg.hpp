#pragma once

#include <optional>
#include <vector>

#include "encdepth/rational.hpp"

namespace encdepth {

using Matrix = std::vector<std::vector<Rational>>;

/// Exact determinant of a square rational matrix (Gaussian elimination).
Rational det(Matrix m);

/// Kernel vector of a d x (d+1) matrix A with rank d, via cofactors:
/// kappa_i = (-1)^i det(A minus column i). Returns the all-zero vector
/// iff rank(A) < d.
std::vector<Rational> kernel_cofactor(const Matrix& a);

/// Solves the square system m·x = rhs by exact Gaussian elimination with
/// full (row and column) pivoting. Returns nullopt iff m is singular.
std::optional<std::vector<Rational>> solve_full_pivot(Matrix m, std::vector<Rational> rhs);

}  // namespace encdepth
