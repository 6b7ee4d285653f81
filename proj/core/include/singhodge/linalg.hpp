#pragma once

#include <optional>
#include <vector>

#include "singhodge/rational.hpp"

namespace singhodge {

using QMatrix = std::vector<QVector>;

// Row rank of a rational matrix.
int rank(QMatrix m);

// One-dimensional nullspace of the span of `rows` in Q^n: returns a nonzero
// w with <row, w> = 0 for every row, provided the rows have rank n-1;
// otherwise nullopt.
std::optional<QVector> hyperplane_normal(const QMatrix& rows, int n);

// Any nonzero w with <row, w> = 0 for every row (deterministic choice), or
// nullopt when the rows span all of Q^n.
std::optional<QVector> kernel_vector(const QMatrix& rows, int n);

// Any solution x of A x = b (A given by rows), or nullopt if inconsistent.
// Free variables are set to zero.
std::optional<QVector> solve(const QMatrix& a, const QVector& b);

// Scales a rational vector to a primitive integer vector (clears
// denominators, divides by the gcd). Preserves direction; zero maps to zero.
IntVector to_primitive(const QVector& v);

// Divides an integer vector by the gcd of its entries.
IntVector make_primitive(IntVector v);

// A rational point x with A x = 0 and x_i >= 1 for all i, or nullopt if the
// system has no strictly positive solution. Exact Fourier-Motzkin
// elimination on the free variables after Gaussian elimination; the choice
// of point is deterministic.
std::optional<QVector> positive_kernel_point(const QMatrix& a, int nvars);

}  // namespace singhodge
