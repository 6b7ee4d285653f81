#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "singhodge/newton.hpp"
#include "singhodge/rational.hpp"

// Independent brute-force routes used to validate the production geometry on
// small instances. Deliberately simple: exact rational simplex with Bland's
// rule for hull membership, exhaustive box scans for lattice counts.
namespace singhodge::oracle {

/// A point survives iff an exact LP certifies it is outside
/// conv(other points) + R^n_{>=0}.
std::set<ExponentVector> brute_hull_vertices(const std::set<ExponentVector>& support, int n);

/// Scans every lattice point of [1, bound]^n and tests membership on each
/// closed 1-dimensional face by exact collinearity plus a segment range
/// check. Requires bound >= max vertex coordinate.
std::int64_t brute_pi_f(const NewtonBoundary& boundary, std::int64_t bound);

/// All lattice points of the segment [a, b]: a + k (b-a)/g for k = 0..g,
/// g = gcd of |b - a|.
std::vector<ExponentVector> segment_lattice_points(const ExponentVector& a, const ExponentVector& b);

/// Feasibility of sum lambda_i p_i + c = target, sum lambda_i = 1,
/// lambda >= 0, c >= 0 via phase-1 simplex. Exposed for direct testing.
bool in_hull_plus_orthant(const std::vector<ExponentVector>& pts, const ExponentVector& target, int n);

}  // namespace singhodge::oracle
