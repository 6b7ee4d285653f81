#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "singhodge/poly.hpp"
#include "singhodge/rational.hpp"

namespace singhodge {

/// The Newton polyhedron conv(support + R^n_{>=0}). Facets carry primitive
/// inner normals with nonnegative entries; a facet is bounded exactly when
/// its normal is strictly positive.
struct NewtonPolyhedron {
    int n = 0;
    std::vector<ExponentVector> support;   // deduplicated, sorted
    std::vector<ExponentVector> vertices;  // extreme points, sorted
    std::vector<Face> facets;
};

/// The complex of bounded faces of the Newton polyhedron, graded by
/// dimension and closed under intersection. `subfaces[i]` lists the indices
/// of the faces properly contained in face i.
struct NewtonBoundary {
    int n = 0;
    std::vector<Face> faces;  // sorted by (dim, vertices)
    std::vector<std::vector<int>> subfaces;

    std::vector<const Face*> faces_of_dim(int d) const;
};

/// An interior vertex q of the boundary together with its lattice distance
/// d = gcd of the coordinates (the number of lattice steps on [0, q]).
struct InteriorVertexData {
    ExponentVector q;
    std::int64_t d = 0;
};

struct FlatnessWitness {
    IntVector normal;
    Int offset;
};

struct QuasiHomogeneousData {
    IntVector weights;
    Int degree;
};

/// An ordinary polytope conv(support), possibly of dimension < n. `faces`
/// contains all faces graded by dimension, including the improper face (the
/// polytope itself); when dim == n that face has normal 0, offset 0.
struct Polytope {
    int n = 0;
    int dim = 0;
    std::vector<ExponentVector> vertices;
    std::vector<Face> faces;
};

NewtonPolyhedron newton_polyhedron(const std::set<ExponentVector>& support, int n);

NewtonBoundary newton_boundary(const NewtonPolyhedron& np);

/// Support criterion: a pure power of each variable occurs. This matches the
/// axis definition: a point t*e_i of conv(supp + R^n_{>=0}) forces, in every
/// coordinate j != i, that each contributing support point has j-th
/// coordinate 0, i.e. supp contains a pure power of x_i.
bool is_convenient(const std::set<ExponentVector>& support, int n);

/// True iff the affine span of the boundary vertices is a hyperplane with a
/// strictly positive primitive normal; the witness is returned when so.
std::pair<bool, std::optional<FlatnessWitness>> is_flat(const NewtonBoundary& boundary);

/// Boundary vertices with all coordinates >= 1, paired with their lattice
/// distance from the origin.
std::vector<InteriorVertexData> interior_vertices(const NewtonBoundary& boundary);

/// Number of lattice points with all coordinates >= 1 lying on at least one
/// closed 1-dimensional bounded face; points on several edges count once.
std::int64_t pi_f(const NewtonBoundary& boundary);

/// A primitive positive integer solution (v, C) of v . alpha = C over the
/// support, if one exists.
std::optional<QuasiHomogeneousData> is_quasi_homogeneous(const std::set<ExponentVector>& support, int n);

enum class Scope { AtZero, Global };
enum class FaceVerdict { NonDegenerate, Degenerate, Assumed };

struct NondegeneracyReport {
    std::vector<std::pair<Face, FaceVerdict>> verdicts;  // ordered by (dim, vertices)
    bool any_degenerate = false;
    bool any_assumed = false;
};

/// Per-face verdicts: vertex faces are non-degenerate (a monomial never
/// vanishes on the torus), 1-dimensional faces get the exact univariate
/// squarefree test, and faces of dimension >= 2 are reported Assumed.
/// AtZero runs over the bounded faces of the Newton polyhedron, Global over
/// all faces of the Newton polytope conv(supp f).
NondegeneracyReport check_nondegeneracy(const SparsePolynomial& p, Scope scope);

Polytope newton_polytope(const std::set<ExponentVector>& support);

}  // namespace singhodge
