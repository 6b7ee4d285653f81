#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "singhodge/errors.hpp"
#include "singhodge/rational.hpp"

namespace singhodge {

/// A supporting hyperplane datum of a polyhedron together with the face it
/// cuts out. `vertices` are the extreme points lying on the face, sorted
/// lexicographically. For bounded faces of a Newton polyhedron the normal is
/// primitive with all entries > 0; faces of an ordinary Newton polytope may
/// carry normals of any sign, and the improper face of a full-dimensional
/// polytope carries normal 0, offset 0 (every point satisfies it).
struct Face {
    std::vector<ExponentVector> vertices;
    int dim = 0;
    IntVector normal;
    Int offset = 0;

    bool on_face(const ExponentVector& a) const { return dot(normal, a) == offset; }
    bool operator==(const Face& o) const { return vertices == o.vertices && normal == o.normal && offset == o.offset; }
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Invariants: every key has length n, no stored coefficient is zero.
struct SparsePolynomial {
    int n = 0;
    std::map<ExponentVector, Rational> terms;
};

// Grammar (whitespace insignificant):
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := coeff ['*'? factor ('*' factor)*] | factor ('*' factor)*
//   factor := var ('^' uint)?
//   coeff  := int | int '/' uint
//   var    := 'x' uint | 'x' | 'y' | 'z' | 'w'
// The letters are aliases for indices: x=x1, y=x2, z=x3, w=x4. Unless
// variable_names is given, n is inferred as the highest index used.
//
// Throws SyntaxError, NonzeroConstantTerm (f(0) != 0), EmptyPolynomial
// (all terms cancel).
SparsePolynomial parse_polynomial(const std::string& text,
                                  const std::optional<std::vector<std::string>>& variable_names = {});

/// Canonical printing; parse(to_string(p)) reproduces p whenever every
/// variable of p actually occurs.
std::string to_string(const SparsePolynomial& p);

std::set<ExponentVector> support(const SparsePolynomial& p);

/// True iff some exponent vector has coordinate sum 1, i.e. 0 is a smooth
/// point of f^{-1}(0) and all downstream invariants are trivial.
bool has_linear_term(const SparsePolynomial& p);

/// Keeps exactly the terms lying on F's supporting hyperplane.
/// Throws FaceMismatch if (normal, offset) is not supporting for p's support.
SparsePolynomial restrict_to_face(const SparsePolynomial& p, const Face& f);

}  // namespace singhodge
