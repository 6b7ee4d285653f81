#include <doctest.h>

#include "helpers.hpp"
#include "singhodge/poly.hpp"

using namespace singhodge;

namespace {

Face make_face(std::vector<ExponentVector> verts, IntVector normal, Int offset, int dim) {
    Face f;
    f.vertices = std::move(verts);
    f.normal = std::move(normal);
    f.offset = std::move(offset);
    f.dim = dim;
    return f;
}

}  // namespace

TEST_CASE("parse: plain sums of monomials") {
    const SparsePolynomial p = parse_polynomial("x^3 + y^4");
    CHECK(p.n == 2);
    REQUIRE(p.terms.size() == 2);
    CHECK(p.terms.at({3, 0}) == 1);
    CHECK(p.terms.at({0, 4}) == 1);
}

TEST_CASE("parse: like terms combine and zero terms drop") {
    const SparsePolynomial p = parse_polynomial("x*y - x*y + x^2");
    REQUIRE(p.terms.size() == 1);
    CHECK(p.terms.at({2, 0}) == 1);
}

TEST_CASE("parse: the y^4 + x*y + x^3 support") {
    const SparsePolynomial p = parse_polynomial("y^4 + x*y + x^3");
    CHECK(p.n == 2);
    CHECK(support(p) == test::points({{0, 4}, {1, 1}, {3, 0}}));
}

TEST_CASE("parse: coefficients, juxtaposition, indexed variables") {
    const SparsePolynomial p = parse_polynomial("-1/2*x + 3y^2 - y");
    CHECK(p.terms.at({1, 0}) == Rational(-1, 2));
    CHECK(p.terms.at({0, 2}) == 3);
    CHECK(p.terms.at({0, 1}) == -1);

    const SparsePolynomial q = parse_polynomial("x1^2 + x5");
    CHECK(q.n == 5);
    CHECK(q.terms.count({2, 0, 0, 0, 0}) == 1);
    CHECK(q.terms.count({0, 0, 0, 0, 1}) == 1);

    // Letters alias indices: y is x2.
    const SparsePolynomial r = parse_polynomial("x2*y + z^2");
    CHECK(r.n == 3);
    CHECK(r.terms.at({0, 2, 0}) == 1);
}

TEST_CASE("parse: explicit variable names") {
    const SparsePolynomial p = parse_polynomial("u^2 + v", std::vector<std::string>{"u", "v"});
    CHECK(p.n == 2);
    CHECK(p.terms.count({2, 0}) == 1);
    CHECK_THROWS_AS(parse_polynomial("t", std::vector<std::string>{"u", "v"}), SyntaxError);
}

TEST_CASE("parse: errors") {
    CHECK_THROWS_AS(parse_polynomial(""), SyntaxError);
    CHECK_THROWS_AS(parse_polynomial("x ++ y"), SyntaxError);
    CHECK_THROWS_AS(parse_polynomial("x y"), SyntaxError);
    CHECK_THROWS_AS(parse_polynomial("q^2"), SyntaxError);
    CHECK_THROWS_AS(parse_polynomial("x^-2"), SyntaxError);
    CHECK_THROWS_AS(parse_polynomial("1/0*x"), SyntaxError);
    CHECK_THROWS_AS(parse_polynomial("x^2 + 1"), NonzeroConstantTerm);
    CHECK_THROWS_AS(parse_polynomial("x - x + 5"), NonzeroConstantTerm);
    CHECK_THROWS_AS(parse_polynomial("x - x"), EmptyPolynomial);
    CHECK_THROWS_AS(parse_polynomial("x*y - 1/2*x*y - 1/2*y*x"), EmptyPolynomial);
}

TEST_CASE("support is the key set") {
    SparsePolynomial p;
    p.n = 2;
    p.terms[{2, 0}] = 1;
    p.terms[{0, 2}] = 3;
    CHECK(support(p) == test::points({{2, 0}, {0, 2}}));
    SparsePolynomial empty;
    empty.n = 2;
    CHECK(support(empty).empty());
}

TEST_CASE("has_linear_term") {
    SparsePolynomial p;
    p.n = 2;
    p.terms[{1, 0}] = 1;
    p.terms[{0, 2}] = 1;
    CHECK(has_linear_term(p));
    CHECK_FALSE(has_linear_term(parse_polynomial("y^4 + x*y + x^3")));
    CHECK(has_linear_term(parse_polynomial("x^2 + y^2 + z")));
}

TEST_CASE("restrict_to_face keeps exactly the terms on the face") {
    const SparsePolynomial p = parse_polynomial("y^4 + x*y + x^3");
    const Face edge = make_face({{0, 4}, {1, 1}}, {3, 1}, 4, 1);
    const SparsePolynomial q = restrict_to_face(p, edge);
    CHECK(support(q) == test::points({{0, 4}, {1, 1}}));

    const Face vertex = make_face({{1, 1}}, {2, 1}, 3, 0);
    CHECK(support(restrict_to_face(p, vertex)) == test::points({{1, 1}}));
}

TEST_CASE("restrict_to_face keeps interior lattice terms of the face") {
    // (2,2) satisfies the supporting equality x + y = 4 of the edge
    // {(4,0), (0,4)}, so the restriction keeps the whole polynomial.
    const SparsePolynomial p = parse_polynomial("x^4 + x^2*y^2 + y^4");
    const Face edge = make_face({{0, 4}, {4, 0}}, {1, 1}, 4, 1);
    CHECK(dot(edge.normal, ExponentVector{2, 2}) == edge.offset);
    CHECK(support(restrict_to_face(p, edge)) == support(p));
}

TEST_CASE("restrict_to_face rejects non-supporting hyperplanes") {
    const SparsePolynomial p = parse_polynomial("y^4 + x*y + x^3");
    CHECK_THROWS_AS(restrict_to_face(p, make_face({{0, 4}}, {1, 1}, 3, 0)), FaceMismatch);  // cuts support
    CHECK_THROWS_AS(restrict_to_face(p, make_face({{0, 4}}, {1, 1}, 0, 0)), FaceMismatch);  // never touches
}

TEST_CASE("canonical round-trip: parse . print . parse = parse") {
    std::mt19937_64 rng(20240811);
    for (int iter = 0; iter < 200; ++iter) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const SparsePolynomial p = test::random_poly(rng, n);
        const SparsePolynomial q = parse_polynomial(to_string(p), test::names_for(n));
        CHECK(q.n == p.n);
        CHECK(q.terms == p.terms);
    }
}

TEST_CASE("restriction properties: support intersection and idempotence") {
    std::mt19937_64 rng(77);
    for (int iter = 0; iter < 100; ++iter) {
        const int n = 2 + static_cast<int>(rng() % 2);
        const SparsePolynomial p = test::random_poly(rng, n);
        // Supporting hyperplane of the minimizing terms for a positive weight.
        IntVector w(n);
        for (int i = 0; i < n; ++i) w[i] = 1 + static_cast<std::int64_t>(rng() % 3);
        Int best = 0;
        bool first = true;
        for (const auto& [a, c] : p.terms) {
            const Int v = dot(w, a);
            if (first || v < best) best = v;
            first = false;
        }
        Face f;
        f.normal = w;
        f.offset = best;
        f.dim = 0;
        const SparsePolynomial q = restrict_to_face(p, f);
        std::set<ExponentVector> expected;
        for (const auto& a : support(p)) {
            if (dot(w, a) == best) expected.insert(a);
        }
        CHECK(support(q) == expected);
        const SparsePolynomial qq = restrict_to_face(q, f);
        CHECK(qq.terms == q.terms);
    }
}
