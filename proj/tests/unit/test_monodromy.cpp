#include <doctest.h>

#include "helpers.hpp"
#include "singhodge/hodge.hpp"
#include "singhodge/monodromy.hpp"

using namespace singhodge;

namespace {

JordanBlockData jordan(int n, std::initializer_list<std::tuple<std::int64_t, std::int64_t, int, std::int64_t>> blocks) {
    JordanBlockData j;
    j.n = n;
    for (const auto& [k, m, size, count] : blocks) j.add(Eigenvalue::rotation(k, m), size, count);
    return j;
}

NewtonBoundary boundary_of(const std::set<ExponentVector>& support, int n) {
    return newton_boundary(newton_polyhedron(support, n));
}

}  // namespace

TEST_CASE("Eigenvalue: normalization, order, parsing") {
    CHECK(Eigenvalue::rotation(2, 4) == Eigenvalue::rotation(1, 2));
    CHECK(Eigenvalue::rotation(5, 5) == Eigenvalue::one());
    CHECK(Eigenvalue::rotation(-1, 4) == Eigenvalue::rotation(3, 4));
    CHECK(Eigenvalue::one().order() == 1);
    CHECK(Eigenvalue::parse("1/2").order() == 2);
    CHECK(Eigenvalue::parse("0/1").is_one());
    CHECK_THROWS_AS(Eigenvalue::parse("0.5"), InvalidJordanData);
    CHECK_THROWS_AS(Eigenvalue::parse("1/0"), InvalidJordanData);
}

TEST_CASE("validate_jordan_data: monodromy-theorem size bounds") {
    CHECK_FALSE(validate_jordan_data(jordan(3, {{0, 1, 3, 1}})).empty());  // size 3 > n-1 for eigenvalue 1
    CHECK(validate_jordan_data(jordan(3, {{1, 2, 3, 1}})).empty());        // bound is n for lambda != 1
    CHECK(validate_jordan_data(jordan(2, {})).empty());
    CHECK_FALSE(validate_jordan_data(jordan(3, {{1, 2, 4, 1}})).empty());
    CHECK_FALSE(validate_jordan_data(jordan(3, {{0, 1, 0, 1}})).empty());  // sizes start at 1
}

TEST_CASE("jordan_from_geometry") {
    const PartialJordanData fig2 = jordan_from_geometry(boundary_of(test::points({{0, 4}, {1, 1}, {3, 0}}), 2), 2);
    CHECK(fig2.top_distances == std::multiset<std::int64_t>{1});
    CHECK(fig2.sub_top_for_one == 1);

    const PartialJordanData brieskorn =
        jordan_from_geometry(boundary_of(test::points({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}), 3), 3);
    CHECK(brieskorn.top_distances.empty());
    CHECK(brieskorn.sub_top_for_one == 0);

    const PartialJordanData ttype = jordan_from_geometry(
        boundary_of(test::points({{2, 0, 0}, {0, 3, 0}, {0, 0, 7}, {1, 1, 1}}), 3), 3);
    CHECK(ttype.top_distances == std::multiset<std::int64_t>{1});
    CHECK(ttype.sub_top_for_one == 1);

    CHECK_THROWS_AS(jordan_from_geometry(boundary_of(test::points({{1, 1}}), 2), 2), NotConvenient);
}

TEST_CASE("top_block_count: divisibility of lattice distances") {
    PartialJordanData p;
    p.top_distances = {1};
    CHECK(top_block_count(p, Eigenvalue::rotation(1, 2)) == 0);
    p.top_distances = {2, 3, 6};
    CHECK(top_block_count(p, Eigenvalue::rotation(1, 2)) == 2);
    CHECK(top_block_count(p, Eigenvalue::rotation(1, 3)) == 2);
    CHECK(top_block_count(p, Eigenvalue::rotation(1, 6)) == 1);
    p.top_distances = {};
    CHECK(top_block_count(p, Eigenvalue::rotation(1, 5)) == 0);
    CHECK_THROWS_AS(top_block_count(p, Eigenvalue::one()), EigenvalueOne);
}

TEST_CASE("milnor_weight_table: the worked rows") {
    const auto t1 = milnor_weight_table(jordan(3, {{1, 2, 3, 1}}), Eigenvalue::rotation(1, 2));
    CHECK(t1 == std::map<int, std::int64_t>{{0, 1}, {1, 0}, {2, 1}, {3, 0}, {4, 1}});

    const auto t2 = milnor_weight_table(jordan(3, {{0, 1, 2, 1}}), Eigenvalue::one());
    CHECK(t2 == std::map<int, std::int64_t>{{2, 1}, {3, 0}, {4, 1}});

    const auto t3 = milnor_weight_table(jordan(4, {}), Eigenvalue::rotation(1, 3));
    for (const auto& [r, dim] : t3) CHECK(dim == 0);

    CHECK_THROWS_AS(milnor_weight_table(jordan(3, {{0, 1, 3, 1}}), Eigenvalue::one()), InvalidJordanData);
}

TEST_CASE("invariant_dimension_N0 and milnor_number") {
    CHECK(invariant_dimension_N0(jordan(3, {{0, 1, 2, 1}, {0, 1, 1, 2}})) == 3);
    CHECK(invariant_dimension_N0(jordan(3, {{1, 2, 3, 5}})) == 0);
    CHECK(invariant_dimension_N0(jordan(2, {{0, 1, 1, 1}})) == 1);

    CHECK(milnor_number(jordan(3, {{1, 2, 3, 1}})) == 3);
    CHECK(milnor_number(jordan(3, {})) == 0);
    CHECK(milnor_number(jordan(3, {{0, 1, 2, 1}, {0, 1, 1, 2}})) == 4);
}

TEST_CASE("vp_milnor_fiber: worked values") {
    CHECK(vp_milnor_fiber(jordan(3, {{0, 1, 2, 1}})) ==
          LaurentPolynomialZ::monomial(2, 1) + LaurentPolynomialZ::monomial(4, 1));
    CHECK(vp_milnor_fiber(jordan(3, {})).is_zero());
    CHECK(vp_milnor_fiber(jordan(3, {{1, 2, 3, 1}})) ==
          LaurentPolynomialZ::monomial(0, 1) + LaurentPolynomialZ::monomial(2, 1) +
              LaurentPolynomialZ::monomial(4, 1));
}

TEST_CASE("property: table symmetry, sum rule, support bounds") {
    std::mt19937_64 rng(2024);
    for (int iter = 0; iter < 150; ++iter) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const JordanBlockData j = test::random_jordan(rng, n);
        std::set<Eigenvalue> eigs = j.eigenvalues();
        eigs.insert(Eigenvalue::one());
        eigs.insert(Eigenvalue::rotation(1, 7));
        for (const Eigenvalue& lambda : eigs) {
            const auto table = milnor_weight_table(j, lambda);
            const int center = lambda.is_one() ? n : n - 1;
            std::int64_t total = 0;
            for (const auto& [r, dim] : table) {
                CHECK(dim >= 0);
                CHECK(r >= (lambda.is_one() ? 2 : 0));
                CHECK(r <= 2 * (n - 1));
                const auto mirror = table.find(2 * center - r);
                const std::int64_t mirror_dim = mirror == table.end() ? 0 : mirror->second;
                CHECK(dim == mirror_dim);
                total += dim;
            }
            std::int64_t weighted = 0;
            for (const auto& [key, cnt] : j.blocks) {
                if (key.first == lambda) weighted += key.second * cnt;
            }
            CHECK(total == weighted);
        }
    }
}

TEST_CASE("property: vp_milnor_fiber matches the signed table sum") {
    std::mt19937_64 rng(31337);
    for (int iter = 0; iter < 150; ++iter) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const JordanBlockData j = test::random_jordan(rng, n);
        LaurentPolynomialZ expected;
        const std::int64_t sign = (n - 1) % 2 == 0 ? 1 : -1;
        for (const Eigenvalue& lambda : j.eigenvalues()) {
            for (const auto& [r, dim] : milnor_weight_table(j, lambda)) expected.add(r, sign * dim);
        }
        CHECK(vp_milnor_fiber(j) == expected);
    }
}

TEST_CASE("property: top_block_count depends only on the order") {
    PartialJordanData p;
    p.top_distances = {2, 4, 5, 10, 20};
    CHECK(top_block_count(p, Eigenvalue::rotation(1, 5)) == top_block_count(p, Eigenvalue::rotation(2, 5)));
    CHECK(top_block_count(p, Eigenvalue::rotation(1, 10)) == top_block_count(p, Eigenvalue::rotation(7, 10)));
    CHECK(top_block_count(p, Eigenvalue::rotation(1, 4)) == top_block_count(p, Eigenvalue::rotation(3, 4)));
}
