#include <doctest.h>

#include <numeric>

#include "helpers.hpp"
#include "oracle.hpp"

using namespace singhodge;

TEST_CASE("brute_hull_vertices") {
    CHECK(oracle::brute_hull_vertices(test::points({{0, 4}, {2, 2}, {3, 0}}), 2) ==
          test::points({{0, 4}, {3, 0}}));
    CHECK(oracle::brute_hull_vertices(test::points({{0, 4}, {1, 1}, {3, 0}}), 2) ==
          test::points({{0, 4}, {1, 1}, {3, 0}}));
    CHECK(oracle::brute_hull_vertices(test::points({{2, 2}}), 2) == test::points({{2, 2}}));
}

TEST_CASE("in_hull_plus_orthant") {
    // (1,1) is below every convex combination of (0,4) and (3,0).
    CHECK_FALSE(oracle::in_hull_plus_orthant({{0, 4}, {3, 0}}, {1, 1}, 2));
    CHECK(oracle::in_hull_plus_orthant({{0, 4}, {3, 0}}, {2, 2}, 2));
    CHECK(oracle::in_hull_plus_orthant({{1, 1}}, {1, 1}, 2));
    CHECK(oracle::in_hull_plus_orthant({{1, 1}}, {5, 1}, 2));
    CHECK_FALSE(oracle::in_hull_plus_orthant({{1, 1}}, {0, 5}, 2));
}

TEST_CASE("brute_pi_f") {
    const auto boundary = [](const std::set<ExponentVector>& s, int n) {
        return newton_boundary(newton_polyhedron(s, n));
    };
    CHECK(oracle::brute_pi_f(boundary(test::points({{0, 4}, {1, 1}, {3, 0}}), 2), 4) == 1);
    CHECK(oracle::brute_pi_f(boundary(test::points({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}), 3), 2) == 0);
    CHECK(oracle::brute_pi_f(boundary(test::points({{2, 0, 0}, {0, 3, 0}, {0, 0, 7}, {1, 1, 1}}), 3), 7) == 1);
}

TEST_CASE("segment_lattice_points") {
    CHECK(oracle::segment_lattice_points({0, 4}, {3, 0}) ==
          std::vector<ExponentVector>{{0, 4}, {3, 0}});
    CHECK(oracle::segment_lattice_points({4, 0}, {0, 4}) ==
          std::vector<ExponentVector>{{4, 0}, {3, 1}, {2, 2}, {1, 3}, {0, 4}});
    CHECK(oracle::segment_lattice_points({2, 0, 0}, {0, 0, 4}) ==
          std::vector<ExponentVector>{{2, 0, 0}, {1, 0, 2}, {0, 0, 4}});
}

TEST_CASE("property: segment point count is gcd + 1") {
    std::mt19937_64 rng(42);
    for (int iter = 0; iter < 100; ++iter) {
        const int n = 2 + static_cast<int>(rng() % 3);
        ExponentVector a(n), b(n);
        do {
            for (int i = 0; i < n; ++i) {
                a[i] = static_cast<Exponent>(rng() % 9);
                b[i] = static_cast<Exponent>(rng() % 9);
            }
        } while (a == b);
        std::int64_t g = 0;
        for (int i = 0; i < n; ++i) g = std::gcd(g, b[i] - a[i]);
        CHECK(oracle::segment_lattice_points(a, b).size() == static_cast<std::size_t>(g + 1));
    }
}
