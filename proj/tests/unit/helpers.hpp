#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "singhodge/monodromy.hpp"
#include "singhodge/poly.hpp"

namespace singhodge::test {

inline std::set<ExponentVector> points(std::initializer_list<ExponentVector> pts) {
    return std::set<ExponentVector>(pts);
}

inline std::vector<std::string> names_for(int n) {
    if (n <= 4) {
        static const std::vector<std::string> letters = {"x", "y", "z", "w"};
        return {letters.begin(), letters.begin() + n};
    }
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

inline SparsePolynomial random_poly(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> nterms(1, 6);
    std::uniform_int_distribution<Exponent> exp(0, 5);
    std::uniform_int_distribution<std::int64_t> num(-4, 4);
    std::uniform_int_distribution<std::int64_t> den(1, 3);
    SparsePolynomial p;
    p.n = n;
    const int target = std::min(nterms(rng), 4 * n);  // n=1 has only 5 nonzero exponents <= 5
    while (static_cast<int>(p.terms.size()) < target) {
        ExponentVector a(n);
        bool zero = true;
        for (int i = 0; i < n; ++i) {
            a[i] = exp(rng);
            if (a[i] > 0) zero = false;
        }
        if (zero) continue;
        std::int64_t nu = num(rng);
        if (nu == 0) nu = 1;
        p.terms[a] = Rational(nu, den(rng));
    }
    return p;
}

inline std::set<ExponentVector> random_support(std::mt19937_64& rng, int n, int max_points,
                                               Exponent max_coord) {
    std::uniform_int_distribution<int> npts(1, max_points);
    std::uniform_int_distribution<Exponent> coord(0, max_coord);
    std::set<ExponentVector> support;
    const int target = npts(rng);
    while (static_cast<int>(support.size()) < target) {
        ExponentVector a(n);
        bool zero = true;
        for (int i = 0; i < n; ++i) {
            a[i] = coord(rng);
            if (a[i] > 0) zero = false;
        }
        if (!zero) support.insert(std::move(a));
    }
    return support;
}

inline JordanBlockData random_jordan(std::mt19937_64& rng, int n) {
    JordanBlockData j;
    j.n = n;
    std::uniform_int_distribution<int> n_eigs(0, 4);
    std::uniform_int_distribution<std::int64_t> order(1, 10);
    std::uniform_int_distribution<std::int64_t> mult(1, 3);
    const int count = n_eigs(rng);
    for (int i = 0; i < count; ++i) {
        const std::int64_t m = order(rng);
        const std::int64_t k = std::uniform_int_distribution<std::int64_t>(0, m - 1)(rng);
        const Eigenvalue eig = Eigenvalue::rotation(k, m);
        const int bound = eig.is_one() ? n - 1 : n;
        j.add(eig, std::uniform_int_distribution<int>(1, bound)(rng), mult(rng));
    }
    return j;
}

}  // namespace singhodge::test
