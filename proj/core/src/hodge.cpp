#include "singhodge/hodge.hpp"

#include <cassert>

namespace singhodge {

namespace {

void require_valid(const JordanBlockData& j) {
    if (const auto v = validate_jordan_data(j); !v.empty()) throw InvalidJordanData(v.front());
}

// Completes a lower half (degrees <= center) to the symmetric polynomial
// centered at `center`.
LaurentPolynomialZ mirror_upper(const LaurentPolynomialZ& lower, int center) {
    LaurentPolynomialZ p = lower;
    for (const auto& [d, c] : lower.coeffs()) {
        if (d < center) p.add(2 * center - d, c);
    }
    return p;
}

}  // namespace

LaurentPolynomialZ build_Q3(int n, const JordanBlockData& j) {
    require_valid(j);
    const std::int64_t sign = (n - 1) % 2 == 0 ? 1 : -1;
    LaurentPolynomialZ lower;
    for (const Eigenvalue& lambda : j.eigenvalues()) {
        if (lambda.is_one()) continue;
        for (int i = 0; i <= n - 1; ++i) lower.add(i, sign * j.count_every_other(lambda, n - i));
    }
    LaurentPolynomialZ q3 = mirror_upper(lower, n - 1);
    assert(is_symmetric(q3, n - 1));
    return q3;
}

LaurentPolynomialZ build_Q4(int n, const JordanBlockData& j) {
    require_valid(j);
    const std::int64_t sign = (n - 1) % 2 == 0 ? 1 : -1;
    LaurentPolynomialZ lower;
    for (int i = 2; i <= n; ++i) lower.add(i, sign * j.count_every_other(Eigenvalue::one(), n + 1 - i));
    LaurentPolynomialZ q4 = mirror_upper(lower, n);
    assert(is_symmetric(q4, n));
    return q4;
}

std::map<int, std::int64_t> stalk_cohomology_dims(int n, std::int64_t n0) {
    if (n < 2) throw BadDimension("stalk dimensions require n >= 2");
    std::map<int, std::int64_t> dims;
    if (n == 2) {
        dims[0] = n0 + 1;
    } else {
        dims[0] = 1;
        dims[n - 2] = n0;
    }
    return dims;
}

WeightTable ic_stalk_weight_table(int n, const JordanBlockData& j) {
    if (n < 2) throw BadDimension("IC stalk tables require n >= 2");
    require_valid(j);
    WeightTable t;
    t.n = n;
    t.kind = TableKind::ICStalk;
    if (n == 2) {
        t.entries[{0, 0}] = invariant_dimension_N0(j) + 1;
        return t;
    }
    t.entries[{0, 0}] = 1;
    for (int r = 0; r <= n - 2; ++r) t.entries[{n - 2, r}] = j.count(Eigenvalue::one(), n - r - 1);
    return t;
}

LaurentPolynomialZ vp_ic_stalk(int n, const JordanBlockData& j) {
    if (n < 3) throw BadDimension("vp_ic_stalk requires n >= 3; use the n=2 weight table");
    require_valid(j);
    const std::int64_t sign = (n - 2) % 2 == 0 ? 1 : -1;
    LaurentPolynomialZ p = LaurentPolynomialZ::monomial(0, 1);
    for (int i = 0; i <= n - 2; ++i) p.add(i, sign * j.count(Eigenvalue::one(), n - i - 1));
    return p;
}

WeightTable link_weight_table(int n, const JordanBlockData& j) {
    if (n < 3) throw BadDimension("link tables require n >= 3");
    require_valid(j);
    WeightTable t;
    t.n = n;
    t.kind = TableKind::Link;
    t.entries[{0, 0}] = 1;
    t.entries[{2 * n - 3, 2 * (n - 1)}] = 1;
    for (int r = 0; r <= n - 2; ++r) {
        const std::int64_t d = j.count(Eigenvalue::one(), n - r - 1);
        t.entries[{n - 2, r}] = d;
        t.entries[{n - 1, 2 * (n - 1) - r}] = d;
    }
    return t;
}

PurityVerdict purity_verdict(int n, const std::optional<JordanBlockData>& j, std::optional<bool> flat) {
    if (n < 3) throw BadDimension("the purity equivalences require n >= 3");
    if (!j && !flat) throw InsufficientData("purity needs Jordan data or a flatness verdict");
    std::optional<bool> from_j;
    if (j) {
        require_valid(*j);
        bool pure = true;
        for (int s = 2; s <= n - 1; ++s) {
            if (j->count(Eigenvalue::one(), s) != 0) pure = false;
        }
        from_j = pure;
    }
    if (j && flat && *from_j != *flat)
        throw InconsistentInputs("Jordan data and flatness disagree about purity");
    PurityVerdict verdict;
    verdict.pure = from_j ? *from_j : *flat;
    if (from_j) {
        verdict.witnesses.push_back(*from_j ? "no Jordan block of size > 1 for eigenvalue 1"
                                            : "a Jordan block of size > 1 for eigenvalue 1 exists");
    }
    if (flat) {
        verdict.witnesses.push_back(*flat ? "the Newton polyhedron is flat"
                                          : "the Newton polyhedron is not flat");
    }
    return verdict;
}

LaurentPolynomialZ replay_main_pipeline(int n, const JordanBlockData& j,
                                        const std::optional<LaurentPolynomialZ>& s) {
    if (n < 3) throw BadDimension("the pipeline replay requires n >= 3");
    require_valid(j);
    const LaurentPolynomialZ sym = s.value_or(LaurentPolynomialZ{});
    if (!is_symmetric(sym, n - 1)) throw AsymmetricS("S must be symmetric about n-1");
    const LaurentPolynomialZ a = sym - build_Q4(n, j);
    LaurentPolynomialZ result = LaurentPolynomialZ::monomial(0, 1);
    result = result + reflect(trun_ge(a, n - 1), n - 1) - trun_le(a, n - 1);
    return result;
}

}  // namespace singhodge
