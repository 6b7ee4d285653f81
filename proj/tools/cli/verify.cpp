#include "verify.hpp"

#include <algorithm>

#include "oracle.hpp"
#include "report.hpp"
#include "singhodge/hodge.hpp"
#include "singhodge/newton.hpp"

namespace singhodge::cli {

JordanBlockData random_jordan(std::mt19937_64& rng, int n) {
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
        const int size = std::uniform_int_distribution<int>(1, bound)(rng);
        j.add(eig, size, mult(rng));
    }
    return j;
}

LaurentPolynomialZ random_symmetric(std::mt19937_64& rng, int center) {
    std::uniform_int_distribution<std::int64_t> coeff(-3, 3);
    LaurentPolynomialZ s;
    for (int k = 0; k <= 3; ++k) {
        const std::int64_t c = coeff(rng);
        s.add(center - k, c);
        if (k > 0) s.add(center + k, c);
    }
    return s;
}

std::set<ExponentVector> random_support(std::mt19937_64& rng, int n, int max_points, Exponent max_coord) {
    std::uniform_int_distribution<int> npts(1, max_points);
    std::uniform_int_distribution<Exponent> coord(0, max_coord);
    std::set<ExponentVector> support;
    const int target = npts(rng);
    while (static_cast<int>(support.size()) < target) {
        ExponentVector a(n);
        for (int i = 0; i < n; ++i) a[i] = coord(rng);
        if (std::all_of(a.begin(), a.end(), [](Exponent e) { return e == 0; })) continue;
        support.insert(std::move(a));
    }
    return support;
}

namespace {

json support_to_json(const std::set<ExponentVector>& support) {
    json a = json::array();
    for (const auto& p : support) {
        json row = json::array();
        for (Exponent e : p) row.push_back(e);
        a.push_back(row);
    }
    return a;
}

}  // namespace

int run_verify(std::uint64_t seed, int iterations, std::ostream& out, std::ostream& err) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dim(3, 6);
    std::uniform_int_distribution<int> geo_dim(2, 3);
    int pipeline_ok = 0, geometry_ok = 0;
    for (int iter = 0; iter < iterations; ++iter) {
        const int n = dim(rng);
        const JordanBlockData j = random_jordan(rng, n);
        const LaurentPolynomialZ expected = vp_ic_stalk(n, j);
        for (int k = 0; k < 20; ++k) {
            const LaurentPolynomialZ s = random_symmetric(rng, n - 1);
            const LaurentPolynomialZ got = replay_main_pipeline(n, j, s);
            if (got != expected) {
                json dump;
                dump["seed"] = seed;
                dump["iteration"] = iter;
                dump["n"] = n;
                dump["jordan"] = jordan_blocks_to_json(j);
                dump["S"] = laurent_to_json(s);
                dump["replay"] = got.str();
                dump["vp_ic_stalk"] = expected.str();
                err << "pipeline identity failed:\n" << dump.dump(2) << "\n";
                return 4;
            }
        }
        ++pipeline_ok;

        const int gn = geo_dim(rng);
        const auto support = random_support(rng, gn, 8, 6);
        const NewtonPolyhedron np = newton_polyhedron(support, gn);
        const std::set<ExponentVector> got_vertices(np.vertices.begin(), np.vertices.end());
        const std::set<ExponentVector> want_vertices = oracle::brute_hull_vertices(support, gn);
        const NewtonBoundary boundary = newton_boundary(np);
        Exponent bound = 1;
        for (const auto& v : np.vertices) bound = std::max(bound, *std::max_element(v.begin(), v.end()));
        const std::int64_t fast_pi = pi_f(boundary);
        const std::int64_t slow_pi = oracle::brute_pi_f(boundary, bound);
        if (got_vertices != want_vertices || fast_pi != slow_pi) {
            json dump;
            dump["seed"] = seed;
            dump["iteration"] = iter;
            dump["n"] = gn;
            dump["support"] = support_to_json(support);
            dump["vertices"] = support_to_json(got_vertices);
            dump["oracle_vertices"] = support_to_json(want_vertices);
            dump["pi_f"] = fast_pi;
            dump["oracle_pi_f"] = slow_pi;
            err << "geometry oracle disagreement:\n" << dump.dump(2) << "\n";
            return 4;
        }
        ++geometry_ok;
    }
    out << pipeline_ok << "/" << iterations << " pipeline identities hold\n";
    out << geometry_ok << "/" << iterations << " geometry oracle agreements\n";
    return 0;
}

}  // namespace singhodge::cli
