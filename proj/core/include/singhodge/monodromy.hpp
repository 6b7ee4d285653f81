#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "singhodge/errors.hpp"
#include "singhodge/laurent.hpp"
#include "singhodge/newton.hpp"

namespace singhodge {

/// A root of unity exp(2 pi i k/m), stored as the reduced rotation k/m with
/// 0 <= k < m. The eigenvalue 1 is exactly 0/1.
struct Eigenvalue {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Eigenvalue one() { return {0, 1}; }
    static Eigenvalue rotation(std::int64_t k, std::int64_t m);
    /// Parses "k/m"; throws InvalidJordanData on malformed input.
    static Eigenvalue parse(const std::string& text);

    bool is_one() const { return num == 0; }
    std::int64_t order() const { return den; }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    auto operator<=>(const Eigenvalue&) const = default;
};

/// Jordan block counts J^lambda_s of the Milnor monodromy.
struct JordanBlockData {
    int n = 0;
    std::map<std::pair<Eigenvalue, int>, std::int64_t> blocks;  // (eigenvalue, size) -> count > 0

    void add(const Eigenvalue& e, int size, std::int64_t count);
    std::int64_t count(const Eigenvalue& e, int size) const;
    /// J^lambda_{start} + J^lambda_{start+2} + ... (sizes capped by validation).
    std::int64_t count_every_other(const Eigenvalue& e, int start) const;
    std::set<Eigenvalue> eigenvalues() const;
};

/// Size-bound violations of the monodromy theorem: s <= n for lambda != 1,
/// s <= n-1 for lambda = 1. Returns messages, empty when valid.
std::vector<std::string> validate_jordan_data(const JordanBlockData& j);

inline bool is_valid(const JordanBlockData& j) { return validate_jordan_data(j).empty(); }

/// What the Newton boundary determines directly: the lattice distances d_i
/// of the interior vertices (governing the size-n blocks for lambda != 1)
/// and Pi_f = J^1_{n-1}.
struct PartialJordanData {
    std::multiset<std::int64_t> top_distances;
    std::int64_t sub_top_for_one = 0;
};

/// Throws NotConvenient when the boundary does not come from a convenient
/// support (the formulas require convenience and non-degeneracy at 0).
PartialJordanData jordan_from_geometry(const NewtonBoundary& boundary, int n);

/// #{d_i : lambda^{d_i} = 1} = #{d_i : order(lambda) | d_i} = J^lambda_n.
/// Throws EigenvalueOne for lambda = 1.
std::int64_t top_block_count(const PartialJordanData& partial, const Eigenvalue& lambda);

/// Weight-graded dimensions of H^{n-1}(F_0)_lambda: for lambda != 1 the
/// table spans [0, 2(n-1)] and is symmetric about n-1 with lower half
/// sum_{s>=0} J^lambda_{n-r+2s}; for lambda = 1 it spans [2, 2(n-1)] and is
/// symmetric about n with lower half sum_{s>=0} J^1_{n+1-r+2s}.
std::map<int, std::int64_t> milnor_weight_table(const JordanBlockData& j, const Eigenvalue& lambda);

/// N_0 = J^1_1 + ... + J^1_{n-1}, the dimension of the monodromy-invariant
/// subspace.
std::int64_t invariant_dimension_N0(const JordanBlockData& j);

/// mu = sum s * J^lambda_s = dim H^{n-1}(F_0).
std::int64_t milnor_number(const JordanBlockData& j);

/// VP(H^{n-1}(F_0)[-(n-1)])(T) = Q3(T) + Q4(T).
LaurentPolynomialZ vp_milnor_fiber(const JordanBlockData& j);

}  // namespace singhodge
