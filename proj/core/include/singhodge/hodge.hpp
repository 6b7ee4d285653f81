#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "singhodge/errors.hpp"
#include "singhodge/laurent.hpp"
#include "singhodge/monodromy.hpp"

namespace singhodge {

enum class TableKind { MilnorFiber, ICStalk, Link };

/// Dimensions of the weight-graded pieces Gr^W_r H^k. IC-stalk tables vanish
/// for r > k (mixed weights <= 0).
struct WeightTable {
    int n = 0;
    TableKind kind = TableKind::ICStalk;
    std::map<std::pair<int, int>, std::int64_t> entries;  // (k, r) -> dim

    std::int64_t dim(int k, int r) const {
        const auto it = entries.find({k, r});
        return it == entries.end() ? 0 : it->second;
    }
};

struct PurityVerdict {
    bool pure = false;
    std::vector<std::string> witnesses;
};

/// The symmetric polynomial centered at n-1 whose lower truncation is
/// (-1)^{n-1} sum_{lambda != 1} sum_{i=0}^{n-1} (sum_{s>=0} J^lambda_{n-i+2s}) T^i.
LaurentPolynomialZ build_Q3(int n, const JordanBlockData& j);

/// The symmetric polynomial centered at n whose lower truncation is
/// (-1)^{n-1} sum_{i=2}^{n} (sum_{s>=0} J^1_{n+1-i+2s}) T^i.
LaurentPolynomialZ build_Q4(int n, const JordanBlockData& j);

/// dim H^k of the shifted IC stalk: {0:1, n-2:N0} for n >= 3, {0:N0+1} for
/// n = 2. Throws BadDimension for n < 2.
std::map<int, std::int64_t> stalk_cohomology_dims(int n, std::int64_t n0);

/// n >= 3: Gr^W_r H^0 = [r=0], Gr^W_r H^{n-2} = J^1_{n-r-1} for
/// 0 <= r <= n-2. n = 2: Gr^W_0 H^0 = N0 + 1.
WeightTable ic_stalk_weight_table(int n, const JordanBlockData& j);

/// 1 + (-1)^{n-2} sum_{i=0}^{n-2} J^1_{n-i-1} T^i; requires n >= 3 (the n=2
/// stalk is described by its weight table instead).
LaurentPolynomialZ vp_ic_stalk(int n, const JordanBlockData& j);

/// Link cohomology weight tables for n >= 3; satisfies the duality
/// dim Gr^W_r H^k = dim Gr^W_{2(n-1)-r} H^{2n-3-k}.
WeightTable link_weight_table(int n, const JordanBlockData& j);

/// Purity of the IC stalk from either the Jordan data (pure iff J^1_s = 0
/// for s >= 2) or flatness (equivalent); both inputs must agree.
PurityVerdict purity_verdict(int n, const std::optional<JordanBlockData>& j, std::optional<bool> flat);

/// Replays the truncation-and-reflection derivation:
///   1 + reflect(trun_ge(S - Q4, n-1), n-1) - trun_le(S - Q4, n-1)
/// with S (modeling Q1 + Q2 - Q3) symmetric about n-1, default 0. The result
/// equals vp_ic_stalk(n, j) for every valid j and every symmetric S.
LaurentPolynomialZ replay_main_pipeline(int n, const JordanBlockData& j,
                                        const std::optional<LaurentPolynomialZ>& s = {});

}  // namespace singhodge
