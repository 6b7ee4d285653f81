#include "singhodge/monodromy.hpp"

#include <numeric>
#include <sstream>

#include "singhodge/hodge.hpp"

namespace singhodge {

Eigenvalue Eigenvalue::rotation(std::int64_t k, std::int64_t m) {
    if (m <= 0) throw InvalidJordanData("eigenvalue denominator must be positive");
    k %= m;
    if (k < 0) k += m;
    const std::int64_t g = std::gcd(k, m);
    return {k / g, m / g};
}

Eigenvalue Eigenvalue::parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) throw InvalidJordanData("eigenvalue must be a fraction \"k/m\": " + text);
    try {
        const std::int64_t k = std::stoll(text.substr(0, slash));
        const std::int64_t m = std::stoll(text.substr(slash + 1));
        return rotation(k, m);
    } catch (const std::logic_error&) {
        throw InvalidJordanData("malformed eigenvalue: " + text);
    }
}

void JordanBlockData::add(const Eigenvalue& e, int size, std::int64_t count) {
    if (count == 0) return;
    const auto key = std::make_pair(e, size);
    blocks[key] += count;
    if (blocks[key] == 0) blocks.erase(key);
}

std::int64_t JordanBlockData::count(const Eigenvalue& e, int size) const {
    const auto it = blocks.find({e, size});
    return it == blocks.end() ? 0 : it->second;
}

std::int64_t JordanBlockData::count_every_other(const Eigenvalue& e, int start) const {
    std::int64_t total = 0;
    for (int s = start; s <= n + 1; s += 2) {
        if (s >= 1) total += count(e, s);
    }
    return total;
}

std::set<Eigenvalue> JordanBlockData::eigenvalues() const {
    std::set<Eigenvalue> out;
    for (const auto& [key, cnt] : blocks) out.insert(key.first);
    return out;
}

std::vector<std::string> validate_jordan_data(const JordanBlockData& j) {
    std::vector<std::string> violations;
    for (const auto& [key, cnt] : j.blocks) {
        const auto& [eig, size] = key;
        std::ostringstream os;
        if (cnt < 0) {
            os << "negative multiplicity " << cnt << " for (" << eig.str() << ", size " << size << ")";
            violations.push_back(os.str());
            continue;
        }
        if (size < 1) {
            os << "block size " << size << " < 1 for eigenvalue " << eig.str();
            violations.push_back(os.str());
            continue;
        }
        const int bound = eig.is_one() ? j.n - 1 : j.n;
        if (size > bound) {
            os << "block size " << size << " exceeds the bound " << bound << " for eigenvalue " << eig.str()
               << " (monodromy theorem)";
            violations.push_back(os.str());
        }
    }
    return violations;
}

PartialJordanData jordan_from_geometry(const NewtonBoundary& boundary, int n) {
    // Convenient <=> some vertex is a pure power of each variable (the
    // minimal pure power is always extreme).
    for (int i = 0; i < n; ++i) {
        bool found = false;
        for (const Face& f : boundary.faces) {
            if (f.dim != 0) continue;
            const ExponentVector& v = f.vertices[0];
            bool pure = v[i] >= 1;
            for (int k = 0; k < n && pure; ++k) {
                if (k != i && v[k] != 0) pure = false;
            }
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found) throw NotConvenient("support has no pure power of variable " + std::to_string(i + 1));
    }
    PartialJordanData partial;
    for (const InteriorVertexData& iv : interior_vertices(boundary)) partial.top_distances.insert(iv.d);
    partial.sub_top_for_one = pi_f(boundary);
    return partial;
}

std::int64_t top_block_count(const PartialJordanData& partial, const Eigenvalue& lambda) {
    if (lambda.is_one()) throw EigenvalueOne("top_block_count requires lambda != 1");
    std::int64_t count = 0;
    for (std::int64_t d : partial.top_distances) {
        if (d % lambda.order() == 0) ++count;
    }
    return count;
}

std::map<int, std::int64_t> milnor_weight_table(const JordanBlockData& j, const Eigenvalue& lambda) {
    if (const auto v = validate_jordan_data(j); !v.empty()) throw InvalidJordanData(v.front());
    const int n = j.n;
    std::map<int, std::int64_t> table;
    if (lambda.is_one()) {
        // Supported on [2, 2(n-1)], symmetric about n.
        for (int r = 2; r <= n; ++r) table[r] = j.count_every_other(lambda, n + 1 - r);
        for (int r = n + 1; r <= 2 * (n - 1); ++r) table[r] = table[2 * n - r];
    } else {
        // Supported on [0, 2(n-1)], symmetric about n-1.
        for (int r = 0; r <= n - 1; ++r) table[r] = j.count_every_other(lambda, n - r);
        for (int r = n; r <= 2 * (n - 1); ++r) table[r] = table[2 * (n - 1) - r];
    }
    return table;
}

std::int64_t invariant_dimension_N0(const JordanBlockData& j) {
    std::int64_t total = 0;
    for (int s = 1; s <= j.n - 1; ++s) total += j.count(Eigenvalue::one(), s);
    return total;
}

std::int64_t milnor_number(const JordanBlockData& j) {
    std::int64_t total = 0;
    for (const auto& [key, cnt] : j.blocks) total += key.second * cnt;
    return total;
}

LaurentPolynomialZ vp_milnor_fiber(const JordanBlockData& j) {
    return build_Q3(j.n, j) + build_Q4(j.n, j);
}

}  // namespace singhodge
