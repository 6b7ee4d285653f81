#include "singhodge/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace singhodge {

namespace {

// Row echelon form; returns pivot column per row.
std::vector<int> echelon(QMatrix& m, int ncols) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < ncols && row < static_cast<int>(m.size()); ++col) {
        int sel = -1;
        for (int r = row; r < static_cast<int>(m.size()); ++r) {
            if (m[r][col] != 0) {
                sel = r;
                break;
            }
        }
        if (sel < 0) continue;
        std::swap(m[row], m[sel]);
        const Rational inv = Rational(1) / m[row][col];
        for (int c = col; c < static_cast<int>(m[row].size()); ++c) m[row][c] *= inv;
        for (int r = 0; r < static_cast<int>(m.size()); ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rational factor = m[r][col];
            for (int c = col; c < static_cast<int>(m[r].size()); ++c) m[r][c] -= factor * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int rank(QMatrix m) {
    if (m.empty()) return 0;
    return static_cast<int>(echelon(m, static_cast<int>(m[0].size())).size());
}

std::optional<QVector> hyperplane_normal(const QMatrix& rows, int n) {
    QMatrix m = rows;
    if (m.empty()) m.push_back(QVector(n, 0));
    const std::vector<int> pivots = echelon(m, n);
    if (static_cast<int>(pivots.size()) != n - 1) return std::nullopt;
    // The unique non-pivot column parametrizes the nullspace.
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    int free_col = -1;
    for (int c = 0; c < n; ++c) {
        if (!is_pivot[c]) free_col = c;
    }
    QVector w(n, 0);
    w[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) w[pivots[r]] = -m[r][free_col];
    return w;
}

std::optional<QVector> kernel_vector(const QMatrix& rows, int n) {
    QMatrix m = rows;
    if (m.empty()) m.push_back(QVector(n, 0));
    const std::vector<int> pivots = echelon(m, n);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    int free_col = -1;
    for (int c = 0; c < n && free_col < 0; ++c) {
        if (!is_pivot[c]) free_col = c;
    }
    if (free_col < 0) return std::nullopt;
    QVector w(n, 0);
    w[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) w[pivots[r]] = -m[r][free_col];
    return w;
}

std::optional<QVector> solve(const QMatrix& a, const QVector& b) {
    if (a.empty()) return QVector{};
    const int n = static_cast<int>(a[0].size());
    QMatrix m = a;
    for (std::size_t r = 0; r < m.size(); ++r) m[r].push_back(b[r]);
    const std::vector<int> pivots = echelon(m, n);
    for (std::size_t r = pivots.size(); r < m.size(); ++r) {
        if (m[r][n] != 0) return std::nullopt;
    }
    QVector x(n, 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][n];
    return x;
}

IntVector to_primitive(const QVector& v) {
    Int l = 1;
    for (const Rational& q : v) l = lcm(l, denominator(q));
    IntVector w;
    w.reserve(v.size());
    for (const Rational& q : v) w.push_back(numerator(q) * (l / denominator(q)));
    return make_primitive(std::move(w));
}

IntVector make_primitive(IntVector v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    if (g > 1) {
        for (Int& x : v) x /= g;
    }
    return v;
}

namespace {

// A linear inequality sum_j c_j t_j + c0 >= 0 over the free variables.
struct Inequality {
    QVector coeff;
    Rational constant;
};

bool fm_feasible_point(std::vector<Inequality> ineqs, int nvars, QVector& point) {
    if (nvars == 0) {
        for (const Inequality& q : ineqs) {
            if (q.constant < 0) return false;
        }
        point.clear();
        return true;
    }
    const int k = nvars - 1;
    std::vector<Inequality> rest;
    // t_k >= lower, t_k <= upper, expressed over t_0..t_{k-1}.
    std::vector<Inequality> lowers, uppers;
    for (Inequality& q : ineqs) {
        const Rational c = q.coeff[k];
        q.coeff.resize(k);
        if (c == 0) {
            rest.push_back(std::move(q));
        } else if (c > 0) {
            for (Rational& x : q.coeff) x /= -c;
            q.constant /= -c;
            lowers.push_back(std::move(q));  // t_k >= sum coeff*t + constant
        } else {
            for (Rational& x : q.coeff) x /= -c;
            q.constant /= -c;
            uppers.push_back(std::move(q));  // t_k <= sum coeff*t + constant
        }
    }
    for (const Inequality& lo : lowers) {
        for (const Inequality& up : uppers) {
            Inequality q;
            q.coeff.resize(k);
            for (int j = 0; j < k; ++j) q.coeff[j] = up.coeff[j] - lo.coeff[j];
            q.constant = up.constant - lo.constant;
            rest.push_back(std::move(q));
        }
    }
    if (!fm_feasible_point(std::move(rest), k, point)) return false;
    auto eval = [&](const Inequality& q) {
        Rational s = q.constant;
        for (int j = 0; j < k; ++j) s += q.coeff[j] * point[j];
        return s;
    };
    bool has_lo = false, has_up = false;
    Rational lo, up;
    for (const Inequality& q : lowers) {
        const Rational v = eval(q);
        if (!has_lo || v > lo) lo = v;
        has_lo = true;
    }
    for (const Inequality& q : uppers) {
        const Rational v = eval(q);
        if (!has_up || v < up) up = v;
        has_up = true;
    }
    Rational t;
    if (has_lo && has_up) {
        t = (lo + up) / 2;
    } else if (has_lo) {
        t = lo;
    } else if (has_up) {
        t = up;
    } else {
        t = 0;
    }
    point.push_back(t);
    return true;
}

}  // namespace

std::optional<QVector> positive_kernel_point(const QMatrix& a, int nvars) {
    QMatrix m = a;
    if (m.empty()) m.push_back(QVector(nvars, 0));
    const std::vector<int> pivots = echelon(m, nvars);
    std::vector<bool> is_pivot(nvars, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < nvars; ++c) {
        if (!is_pivot[c]) free_cols.push_back(c);
    }
    const int k = static_cast<int>(free_cols.size());
    // x_i as an affine function of the free variables t.
    auto expr = [&](int i) {
        Inequality q;
        q.coeff.assign(k, Rational(0));
        q.constant = 0;
        if (is_pivot[i]) {
            int r = static_cast<int>(std::find(pivots.begin(), pivots.end(), i) - pivots.begin());
            for (int j = 0; j < k; ++j) q.coeff[j] = -m[r][free_cols[j]];
        } else {
            int j = static_cast<int>(std::find(free_cols.begin(), free_cols.end(), i) - free_cols.begin());
            q.coeff[j] = 1;
        }
        return q;
    };
    std::vector<Inequality> ineqs;
    for (int i = 0; i < nvars; ++i) {
        Inequality q = expr(i);
        q.constant -= 1;  // x_i - 1 >= 0
        ineqs.push_back(std::move(q));
    }
    QVector t;
    if (!fm_feasible_point(std::move(ineqs), k, t)) return std::nullopt;
    QVector x(nvars, 0);
    for (int i = 0; i < nvars; ++i) {
        const Inequality q = expr(i);
        Rational s = q.constant;
        for (int j = 0; j < k; ++j) s += q.coeff[j] * t[j];
        x[i] = s;
        assert(x[i] >= 1);
    }
    return x;
}

}  // namespace singhodge
