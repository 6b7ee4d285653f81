#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace singhodge {

/// Element of Z[T, T^-1]; the zero polynomial stores no coefficients.
class LaurentPolynomialZ {
public:
    LaurentPolynomialZ() = default;

    static LaurentPolynomialZ monomial(int degree, std::int64_t c) {
        LaurentPolynomialZ p;
        p.add(degree, c);
        return p;
    }

    std::int64_t coeff(int degree) const {
        const auto it = coeffs_.find(degree);
        return it == coeffs_.end() ? 0 : it->second;
    }

    void add(int degree, std::int64_t c) {
        if (c == 0) return;
        const auto [it, inserted] = coeffs_.emplace(degree, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<int, std::int64_t>& coeffs() const { return coeffs_; }

    friend LaurentPolynomialZ operator+(const LaurentPolynomialZ& a, const LaurentPolynomialZ& b);
    friend LaurentPolynomialZ operator-(const LaurentPolynomialZ& a, const LaurentPolynomialZ& b);
    friend LaurentPolynomialZ operator*(const LaurentPolynomialZ& a, const LaurentPolynomialZ& b);
    LaurentPolynomialZ operator-() const;
    bool operator==(const LaurentPolynomialZ&) const = default;

    std::string str() const;

private:
    std::map<int, std::int64_t> coeffs_;
};

/// Keeps exactly the degrees <= i0 (resp. >= i0).
LaurentPolynomialZ trun_le(const LaurentPolynomialZ& p, int i0);
LaurentPolynomialZ trun_ge(const LaurentPolynomialZ& p, int i0);

/// T^{2c} p(1/T): degree d goes to 2c - d.
LaurentPolynomialZ reflect(const LaurentPolynomialZ& p, int c);

/// True iff reflect(p, c) == p.
bool is_symmetric(const LaurentPolynomialZ& p, int c);

}  // namespace singhodge
