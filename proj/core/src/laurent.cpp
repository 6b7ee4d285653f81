#include "singhodge/laurent.hpp"

#include <sstream>

namespace singhodge {

LaurentPolynomialZ operator+(const LaurentPolynomialZ& a, const LaurentPolynomialZ& b) {
    LaurentPolynomialZ r = a;
    for (const auto& [d, c] : b.coeffs_) r.add(d, c);
    return r;
}

LaurentPolynomialZ operator-(const LaurentPolynomialZ& a, const LaurentPolynomialZ& b) {
    LaurentPolynomialZ r = a;
    for (const auto& [d, c] : b.coeffs_) r.add(d, -c);
    return r;
}

LaurentPolynomialZ operator*(const LaurentPolynomialZ& a, const LaurentPolynomialZ& b) {
    LaurentPolynomialZ r;
    for (const auto& [da, ca] : a.coeffs_) {
        for (const auto& [db, cb] : b.coeffs_) r.add(da + db, ca * cb);
    }
    return r;
}

LaurentPolynomialZ LaurentPolynomialZ::operator-() const {
    LaurentPolynomialZ r;
    for (const auto& [d, c] : coeffs_) r.add(d, -c);
    return r;
}

std::string LaurentPolynomialZ::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : coeffs_) {
        const std::int64_t abs_c = c < 0 ? -c : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (d == 0) {
            os << abs_c;
        } else {
            if (abs_c != 1) os << abs_c << "*";
            os << "T";
            if (d != 1) os << "^" << d;
        }
    }
    return os.str();
}

LaurentPolynomialZ trun_le(const LaurentPolynomialZ& p, int i0) {
    LaurentPolynomialZ r;
    for (const auto& [d, c] : p.coeffs()) {
        if (d <= i0) r.add(d, c);
    }
    return r;
}

LaurentPolynomialZ trun_ge(const LaurentPolynomialZ& p, int i0) {
    LaurentPolynomialZ r;
    for (const auto& [d, c] : p.coeffs()) {
        if (d >= i0) r.add(d, c);
    }
    return r;
}

LaurentPolynomialZ reflect(const LaurentPolynomialZ& p, int c) {
    LaurentPolynomialZ r;
    for (const auto& [d, coeff] : p.coeffs()) r.add(2 * c - d, coeff);
    return r;
}

bool is_symmetric(const LaurentPolynomialZ& p, int c) {
    return reflect(p, c) == p;
}

}  // namespace singhodge
