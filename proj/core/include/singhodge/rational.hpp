#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace singhodge {

// All core arithmetic is exact: arbitrary-precision integers and rationals.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exponents are small nonnegative integers; wide types are only needed in
// the linear algebra, never for storage.
using Exponent = std::int64_t;
using ExponentVector = std::vector<Exponent>;

using IntVector = std::vector<Int>;
using QVector = std::vector<Rational>;

inline Int dot(const IntVector& w, const ExponentVector& a) {
    Int s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * a[i];
    return s;
}

inline Rational dot(const QVector& w, const QVector& a) {
    Rational s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * a[i];
    return s;
}

}  // namespace singhodge
