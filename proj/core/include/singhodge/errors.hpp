#pragma once

#include <stdexcept>
#include <string>

namespace singhodge {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parser errors.
struct SyntaxError : Error {
    using Error::Error;
};
struct NonzeroConstantTerm : Error {
    using Error::Error;
};
struct EmptyPolynomial : Error {
    using Error::Error;
};

// Geometry errors.
struct FaceMismatch : Error {
    using Error::Error;
};
struct NotConvenient : Error {
    using Error::Error;
};

// Jordan-data errors.
struct EigenvalueOne : Error {
    using Error::Error;
};
struct InvalidJordanData : Error {
    using Error::Error;
};

// Weight-calculus errors.
struct BadDimension : Error {
    using Error::Error;
};
struct InconsistentInputs : Error {
    using Error::Error;
};
struct InsufficientData : Error {
    using Error::Error;
};
struct AsymmetricS : Error {
    using Error::Error;
};

}  // namespace singhodge
