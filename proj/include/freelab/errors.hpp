#pragma once

#include <stdexcept>
#include <string>

namespace freelab {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
    using Error::Error;
};
struct NotHomogeneousError : Error {
    using Error::Error;
};
struct ZeroPolynomialError : Error {
    using Error::Error;
};
struct AxisContainedError : Error {
    using Error::Error;
};
struct DivisionNotExactError : Error {
    using Error::Error;
};
struct DegreeTooHighError : Error {
    using Error::Error;
};
struct NonReducedInputError : Error {
    using Error::Error;
};
struct RoutesDisagreeError : Error {
    using Error::Error;
};
struct InconsistentResolutionError : Error {
    using Error::Error;
};
struct NoRelationError : Error {
    using Error::Error;
};
struct RankTooHighError : Error {
    using Error::Error;
};
struct TypeTwoPointError : Error {
    using Error::Error;
};
struct NotLocallyIrreducibleError : Error {
    using Error::Error;
};
struct HypothesisViolatedError : Error {
    using Error::Error;
};

// misuse of an internal contract; always indicates a bug in the caller
struct InvalidArgument : Error {
    using Error::Error;
};

}  // namespace freelab
