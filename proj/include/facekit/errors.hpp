#pragma once

#include <stdexcept>
#include <string>

namespace facekit {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConductorMismatchError : Error {
    using Error::Error;
};
struct DivisionByZeroError : Error {
    using Error::Error;
};
struct DimensionMismatchError : Error {
    using Error::Error;
};
struct SingularMatrixError : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct SchemaError : Error {
    using Error::Error;
};
struct ValidationError : Error {
    using Error::Error;
};
struct DegenerateDualityError : Error {
    using Error::Error;
};
struct RigidityFailureError : Error {
    using Error::Error;
};
struct UnknownNameError : Error {
    using Error::Error;
};
struct UnsupportedOperationError : Error {
    using Error::Error;
};

}  // namespace facekit
