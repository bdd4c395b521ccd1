#ifndef JKPOWER_ERRORS_HPP
#define JKPOWER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jkpower {

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BoundaryViolation : ValidationError {
    using ValidationError::ValidationError;
};

struct MonotonicityViolation : ValidationError {
    using ValidationError::ValidationError;
};

struct SizeCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeMismatch : ValidationError {
    using ValidationError::ValidationError;
};

struct ZeroVeto : ValidationError {
    using ValidationError::ValidationError;
};

struct EmptyAfterValidation : ValidationError {
    using ValidationError::ValidationError;
};

struct BadParam : ValidationError {
    using ValidationError::ValidationError;
};

struct SingularSystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PreconditionNotMet : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MonotonicitySpotCheckFailed : ValidationError {
    using ValidationError::ValidationError;
};

}  // namespace jkpower

#endif
