#ifndef PCINPAINT_ERRORS_HPP
#define PCINPAINT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pcinpaint {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// File cannot be opened, read or written.
class IoError : public Error {
public:
    using Error::Error;
};

// Malformed file content; the message names the offending line where possible.
class ParseError : public Error {
public:
    using Error::Error;
};

// Caller violated an operation precondition (bad k, size mismatch, ...).
class ArgumentError : public Error {
public:
    using Error::Error;
};

// Input is structurally valid but degenerate (coincident points, cancelling
// normals, zero scale).
class DegenerateInputError : public Error {
public:
    using Error::Error;
};

// Problem size exceeds a configured cap.
class CapacityError : public Error {
public:
    using Error::Error;
};

// Invalid configuration value or combination.
class ConfigError : public Error {
public:
    using Error::Error;
};

// A numerical routine failed to reach its required accuracy.
class NumericalError : public Error {
public:
    using Error::Error;
};

// Source-to-target registration failed for one candidate; callers fall back
// to the next-best candidate.
class RegistrationError : public Error {
public:
    using Error::Error;
};

// No usable candidate cube remains for a hole.
class NoCandidateError : public Error {
public:
    using Error::Error;
};

} // namespace pcinpaint

#endif // PCINPAINT_ERRORS_HPP
