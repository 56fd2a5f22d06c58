#pragma once

#include <stdexcept>
#include <string>

namespace m3c {

/// Raised when a caller breaks an operation's precondition (shape mismatch, bad index).
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Invalid solver or generator configuration. The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input file. The CLI maps this to exit code 3.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class VersionError : public ParseError {
public:
    using ParseError::ParseError;
};

} // namespace m3c
