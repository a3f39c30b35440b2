#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ca184 {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Precondition violation (bad probability vector, window too short, ...).
class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

/// Open-window evolution asked for more steps than the light cone allows.
class LightConeError : public Error {
public:
    explicit LightConeError(const std::string& msg) : Error(msg) {}
};

/// A trit configuration has no rule-184 preimage. Carries the violating
/// particle pair as a witness.
class NotInLambdaError : public Error {
public:
    NotInLambdaError(const std::string& msg, std::int64_t i, std::int64_t j)
        : Error(msg), witness_i(i), witness_j(j) {}
    std::int64_t witness_i;
    std::int64_t witness_j;
};

/// Partner matching on a ring with unequal species counts.
class RingImbalanceError : public Error {
public:
    explicit RingImbalanceError(const std::string& msg) : Error(msg) {}
};

/// A tracer walked outside the recorded space-time sheet.
class HorizonError : public Error {
public:
    explicit HorizonError(const std::string& msg) : Error(msg) {}
};

/// Malformed serialized input.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

} // namespace ca184
