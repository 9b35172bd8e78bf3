#pragma once

#include <stdexcept>
#include <string>

namespace riesz {

/// Operand shapes disagree (vector lengths, tensor arity, slot dims).
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation's documented precondition does not hold.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed textual or JSON input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace riesz
