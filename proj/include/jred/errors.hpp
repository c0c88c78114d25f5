#pragma once

#include <stdexcept>
#include <string>

namespace jred {

/// Division (or inversion) by an exact zero.
class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by zero") {}
};

/// A textual Scalar could not be parsed.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SingularMatrix : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// User-supplied input is malformed or names something that does not exist.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exact-arithmetic post-condition failed; indicates a bug, not bad input.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace jred
