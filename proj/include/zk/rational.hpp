#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace zk {

/// Exact arbitrary-precision rational scalar used throughout the library.
/// Every computation in the engine is carried out over this type; there is
/// no floating point anywhere in the invariant pipelines.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Raised when user-supplied input (monomial strings, JSON, matrices)
/// cannot be parsed.
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised on violated preconditions: parity of a closed graft, matrix
/// shapes, moduli-formula domains, bad extension-class degrees.
struct DomainViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParityViolation : DomainViolation {
    using DomainViolation::DomainViolation;
};

struct ShapeError : DomainViolation {
    using DomainViolation::DomainViolation;
};

/// Raised when a truncation policy reaches its cap before the windowed
/// dimensions agree on two consecutive enlargements.
struct NonStabilized : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Internal-consistency failure: a vector expected to lie in a span does
/// not. Signals a truncation-window bug upstream, never user error.
struct SpanError : std::logic_error {
    using std::logic_error::logic_error;
};

/// "n" or "n/d", exact.
std::string to_string(const Rational& q);

/// Parses "n", "n/d", "-n/d". Throws ParseError on anything else or d = 0.
Rational parse_rational(const std::string& text);

/// Exact conversion to long long; throws DomainViolation if out of range.
long long to_int64(const Integer& n);

}  // namespace zk
