#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace geoscale {

/// Arbitrary-precision signed integer.
using ExactInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, kept canonical (lowest terms, positive
/// denominator) by the backend after every operation.
using ExactRatio = boost::multiprecision::cpp_rational;

/// Malformed textual input (JSON, numbers, flag values).
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Structurally valid input that violates a documented precondition.
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

ExactInt num(const ExactRatio& q);
ExactInt den(const ExactRatio& q);

std::string to_string(const ExactInt& v);

/// Formats as "p/q", or just "p" when the denominator is 1.
std::string ratio_str(const ExactRatio& q);

/// Accepts "p" or "p/q" with decimal integer parts; q must be positive.
ExactRatio parse_ratio(const std::string& text);

/// Strict decimal integer: optional leading '-', then digits only.
ExactInt parse_int(const std::string& text);

ExactInt ceil_ratio(const ExactRatio& q);

/// base**exp for exp >= 0.
ExactInt pow_int(const ExactInt& base, unsigned exp);

/// Number of binary digits of |v|; 0 for v = 0.
unsigned bit_length(const ExactInt& v);

} // namespace geoscale
