#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace domikit {

/// Exact signed integer used for every domination value.
using Integer = boost::multiprecision::cpp_int;

/// Exact rational used by the rational reliability mode.
using Rational = boost::multiprecision::cpp_rational;

/// Exact binomial coefficient, zero outside 0 <= k <= n.
Integer binomial(std::int64_t n, std::int64_t k);

inline int parity_sign(std::int64_t exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace domikit
