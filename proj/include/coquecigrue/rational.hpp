#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace coquecigrue {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts an optionally signed integer or "p/q" with a nonzero q, nothing
// else: no whitespace, no decimals, no exponents.
Rational parse_rational(std::string_view text);

// "p" or "p/q" in lowest terms, q > 0. Matches what parse_rational accepts.
std::string rational_to_string(const Rational& q);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

} // namespace coquecigrue
