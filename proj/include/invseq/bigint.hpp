#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace invseq {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Quotient of an integer division that must leave no remainder. A nonzero
/// remainder means a closed form was implemented wrongly, so it throws
/// std::logic_error rather than rounding.
BigInt exact_div(const BigInt& num, const BigInt& den);

/// Converts an exact rational that must be integral.
BigInt require_integer(const Rational& value);

std::string to_string(const BigInt& value);
std::string to_string(const Rational& value);

}  // namespace invseq
