#include "invseq/bigint.hpp"

#include <stdexcept>

namespace invseq {

BigInt exact_div(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::logic_error("exact_div: division by zero");
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) {
    throw std::logic_error("exact_div: " + num.str() + " / " + den.str() + " is not integral");
  }
  return q;
}

BigInt require_integer(const Rational& value) {
  if (boost::multiprecision::denominator(value) != 1) {
    throw std::logic_error("require_integer: " + value.str() + " is not integral");
  }
  return boost::multiprecision::numerator(value);
}

std::string to_string(const BigInt& value) { return value.str(); }
std::string to_string(const Rational& value) { return value.str(); }

}  // namespace invseq
