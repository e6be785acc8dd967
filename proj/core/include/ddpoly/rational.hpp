#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ddpoly {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(x, i) for arbitrary integer x via the falling-factorial product
// x(x-1)...(x-i+1)/i!. Integer for every integer x, so evaluation of
// binomial-basis polynomials is total on Z.
Integer binomial(const Integer& x, unsigned i);

Integer factorial(unsigned n);

bool is_integral(const Rational& q);

// pre: is_integral(q)
Integer as_integer(const Rational& q);

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);  // "p/q", or "p" when integral

}  // namespace ddpoly
