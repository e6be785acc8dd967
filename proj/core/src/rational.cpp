#include "ddpoly/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace ddpoly {

Integer binomial(const Integer& x, unsigned i) {
    Integer num = 1;
    for (unsigned j = 0; j < i; ++j) {
        num *= x - j;
    }
    return num / factorial(i);  // exact: product of i consecutive integers
}

Integer factorial(unsigned n) {
    Integer f = 1;
    for (unsigned j = 2; j <= n; ++j) {
        f *= j;
    }
    return f;
}

bool is_integral(const Rational& q) {
    return boost::multiprecision::denominator(q) == 1;
}

Integer as_integer(const Rational& q) {
    return boost::multiprecision::numerator(q);
}

std::string to_string(const Integer& n) {
    return n.str();
}

std::string to_string(const Rational& q) {
    if (is_integral(q)) {
        return boost::multiprecision::numerator(q).str();
    }
    return boost::multiprecision::numerator(q).str() + "/" +
           boost::multiprecision::denominator(q).str();
}

}  // namespace ddpoly
