#pragma once

#include "ddpoly/errors.hpp"
#include "ddpoly/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace ddpoly {

// Sparse multivariate polynomial over Q in a fixed number of variables.
// Terms keyed by exponent vectors under lex order; zero coefficients never
// stored.
class Polynomial {
public:
    using Key = std::vector<unsigned>;

    explicit Polynomial(int nvars = 0) : nvars_(nvars) {}
    static Polynomial constant(int nvars, const Rational& c);
    static Polynomial variable(int nvars, int index);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // 0 for the zero polynomial
    int degree(int var) const;        // -1 for zero
    int total_degree() const;         // -1 for zero
    int max_var() const;              // largest variable index present, -1 if none

    const std::map<Key, Rational>& terms() const { return terms_; }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial&) const = default;

    Polynomial derivative(int var) const;
    // x_var -> a*x_var + b; a != 0
    Polynomial substitute_linear(int var, const Rational& a,
                                 const Rational& b) const;

    // pre: division is exact; internal error otherwise
    Polynomial divide_exact(const Polynomial& d) const;

    // gcd normalized so the lex-leading coefficient is 1; gcd(0,0) = 0
    static Polynomial gcd(const Polynomial& a, const Polynomial& b);

    // coefficient of x_var^d, as a polynomial with that variable cleared
    Polynomial coefficient_of(int var, int d) const;

    void add_term(const Key& key, const Rational& c);

    std::string to_text(const std::vector<std::string>& names) const;

private:
    int nvars_ = 0;
    std::map<Key, Rational> terms_;
};

}  // namespace ddpoly
