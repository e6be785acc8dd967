#pragma once

#include "ddpoly/errors.hpp"
#include "ddpoly/rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ddpoly {

// Dense polynomial in t; index = power of t.
using Dense = std::vector<Rational>;

// Dense expansion of C(t + shift, lower).
Dense binomial_dense(long long shift, unsigned lower);

Rational eval_dense(const Dense& p, const Integer& t);

// Sum a_i * C(t+i, i) with integer a_i. Trailing zeros trimmed; the zero
// polynomial has degree -1.
class NumericalPolynomial {
public:
    NumericalPolynomial() = default;
    explicit NumericalPolynomial(std::vector<Integer> binom_coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Integer>& coeffs() const { return coeffs_; }
    Integer coeff(int i) const;

    Integer eval(const Integer& r) const;
    Dense to_dense() const;

    NumericalPolynomial operator+(const NumericalPolynomial& o) const;
    NumericalPolynomial operator-(const NumericalPolynomial& o) const;
    NumericalPolynomial scaled(const Integer& c) const;
    bool operator==(const NumericalPolynomial&) const = default;

    // "3*C(t+2,2) + C(t+1,1) - 2"; "0" for zero
    std::string to_text() const;

private:
    std::vector<Integer> coeffs_;
};

// Unique binomial-basis form. Throws NotNumerical when a normalized
// coefficient is not an integer.
NumericalPolynomial to_binomial_basis(const Dense& dense);

// Fits the unique polynomial of degree <= degree_bound through the first
// degree_bound+1 points and checks it against every remaining point.
// Points must be consecutive in r. Throws WindowTooSmall /
// NotEventuallyPolynomial.
NumericalPolynomial interpolate(
    const std::vector<std::pair<long long, Integer>>& values, int degree_bound);

struct PolyInvariants {
    int d = -1;        // degree
    Integer c_d = 0;   // leading binomial coefficient
    Integer c_top = 0; // coefficient at index m+n; 0 when d < m+n
    bool operator==(const PolyInvariants&) const = default;
};

// Throws DegreeExceedsCap when deg p > m+n.
PolyInvariants invariants(const NumericalPolynomial& p, int m, int n);

// -1 / 0 / +1 by eventual dominance (sign of the difference's leading
// coefficient).
int compare_eventual(const NumericalPolynomial& a, const NumericalPolynomial& b);

using IndexTuple = std::vector<int>;

// Union over all (p+q)! lexicographic priority orders of the unique maximum
// of E under that order. Throws EmptySet.
std::set<IndexTuple> maximal_index_set(const std::set<IndexTuple>& E);

// Multivariate exact polynomial in the product binomial basis
// prod_k C(t_k + i_k, i_k), with per-axis caps (m_1..m_p, n_1..n_q).
class MultiNumericalPolynomial {
public:
    MultiNumericalPolynomial() = default;
    explicit MultiNumericalPolynomial(std::vector<int> caps);
    MultiNumericalPolynomial(std::vector<int> caps,
                             std::map<IndexTuple, Integer> coeffs);

    const std::vector<int>& caps() const { return caps_; }
    int axes() const { return static_cast<int>(caps_.size()); }
    bool is_zero() const { return coeffs_.empty(); }
    Integer coeff(const IndexTuple& idx) const;
    const std::map<IndexTuple, Integer>& terms() const { return coeffs_; }

    std::set<IndexTuple> support() const;  // E_eta
    Integer eval(const std::vector<Integer>& r) const;
    int total_degree() const;  // -1 for zero
    int degree_in(int axis) const;

    MultiNumericalPolynomial operator+(const MultiNumericalPolynomial& o) const;
    MultiNumericalPolynomial operator-(const MultiNumericalPolynomial& o) const;
    MultiNumericalPolynomial scaled(const Integer& c) const;
    bool operator==(const MultiNumericalPolynomial&) const = default;

    std::string to_text() const;

private:
    std::vector<int> caps_;
    std::map<IndexTuple, Integer> coeffs_;  // nonzero entries only
};

using MultiDense = std::map<IndexTuple, Rational>;  // exponent tuple -> coeff

MultiNumericalPolynomial to_multi_binomial_basis(const MultiDense& dense,
                                                 const std::vector<int>& caps);

struct MultiInvariants {
    int total_degree = -1;
    std::map<IndexTuple, Integer> top_terms;  // terms of maximal total degree
    Integer a_caps = 0;                       // coefficient at the full-cap index
    std::set<IndexTuple> support;             // E_eta
    std::set<IndexTuple> support_maxima;      // E'_eta
};

// support_maxima throws EmptySet for the zero polynomial.
MultiInvariants multi_invariants(const MultiNumericalPolynomial& p);

}  // namespace ddpoly
