#pragma once

#include "ddpoly/monoid.hpp"
#include "ddpoly/polynomial.hpp"

#include <memory>
#include <string>
#include <vector>

namespace ddpoly {

// Reduced fraction of polynomials; denominator nonzero with lex-leading
// coefficient 1, gcd(num, den) = 1. Canonical, so equality is structural.
class RatFunc {
public:
    explicit RatFunc(int nvars = 0)
        : num_(nvars), den_(Polynomial::constant(nvars, Rational(1))) {}
    RatFunc(Polynomial num, Polynomial den);
    static RatFunc of(Polynomial p);
    static RatFunc constant(int nvars, const Rational& c);

    int nvars() const { return num_.nvars(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_rational() const;      // constant fraction
    Rational rational_value() const;

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc inverse() const;
    bool operator==(const RatFunc&) const = default;

    std::string to_text(const std::vector<std::string>& names) const;

private:
    Polynomial num_, den_;
    void normalize();
};

// delta action on the coefficient field: d/dx_var, or the zero derivation
struct DerivationAction {
    int var = -1;  // -1: zero
    bool operator==(const DerivationAction&) const = default;
};

struct TranslationAction {
    enum class Kind { identity, shift, scale };
    Kind kind = Kind::identity;
    int var = -1;
    Rational factor = Rational(1);  // scale only; nonzero
    bool operator==(const TranslationAction&) const = default;
};

// Computable coefficient field: rational functions over Q in named
// indeterminates, with each delta acting as a derivation and each alpha as
// an automorphism. All assigned actions must pairwise commute; that is
// checked on the indeterminates at construction, which suffices because two
// (twisted) derivations or two endomorphisms agreeing on generators agree
// everywhere.
class GroundField {
public:
    GroundField(Signature sig, std::vector<std::string> indeterminates,
                std::vector<DerivationAction> deltas,
                std::vector<TranslationAction> alphas);

    static std::shared_ptr<const GroundField> constants(Signature sig);

    const Signature& signature() const { return sig_; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& indeterminates() const { return vars_; }
    int var_index(const std::string& name) const;  // -1 when absent

    RatFunc zero() const { return RatFunc(nvars()); }
    RatFunc one() const { return RatFunc::constant(nvars(), Rational(1)); }
    RatFunc constant(const Rational& c) const {
        return RatFunc::constant(nvars(), c);
    }
    RatFunc indeterminate(int idx) const;

    RatFunc apply_delta(int i, const RatFunc& a) const;
    RatFunc apply_alpha(int j, const RatFunc& a) const;
    // alpha_j^-1 on a scalar; the only inversive feature the engine needs
    RatFunc apply_alpha_inverse(int j, const RatFunc& a) const;

    bool same_structure(const GroundField& o) const;

private:
    Signature sig_;
    std::vector<std::string> vars_;
    std::vector<DerivationAction> deltas_;
    std::vector<TranslationAction> alphas_;

    void validate_actions() const;
};

}  // namespace ddpoly
