#include "ddpoly/groundfield.hpp"

#include <algorithm>

namespace ddpoly {

RatFunc::RatFunc(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (num_.nvars() != den_.nvars()) {
        throw Error("ValidationError", "fraction parts over different rings");
    }
    if (den_.is_zero()) {
        throw Error("ValidationError", "zero denominator");
    }
    normalize();
}

RatFunc RatFunc::of(Polynomial p) {
    int nv = p.nvars();
    return RatFunc(std::move(p), Polynomial::constant(nv, Rational(1)));
}

RatFunc RatFunc::constant(int nvars, const Rational& c) {
    return RatFunc(Polynomial::constant(nvars, c),
                   Polynomial::constant(nvars, Rational(1)));
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial::constant(num_.nvars(), Rational(1));
        return;
    }
    Polynomial g = Polynomial::gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = num_.divide_exact(g);
        den_ = den_.divide_exact(g);
    }
    Rational lead = den_.terms().rbegin()->second;
    if (lead != 1) {
        Polynomial unit = Polynomial::constant(num_.nvars(), Rational(1) / lead);
        num_ = num_ * unit;
        den_ = den_ * unit;
    }
}

bool RatFunc::is_one() const {
    return den_.is_constant() && num_.is_constant() &&
           num_.constant_value() == den_.constant_value() && !num_.is_zero();
}

bool RatFunc::is_rational() const {
    return num_.is_constant() && den_.is_constant();
}

Rational RatFunc::rational_value() const {
    if (!is_rational()) {
        throw Error("ValidationError", "not a constant fraction");
    }
    return num_.constant_value() / den_.constant_value();
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw Error("ValidationError", "division by zero");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw Error("ValidationError", "inverse of zero");
    return RatFunc(den_, num_);
}

std::string RatFunc::to_text(const std::vector<std::string>& names) const {
    if (den_.is_constant() && den_.constant_value() == 1) {
        return num_.to_text(names);
    }
    return "(" + num_.to_text(names) + ")/(" + den_.to_text(names) + ")";
}

GroundField::GroundField(Signature sig, std::vector<std::string> indeterminates,
                         std::vector<DerivationAction> deltas,
                         std::vector<TranslationAction> alphas)
    : sig_(sig),
      vars_(std::move(indeterminates)),
      deltas_(std::move(deltas)),
      alphas_(std::move(alphas)) {
    if (static_cast<int>(deltas_.size()) != sig_.derivations ||
        static_cast<int>(alphas_.size()) != sig_.translations) {
        throw Error("ValidationError", "one action per basic operator expected");
    }
    for (const auto& d : deltas_) {
        if (d.var < -1 || d.var >= nvars()) {
            throw Error("ValidationError", "derivation targets unknown variable");
        }
    }
    for (const auto& a : alphas_) {
        if (a.kind != TranslationAction::Kind::identity &&
            (a.var < 0 || a.var >= nvars())) {
            throw Error("ValidationError", "translation targets unknown variable");
        }
        if (a.kind == TranslationAction::Kind::scale && a.factor == 0) {
            throw Error("ValidationError", "scale factor must be nonzero");
        }
    }
    validate_actions();
}

std::shared_ptr<const GroundField> GroundField::constants(Signature sig) {
    return std::make_shared<GroundField>(
        sig, std::vector<std::string>{},
        std::vector<DerivationAction>(sig.derivations, DerivationAction{}),
        std::vector<TranslationAction>(sig.translations, TranslationAction{}));
}

int GroundField::var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

RatFunc GroundField::indeterminate(int idx) const {
    return RatFunc::of(Polynomial::variable(nvars(), idx));
}

RatFunc GroundField::apply_delta(int i, const RatFunc& a) const {
    const DerivationAction& act = deltas_[i];
    if (act.var < 0 || a.is_zero()) return zero();
    // (n/d)' = (n'd - nd')/d^2
    Polynomial n = a.num(), d = a.den();
    return RatFunc(n.derivative(act.var) * d - n * d.derivative(act.var), d * d);
}

RatFunc GroundField::apply_alpha(int j, const RatFunc& a) const {
    const TranslationAction& act = alphas_[j];
    switch (act.kind) {
        case TranslationAction::Kind::identity:
            return a;
        case TranslationAction::Kind::shift:
            return RatFunc(a.num().substitute_linear(act.var, 1, 1),
                           a.den().substitute_linear(act.var, 1, 1));
        case TranslationAction::Kind::scale:
            return RatFunc(a.num().substitute_linear(act.var, act.factor, 0),
                           a.den().substitute_linear(act.var, act.factor, 0));
    }
    throw Error("InternalError", "unknown translation action");
}

RatFunc GroundField::apply_alpha_inverse(int j, const RatFunc& a) const {
    const TranslationAction& act = alphas_[j];
    switch (act.kind) {
        case TranslationAction::Kind::identity:
            return a;
        case TranslationAction::Kind::shift:
            return RatFunc(a.num().substitute_linear(act.var, 1, -1),
                           a.den().substitute_linear(act.var, 1, -1));
        case TranslationAction::Kind::scale:
            return RatFunc(
                a.num().substitute_linear(act.var, Rational(1) / act.factor, 0),
                a.den().substitute_linear(act.var, Rational(1) / act.factor, 0));
    }
    throw Error("InternalError", "unknown translation action");
}

bool GroundField::same_structure(const GroundField& o) const {
    return sig_ == o.sig_ && vars_ == o.vars_ && deltas_ == o.deltas_ &&
           alphas_ == o.alphas_;
}

void GroundField::validate_actions() const {
    int total = sig_.total();
    auto apply = [this](int op, const RatFunc& a) {
        return op < sig_.derivations
                   ? apply_delta(op, a)
                   : apply_alpha(op - sig_.derivations, a);
    };
    for (int u = 0; u < total; ++u) {
        for (int v = u + 1; v < total; ++v) {
            for (int x = 0; x < nvars(); ++x) {
                RatFunc gen = indeterminate(x);
                if (apply(u, apply(v, gen)) != apply(v, apply(u, gen))) {
                    throw Error("ValidationError",
                                "assigned actions do not commute on " + vars_[x]);
                }
            }
        }
    }
}

}  // namespace ddpoly
