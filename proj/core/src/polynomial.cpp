#include "ddpoly/polynomial.hpp"

#include <algorithm>

namespace ddpoly {

namespace {

void check_same_ring(const Polynomial& a, const Polynomial& b) {
    if (a.nvars() != b.nvars()) {
        throw Error("ValidationError", "polynomials over different rings");
    }
}

}  // namespace

Polynomial Polynomial::constant(int nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Key(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
    Polynomial p(nvars);
    Key k(nvars, 0);
    k[index] = 1;
    p.add_term(k, Rational(1));
    return p;
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Key& k = terms_.begin()->first;
    return std::all_of(k.begin(), k.end(), [](unsigned e) { return e == 0; });
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    return terms_.begin()->second;
}

int Polynomial::degree(int var) const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, static_cast<int>(k[var]));
    return d;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) {
        int s = 0;
        for (unsigned e : k) s += static_cast<int>(e);
        d = std::max(d, s);
    }
    return d;
}

int Polynomial::max_var() const {
    int v = -1;
    for (const auto& [k, c] : terms_) {
        for (int i = nvars_ - 1; i > v; --i) {
            if (k[i] > 0) v = i;
        }
    }
    return v;
}

void Polynomial::add_term(const Key& key, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(*this, o);
    Polynomial r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_same_ring(*this, o);
    Polynomial r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(*this, o);
    Polynomial r(nvars_);
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : o.terms_) {
            Key k = ka;
            for (int i = 0; i < nvars_; ++i) k[i] += kb[i];
            r.add_term(k, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

Polynomial Polynomial::derivative(int var) const {
    Polynomial r(nvars_);
    for (const auto& [k, c] : terms_) {
        if (k[var] == 0) continue;
        Key k2 = k;
        k2[var] -= 1;
        r.add_term(k2, c * Rational(k[var]));
    }
    return r;
}

Polynomial Polynomial::substitute_linear(int var, const Rational& a,
                                         const Rational& b) const {
    if (a == 0) throw Error("ValidationError", "non-invertible substitution");
    Polynomial r(nvars_);
    for (const auto& [k, c] : terms_) {
        unsigned e = k[var];
        // c * (a x + b)^e, distributed over the remaining exponent
        Rational apow = 1;
        std::vector<Rational> binom(e + 1);
        for (unsigned j = 0; j <= e; ++j) {
            binom[j] = Rational(binomial(Integer(e), j));
        }
        std::vector<Rational> bpow(e + 1);
        bpow[0] = 1;
        for (unsigned j = 1; j <= e; ++j) bpow[j] = bpow[j - 1] * b;
        for (unsigned j = 0; j <= e; ++j) {  // x^j term: C(e,j) a^j b^(e-j)
            Rational coeff = c * binom[j] * apow * bpow[e - j];
            Key k2 = k;
            k2[var] = j;
            r.add_term(k2, coeff);
            apow *= a;
        }
    }
    return r;
}

Polynomial Polynomial::coefficient_of(int var, int d) const {
    Polynomial r(nvars_);
    for (const auto& [k, c] : terms_) {
        if (static_cast<int>(k[var]) != d) continue;
        Key k2 = k;
        k2[var] = 0;
        r.add_term(k2, c);
    }
    return r;
}

Polynomial Polynomial::divide_exact(const Polynomial& d) const {
    check_same_ring(*this, d);
    if (d.is_zero()) throw Error("ValidationError", "division by zero polynomial");
    Polynomial rem = *this;
    Polynomial quot(nvars_);
    const auto& dlead = *d.terms_.rbegin();  // lex-leading term
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms_.rbegin();
        Key qk = rlead.first;
        bool ok = true;
        for (int i = 0; i < nvars_; ++i) {
            if (qk[i] < dlead.first[i]) {
                ok = false;
                break;
            }
            qk[i] -= dlead.first[i];
        }
        if (!ok) {
            throw Error("InternalError", "inexact polynomial division");
        }
        Rational qc = rlead.second / dlead.second;
        Polynomial qterm(nvars_);
        qterm.add_term(qk, qc);
        quot = quot + qterm;
        rem = rem - qterm * d;
    }
    return quot;
}

namespace {

// pseudo-remainder of f by g viewed univariately in var (deg_var g >= 1)
Polynomial prem(Polynomial f, const Polynomial& g, int var) {
    int dg = g.degree(var);
    Polynomial lc_g = g.coefficient_of(var, dg);
    while (!f.is_zero() && f.degree(var) >= dg) {
        int df = f.degree(var);
        Polynomial lc_f = f.coefficient_of(var, df);
        Polynomial shift(f.nvars());
        Polynomial::Key k(f.nvars(), 0);
        k[var] = static_cast<unsigned>(df - dg);
        shift.add_term(k, Rational(1));
        f = f * lc_g - g * shift * lc_f;
    }
    return f;
}

Polynomial normalize_leading(Polynomial p) {
    if (p.is_zero()) return p;
    Rational lead = p.terms().rbegin()->second;
    Polynomial unit = Polynomial::constant(p.nvars(), Rational(1) / lead);
    return p * unit;
}

// gcd of the univariate-in-var coefficients
Polynomial content_in(const Polynomial& p, int var) {
    Polynomial c(p.nvars());
    for (int d = 0; d <= p.degree(var); ++d) {
        Polynomial slice = p.coefficient_of(var, d);
        if (!slice.is_zero()) c = Polynomial::gcd(c, slice);
    }
    return c;
}

}  // namespace

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a, b);
    if (a.is_zero()) return normalize_leading(b);
    if (b.is_zero()) return normalize_leading(a);
    if (a.is_constant() || b.is_constant()) {
        return constant(a.nvars(), Rational(1));
    }
    int var = std::max(a.max_var(), b.max_var());
    if (a.degree(var) == 0 || b.degree(var) == 0) {
        // var missing from one side: common divisors cannot involve var
        Polynomial ca = a.degree(var) == 0 ? a : content_in(a, var);
        Polynomial cb = b.degree(var) == 0 ? b : content_in(b, var);
        return gcd(ca, cb);
    }

    Polynomial conta = content_in(a, var);
    Polynomial contb = content_in(b, var);
    Polynomial ppa = a.divide_exact(conta);
    Polynomial ppb = b.divide_exact(contb);
    if (ppa.degree(var) < ppb.degree(var)) std::swap(ppa, ppb);

    // primitive PRS
    while (!ppb.is_zero()) {
        Polynomial r = prem(ppa, ppb, var);
        ppa = ppb;
        if (r.is_zero()) {
            ppb = r;
        } else {
            Polynomial cr = content_in(r, var);
            ppb = r.divide_exact(cr);
        }
    }
    Polynomial result = gcd(conta, contb) * ppa;
    return normalize_leading(result);
}

std::string Polynomial::to_text(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Key& k = it->first;
        const Rational& c = it->second;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string mono;
        for (int i = 0; i < nvars_; ++i) {
            if (k[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (k[i] > 1) mono += "^" + std::to_string(k[i]);
        }
        if (mono.empty()) {
            out += to_string(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += to_string(mag) + "*" + mono;
        }
    }
    return out;
}

}  // namespace ddpoly
