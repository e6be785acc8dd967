#include "ddpoly/numpoly.hpp"

#include <algorithm>
#include <numeric>

namespace ddpoly {

Dense binomial_dense(long long shift, unsigned lower) {
    // C(t + shift, lower) = prod_{j=1..lower} (t + shift - lower + j) / lower!
    Dense p{Rational(1)};
    for (unsigned j = 1; j <= lower; ++j) {
        Rational c = Rational(shift) - lower + j;
        Dense next(p.size() + 1, Rational(0));
        for (size_t i = 0; i < p.size(); ++i) {
            next[i] += p[i] * c;
            next[i + 1] += p[i];
        }
        p = std::move(next);
    }
    Rational f(factorial(lower));
    for (auto& c : p) c /= f;
    return p;
}

Rational eval_dense(const Dense& p, const Integer& t) {
    Rational acc = 0;
    for (size_t i = p.size(); i-- > 0;) {
        acc = acc * Rational(t) + p[i];
    }
    return acc;
}

NumericalPolynomial::NumericalPolynomial(std::vector<Integer> binom_coeffs)
    : coeffs_(std::move(binom_coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer NumericalPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[i];
}

Integer NumericalPolynomial::eval(const Integer& r) const {
    Integer acc = 0;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        acc += coeffs_[i] * binomial(r + static_cast<int>(i),
                                     static_cast<unsigned>(i));
    }
    return acc;
}

Dense NumericalPolynomial::to_dense() const {
    Dense acc;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        Dense term = binomial_dense(static_cast<long long>(i),
                                    static_cast<unsigned>(i));
        if (acc.size() < term.size()) acc.resize(term.size(), Rational(0));
        for (size_t j = 0; j < term.size(); ++j) {
            acc[j] += term[j] * Rational(coeffs_[i]);
        }
    }
    return acc;
}

NumericalPolynomial NumericalPolynomial::operator+(
    const NumericalPolynomial& o) const {
    std::vector<Integer> c(std::max(coeffs_.size(), o.coeffs_.size()), Integer(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return NumericalPolynomial(std::move(c));
}

NumericalPolynomial NumericalPolynomial::operator-(
    const NumericalPolynomial& o) const {
    std::vector<Integer> c(std::max(coeffs_.size(), o.coeffs_.size()), Integer(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
    return NumericalPolynomial(std::move(c));
}

NumericalPolynomial NumericalPolynomial::scaled(const Integer& c) const {
    std::vector<Integer> out = coeffs_;
    for (auto& a : out) a *= c;
    return NumericalPolynomial(std::move(out));
}

std::string NumericalPolynomial::to_text() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Integer& a = coeffs_[i];
        if (a == 0) continue;
        Integer mag = a < 0 ? Integer(-a) : a;
        if (out.empty()) {
            if (a < 0) out += "-";
        } else {
            out += a < 0 ? " - " : " + ";
        }
        std::string basis = i == 0 ? ""
                                   : "C(t+" + std::to_string(i) + "," +
                                         std::to_string(i) + ")";
        if (i == 0) {
            out += mag.str();
        } else if (mag == 1) {
            out += basis;
        } else {
            out += mag.str() + "*" + basis;
        }
    }
    return out.empty() ? "0" : out;
}

NumericalPolynomial to_binomial_basis(const Dense& dense) {
    Dense rem = dense;
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    int deg = static_cast<int>(rem.size()) - 1;
    std::vector<Rational> raw(deg + 1, Rational(0));
    for (int i = deg; i >= 0; --i) {
        Rational lead = rem[i];
        if (lead == 0) continue;
        Rational a = lead * Rational(factorial(static_cast<unsigned>(i)));
        raw[i] = a;
        Dense term = binomial_dense(i, static_cast<unsigned>(i));
        for (size_t j = 0; j < term.size(); ++j) rem[j] -= a * term[j];
    }
    std::vector<Integer> coeffs;
    coeffs.reserve(raw.size());
    for (const auto& a : raw) {
        if (!is_integral(a)) {
            throw Error("NotNumerical",
                        "binomial coefficient " + to_string(a) +
                            " is not an integer");
        }
        coeffs.push_back(as_integer(a));
    }
    return NumericalPolynomial(std::move(coeffs));
}

NumericalPolynomial interpolate(
    const std::vector<std::pair<long long, Integer>>& values,
    int degree_bound) {
    if (degree_bound < 0) {
        throw Error("ValidationError", "negative degree bound");
    }
    if (static_cast<int>(values.size()) < degree_bound + 2) {
        throw Error("WindowTooSmall",
                    "need at least " + std::to_string(degree_bound + 2) +
                        " points, got " + std::to_string(values.size()));
    }
    for (size_t i = 1; i < values.size(); ++i) {
        if (values[i].first != values[i - 1].first + 1) {
            throw Error("ValidationError", "points must be consecutive in r");
        }
    }

    // Newton forward differences on the first degree_bound+1 points.
    int win = degree_bound + 1;
    std::vector<Rational> diffs;
    {
        std::vector<Rational> row;
        row.reserve(win);
        for (int i = 0; i < win; ++i) row.emplace_back(values[i].second);
        for (int level = 0; level < win; ++level) {
            diffs.push_back(row[0]);
            for (size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
            row.pop_back();
        }
    }
    long long r0 = values[0].first;
    Dense fit{Rational(0)};
    for (int j = 0; j < win; ++j) {
        // diffs[j] * C(t - r0, j)
        Dense term = binomial_dense(-r0, static_cast<unsigned>(j));
        if (fit.size() < term.size()) fit.resize(term.size(), Rational(0));
        for (size_t u = 0; u < term.size(); ++u) fit[u] += diffs[j] * term[u];
    }
    for (size_t i = win; i < values.size(); ++i) {
        if (eval_dense(fit, Integer(values[i].first)) !=
            Rational(values[i].second)) {
            throw Error("NotEventuallyPolynomial",
                        "value at r = " + std::to_string(values[i].first) +
                            " breaks the degree-" +
                            std::to_string(degree_bound) + " fit");
        }
    }
    return to_binomial_basis(fit);
}

PolyInvariants invariants(const NumericalPolynomial& p, int m, int n) {
    int cap = m + n;
    if (p.degree() > cap) {
        throw Error("DegreeExceedsCap",
                    "degree " + std::to_string(p.degree()) + " exceeds m+n = " +
                        std::to_string(cap));
    }
    PolyInvariants inv;
    inv.d = p.degree();
    inv.c_d = inv.d >= 0 ? p.coeff(inv.d) : Integer(0);
    inv.c_top = inv.d == cap ? inv.c_d : Integer(0);
    return inv;
}

int compare_eventual(const NumericalPolynomial& a, const NumericalPolynomial& b) {
    NumericalPolynomial d = a - b;
    if (d.is_zero()) return 0;
    return d.coeff(d.degree()) > 0 ? 1 : -1;
}

std::set<IndexTuple> maximal_index_set(const std::set<IndexTuple>& E) {
    if (E.empty()) throw Error("EmptySet", "no index tuples supplied");
    size_t width = E.begin()->size();
    for (const auto& t : E) {
        if (t.size() != width) {
            throw Error("ValidationError", "index tuples of mixed arity");
        }
    }
    std::vector<int> perm(width);
    std::iota(perm.begin(), perm.end(), 0);
    std::set<IndexTuple> out;
    do {
        auto lex_less = [&perm](const IndexTuple& a, const IndexTuple& b) {
            for (int axis : perm) {
                if (a[axis] != b[axis]) return a[axis] < b[axis];
            }
            return false;
        };
        out.insert(*std::max_element(E.begin(), E.end(), lex_less));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

MultiNumericalPolynomial::MultiNumericalPolynomial(std::vector<int> caps)
    : caps_(std::move(caps)) {}

MultiNumericalPolynomial::MultiNumericalPolynomial(
    std::vector<int> caps, std::map<IndexTuple, Integer> coeffs)
    : caps_(std::move(caps)) {
    for (auto& [idx, c] : coeffs) {
        if (c == 0) continue;
        if (idx.size() != caps_.size()) {
            throw Error("ValidationError", "coefficient index arity mismatch");
        }
        for (size_t k = 0; k < idx.size(); ++k) {
            if (idx[k] < 0 || idx[k] > caps_[k]) {
                throw Error("DegreeExceedsCap",
                            "coefficient index exceeds axis cap");
            }
        }
        coeffs_[idx] = c;
    }
}

Integer MultiNumericalPolynomial::coeff(const IndexTuple& idx) const {
    auto it = coeffs_.find(idx);
    return it == coeffs_.end() ? Integer(0) : it->second;
}

std::set<IndexTuple> MultiNumericalPolynomial::support() const {
    std::set<IndexTuple> s;
    for (const auto& [idx, c] : coeffs_) s.insert(idx);
    return s;
}

Integer MultiNumericalPolynomial::eval(const std::vector<Integer>& r) const {
    if (r.size() != caps_.size()) {
        throw Error("ValidationError", "evaluation point arity mismatch");
    }
    Integer acc = 0;
    for (const auto& [idx, c] : coeffs_) {
        Integer prod = c;
        for (size_t k = 0; k < idx.size(); ++k) {
            prod *= binomial(r[k] + idx[k], static_cast<unsigned>(idx[k]));
        }
        acc += prod;
    }
    return acc;
}

int MultiNumericalPolynomial::total_degree() const {
    int d = -1;
    for (const auto& [idx, c] : coeffs_) {
        d = std::max(d, std::accumulate(idx.begin(), idx.end(), 0));
    }
    return d;
}

int MultiNumericalPolynomial::degree_in(int axis) const {
    int d = -1;
    for (const auto& [idx, c] : coeffs_) d = std::max(d, idx[axis]);
    return d;
}

MultiNumericalPolynomial MultiNumericalPolynomial::operator+(
    const MultiNumericalPolynomial& o) const {
    if (caps_ != o.caps_) throw Error("ValidationError", "axis cap mismatch");
    std::map<IndexTuple, Integer> c = coeffs_;
    for (const auto& [idx, v] : o.coeffs_) c[idx] += v;
    return MultiNumericalPolynomial(caps_, std::move(c));
}

MultiNumericalPolynomial MultiNumericalPolynomial::operator-(
    const MultiNumericalPolynomial& o) const {
    if (caps_ != o.caps_) throw Error("ValidationError", "axis cap mismatch");
    std::map<IndexTuple, Integer> c = coeffs_;
    for (const auto& [idx, v] : o.coeffs_) c[idx] -= v;
    return MultiNumericalPolynomial(caps_, std::move(c));
}

MultiNumericalPolynomial MultiNumericalPolynomial::scaled(const Integer& c) const {
    std::map<IndexTuple, Integer> out = coeffs_;
    for (auto& [idx, v] : out) v *= c;
    return MultiNumericalPolynomial(caps_, std::move(out));
}

std::string MultiNumericalPolynomial::to_text() const {
    if (coeffs_.empty()) return "0";
    // highest total degree first, then reverse-lex for a stable reading order
    std::vector<const std::pair<const IndexTuple, Integer>*> terms;
    for (const auto& t : coeffs_) terms.push_back(&t);
    std::sort(terms.begin(), terms.end(), [](const auto* a, const auto* b) {
        int da = std::accumulate(a->first.begin(), a->first.end(), 0);
        int db = std::accumulate(b->first.begin(), b->first.end(), 0);
        if (da != db) return da > db;
        return a->first > b->first;
    });
    std::string out;
    for (const auto* t : terms) {
        const Integer& a = t->second;
        Integer mag = a < 0 ? Integer(-a) : a;
        if (out.empty()) {
            if (a < 0) out += "-";
        } else {
            out += a < 0 ? " - " : " + ";
        }
        std::string basis;
        for (size_t k = 0; k < t->first.size(); ++k) {
            int i = t->first[k];
            if (i == 0) continue;
            if (!basis.empty()) basis += "*";
            basis += "C(t" + std::to_string(k + 1) + "+" + std::to_string(i) +
                     "," + std::to_string(i) + ")";
        }
        if (basis.empty()) {
            out += mag.str();
        } else if (mag == 1) {
            out += basis;
        } else {
            out += mag.str() + "*" + basis;
        }
    }
    return out;
}

MultiNumericalPolynomial to_multi_binomial_basis(const MultiDense& dense,
                                                 const std::vector<int>& caps) {
    MultiDense rem;
    for (const auto& [idx, c] : dense) {
        if (c != 0) {
            if (idx.size() != caps.size()) {
                throw Error("ValidationError", "dense term arity mismatch");
            }
            rem[idx] = c;
        }
    }
    std::map<IndexTuple, Rational> raw;
    while (!rem.empty()) {
        // last map entry is lexicographically maximal, hence dominance-maximal
        auto it = std::prev(rem.end());
        IndexTuple idx = it->first;
        Rational lead = it->second;
        for (size_t k = 0; k < idx.size(); ++k) {
            if (idx[k] > caps[k]) {
                throw Error("DegreeExceedsCap",
                            "dense degree exceeds axis cap " +
                                std::to_string(caps[k]));
            }
        }
        Rational a = lead;
        for (size_t k = 0; k < idx.size(); ++k) {
            a *= Rational(factorial(static_cast<unsigned>(idx[k])));
        }
        raw[idx] = a;
        // subtract a * prod_k C(t_k + idx_k, idx_k)
        std::vector<Dense> axis_dense;
        axis_dense.reserve(idx.size());
        for (int i : idx) {
            axis_dense.push_back(binomial_dense(i, static_cast<unsigned>(i)));
        }
        std::map<IndexTuple, Rational> prod{{IndexTuple(idx.size(), 0), a}};
        for (size_t k = 0; k < idx.size(); ++k) {
            std::map<IndexTuple, Rational> next;
            for (const auto& [e, c] : prod) {
                for (size_t u = 0; u < axis_dense[k].size(); ++u) {
                    if (axis_dense[k][u] == 0) continue;
                    IndexTuple e2 = e;
                    e2[k] = static_cast<int>(u);
                    next[e2] += c * axis_dense[k][u];
                }
            }
            prod = std::move(next);
        }
        for (const auto& [e, c] : prod) {
            auto jt = rem.find(e);
            Rational v = (jt == rem.end() ? Rational(0) : jt->second) - c;
            if (v == 0) {
                if (jt != rem.end()) rem.erase(jt);
            } else {
                rem[e] = v;
            }
        }
    }
    std::map<IndexTuple, Integer> coeffs;
    for (const auto& [idx, a] : raw) {
        if (a == 0) continue;
        if (!is_integral(a)) {
            throw Error("NotNumerical",
                        "binomial coefficient " + to_string(a) +
                            " is not an integer");
        }
        coeffs[idx] = as_integer(a);
    }
    return MultiNumericalPolynomial(caps, std::move(coeffs));
}

MultiInvariants multi_invariants(const MultiNumericalPolynomial& p) {
    MultiInvariants inv;
    inv.total_degree = p.total_degree();
    inv.support = p.support();
    inv.a_caps = p.coeff(IndexTuple(p.caps().begin(), p.caps().end()));
    for (const auto& [idx, c] : p.terms()) {
        if (std::accumulate(idx.begin(), idx.end(), 0) == inv.total_degree) {
            inv.top_terms[idx] = c;
        }
    }
    inv.support_maxima = maximal_index_set(inv.support);  // EmptySet when zero
    return inv;
}

}  // namespace ddpoly
