#include "ddpoly/opalg.hpp"

#include <algorithm>
#include <set>

namespace ddpoly {

namespace {

void check_fields(const FieldPtr& a, const FieldPtr& b) {
    if (a.get() == b.get()) return;
    if (!a || !b || !a->same_structure(*b)) {
        throw Error("SignatureMismatch", "operands over different ground fields");
    }
}

// lambda * b for a scalar b: the alpha part acts as an automorphism, the
// delta part expands by the Leibniz rule. Result: sum of (exponent, scalar)
// with exponents <= lambda coordinatewise.
std::vector<std::pair<Exponent, RatFunc>> commute_past(const GroundField& F,
                                                       const Exponent& lambda,
                                                       const RatFunc& b) {
    RatFunc moved = b;
    for (int j = 0; j < lambda.alpha_size(); ++j) {
        for (int rep = 0; rep < lambda.l(j); ++rep) {
            moved = F.apply_alpha(j, moved);
        }
    }
    std::vector<std::pair<std::vector<int>, RatFunc>> acc{
        {std::vector<int>(lambda.delta_size(), 0), moved}};
    for (int i = 0; i < lambda.delta_size(); ++i) {
        int ki = lambda.k(i);
        if (ki == 0) continue;
        std::vector<std::pair<std::vector<int>, RatFunc>> next;
        for (auto& [lowered, c] : acc) {
            RatFunc der = c;  // delta_i^j (c), computed incrementally
            for (int j = 0; j <= ki; ++j) {
                if (j > 0) der = F.apply_delta(i, der);
                if (der.is_zero()) break;
                RatFunc coeff =
                    der * RatFunc::constant(F.nvars(),
                                            Rational(binomial(Integer(ki), j)));
                std::vector<int> low = lowered;
                low[i] = j;  // j orders moved into the scalar
                next.emplace_back(std::move(low), std::move(coeff));
            }
        }
        acc = std::move(next);
    }
    std::vector<std::pair<Exponent, RatFunc>> out;
    out.reserve(acc.size());
    Signature sig = F.signature();
    for (auto& [lowered, c] : acc) {
        std::vector<int> k(lambda.delta_size());
        for (int i = 0; i < lambda.delta_size(); ++i) k[i] = lambda.k(i) - lowered[i];
        std::vector<int> l(lambda.alpha_size());
        for (int j = 0; j < lambda.alpha_size(); ++j) l[j] = lambda.l(j);
        out.emplace_back(Exponent::make(sig, std::move(k), std::move(l)),
                         std::move(c));
    }
    return out;
}

}  // namespace

TermOrder TermOrder::ord_graded() { return TermOrder{}; }

TermOrder TermOrder::block_graded(PartitionSpec part) {
    TermOrder o;
    o.part_ = std::move(part);
    return o;
}

bool TermOrder::less(const Exponent& a, const Exponent& b) const {
    if (part_) {
        auto ba = a.block_orders(*part_);
        auto bb = b.block_orders(*part_);
        if (ba != bb) return ba < bb;
    }
    return Exponent::compare(a, b) < 0;
}

bool TermOrder::less(const ModTerm& a, const ModTerm& b) const {
    if (a.exponent == b.exponent) {
        return a.component > b.component;  // smaller component index wins
    }
    return less(a.exponent, b.exponent);
}

OreOperator::OreOperator(FieldPtr field) : field_(std::move(field)) {
    if (!field_) throw Error("ValidationError", "operator needs a ground field");
}

OreOperator OreOperator::scalar(FieldPtr field, RatFunc c) {
    OreOperator op(std::move(field));
    op.add_term(Exponent::zero(op.field_->signature()), c);
    return op;
}

OreOperator OreOperator::monomial(FieldPtr field, const Exponent& e, RatFunc c) {
    OreOperator op(std::move(field));
    const Signature& sig = op.field_->signature();
    if (e.delta_size() != sig.derivations || e.alpha_size() != sig.translations) {
        throw Error("SignatureMismatch", "exponent arity differs from field");
    }
    for (int j = 0; j < e.alpha_size(); ++j) {
        if (e.l(j) < 0) {
            throw Error("ValidationError",
                        "operator exponents must be nonnegative");
        }
    }
    op.add_term(e, c);
    return op;
}

void OreOperator::add_term(const Exponent& e, const RatFunc& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int OreOperator::ord() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.ord());
    return d;
}

RatFunc OreOperator::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? field_->zero() : it->second;
}

OreOperator OreOperator::operator+(const OreOperator& o) const {
    check_fields(field_, o.field_);
    OreOperator r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

OreOperator OreOperator::operator-(const OreOperator& o) const {
    check_fields(field_, o.field_);
    OreOperator r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

OreOperator OreOperator::operator*(const OreOperator& o) const {
    check_fields(field_, o.field_);
    OreOperator r(field_);
    for (const auto& [la, a] : terms_) {
        for (const auto& [mu, b] : o.terms_) {
            for (const auto& [lowered, c] : commute_past(*field_, la, b)) {
                r.add_term(lowered.plus(mu), a * c);
            }
        }
    }
    return r;
}

OreOperator OreOperator::scaled(const RatFunc& c) const {
    OreOperator r(field_);
    for (const auto& [e, v] : terms_) r.add_term(e, c * v);
    return r;
}

ModuleElement::ModuleElement(FieldPtr field, int rank)
    : field_(std::move(field)), rank_(rank) {
    if (!field_) throw Error("ValidationError", "element needs a ground field");
    if (rank_ < 1) throw Error("ValidationError", "module rank must be >= 1");
}

ModuleElement ModuleElement::basis(FieldPtr field, int rank, int component) {
    ModuleElement v(std::move(field), rank);
    v.add_term(ModTerm{component, Exponent::zero(v.field_->signature())},
               v.field_->one());
    return v;
}

ModuleElement ModuleElement::monomial(FieldPtr field, int rank, const ModTerm& t,
                                      RatFunc c) {
    ModuleElement v(std::move(field), rank);
    v.add_term(t, c);
    return v;
}

void ModuleElement::add_term(const ModTerm& t, const RatFunc& c) {
    if (c.is_zero()) return;
    if (t.component < 0 || t.component >= rank_) {
        throw Error("ValidationError", "component index out of range");
    }
    auto it = terms_.find(t);
    if (it == terms_.end()) {
        terms_.emplace(t, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int ModuleElement::ord() const {
    int d = -1;
    for (const auto& [t, c] : terms_) d = std::max(d, t.exponent.ord());
    return d;
}

RatFunc ModuleElement::coeff(const ModTerm& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? field_->zero() : it->second;
}

std::optional<ModTerm> ModuleElement::lead_term(const TermOrder& ord) const {
    std::optional<ModTerm> best;
    for (const auto& [t, c] : terms_) {
        if (!best || ord.less(*best, t)) best = t;
    }
    return best;
}

ModuleElement ModuleElement::operator+(const ModuleElement& o) const {
    check_fields(field_, o.field_);
    if (rank_ != o.rank_) throw Error("ValidationError", "module rank mismatch");
    ModuleElement r = *this;
    for (const auto& [t, c] : o.terms_) r.add_term(t, c);
    return r;
}

ModuleElement ModuleElement::operator-(const ModuleElement& o) const {
    check_fields(field_, o.field_);
    if (rank_ != o.rank_) throw Error("ValidationError", "module rank mismatch");
    ModuleElement r = *this;
    for (const auto& [t, c] : o.terms_) r.add_term(t, -c);
    return r;
}

ModuleElement ModuleElement::scaled(const RatFunc& c) const {
    ModuleElement r(field_, rank_);
    for (const auto& [t, v] : terms_) r.add_term(t, c * v);
    return r;
}

OreOperator ModuleElement::component_operator(int component) const {
    OreOperator op(field_);
    for (const auto& [t, c] : terms_) {
        if (t.component == component) op.add_term(t.exponent, c);
    }
    return op;
}

ModuleElement operator*(const OreOperator& op, const ModuleElement& v) {
    check_fields(op.field(), v.field());
    ModuleElement r(v.field(), v.rank());
    for (const auto& [la, a] : op.terms()) {
        for (const auto& [t, b] : v.terms()) {
            for (const auto& [lowered, c] :
                 commute_past(*op.field(), la, b)) {
                r.add_term(ModTerm{t.component, lowered.plus(t.exponent)}, a * c);
            }
        }
    }
    return r;
}

namespace {

std::string scalar_text(const RatFunc& c, const std::vector<std::string>& names,
                        bool* negated) {
    *negated = false;
    RatFunc shown = c;
    if (c.num().terms().size() == 1 && c.num().terms().begin()->second < 0) {
        shown = -c;
        *negated = true;
    }
    std::string t = shown.to_text(names);
    bool needs_parens = shown.num().terms().size() > 1 ||
                        !(shown.den().is_constant());
    return needs_parens ? "(" + t + ")" : t;
}

std::string term_text(const RatFunc& c, const std::string& mono,
                      const std::vector<std::string>& names, bool* negated) {
    std::string coeff = scalar_text(c, names, negated);
    if (mono.empty()) return coeff;
    if (coeff == "1") return mono;
    return coeff + "*" + mono;
}

std::string exponent_star_text(const Exponent& e) {
    std::string out;
    for (int i = 0; i < e.delta_size(); ++i) {
        if (e.k(i) == 0) continue;
        if (!out.empty()) out += "*";
        out += "d" + std::to_string(i + 1);
        if (e.k(i) != 1) out += "^" + std::to_string(e.k(i));
    }
    for (int j = 0; j < e.alpha_size(); ++j) {
        if (e.l(j) == 0) continue;
        if (!out.empty()) out += "*";
        out += "a" + std::to_string(j + 1);
        if (e.l(j) != 1) out += "^" + std::to_string(e.l(j));
    }
    return out;
}

}  // namespace

std::string OreOperator::to_text(const TermOrder& ord) const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Exponent, RatFunc>*> sorted;
    for (const auto& t : terms_) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(),
              [&ord](const auto* a, const auto* b) {
                  return ord.less(b->first, a->first);
              });
    std::string out;
    const auto& names = field_->indeterminates();
    for (const auto* t : sorted) {
        bool neg = false;
        std::string txt = term_text(t->second, exponent_star_text(t->first),
                                    names, &neg);
        if (out.empty()) {
            out += neg ? "-" : "";
        } else {
            out += neg ? " - " : " + ";
        }
        out += txt;
    }
    return out;
}

std::string ModuleElement::to_text(const TermOrder& ord) const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const ModTerm, RatFunc>*> sorted;
    for (const auto& t : terms_) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(),
              [&ord](const auto* a, const auto* b) {
                  return ord.less(b->first, a->first);
              });
    std::string out;
    const auto& names = field_->indeterminates();
    for (const auto* t : sorted) {
        std::string mono = exponent_star_text(t->first.exponent);
        if (!mono.empty()) mono += "*";
        mono += "e" + std::to_string(t->first.component + 1);
        bool neg = false;
        std::string txt = term_text(t->second, mono, names, &neg);
        if (out.empty()) {
            out += neg ? "-" : "";
        } else {
            out += neg ? " - " : " + ";
        }
        out += txt;
    }
    return out;
}

namespace {

// largest reducible term of v, with the index of its reducer in basis
struct Reduction {
    ModTerm term;
    size_t reducer;
};

std::optional<Reduction> find_reduction(
    const ModuleElement& v, const std::vector<ModuleElement>& basis,
    const std::vector<ModTerm>& leads, const TermOrder& ord) {
    std::optional<Reduction> best;
    for (const auto& [t, c] : v.terms()) {
        if (best && !ord.less(best->term, t)) continue;
        for (size_t g = 0; g < basis.size(); ++g) {
            if (leads[g].component != t.component) continue;
            if (!divides(leads[g].exponent, t.exponent)) continue;
            best = Reduction{t, g};
            break;
        }
    }
    return best;
}

}  // namespace

ModuleElement normal_form(const ModuleElement& v,
                          const std::vector<ModuleElement>& basis,
                          const TermOrder& ord) {
    std::vector<ModuleElement> nonzero;
    std::vector<ModTerm> leads;
    for (const auto& g : basis) {
        if (g.is_zero()) continue;
        nonzero.push_back(g);
        leads.push_back(*g.lead_term(ord));
    }
    ModuleElement r = v;
    while (true) {
        auto red = find_reduction(r, nonzero, leads, ord);
        if (!red) return r;
        const ModuleElement& g = nonzero[red->reducer];
        const ModTerm& lead = leads[red->reducer];
        Exponent shift = red->term.exponent.minus(lead.exponent);
        ModuleElement scaled_g =
            OreOperator::monomial(v.field(), shift, v.field()->one()) * g;
        // lead coefficient of shift*g at the target term
        RatFunc lc = scaled_g.coeff(red->term);
        RatFunc factor = r.coeff(red->term) / lc;
        r = r - scaled_g.scaled(factor);
    }
}

namespace {

ModuleElement monic(const ModuleElement& v, const TermOrder& ord) {
    auto lead = v.lead_term(ord);
    if (!lead) return v;
    return v.scaled(v.coeff(*lead).inverse());
}

}  // namespace

std::vector<ModuleElement> groebner(const std::vector<ModuleElement>& gens,
                                    const TermOrder& ord) {
    std::vector<ModuleElement> basis;
    for (const auto& g : gens) {
        if (!g.is_zero()) basis.push_back(monic(g, ord));
    }
    if (basis.empty()) return basis;

    auto field = basis.front().field();
    int rank = basis.front().rank();
    for (const auto& g : basis) {
        check_fields(field, g.field());
        if (g.rank() != rank) {
            throw Error("ValidationError", "generators in different free modules");
        }
    }

    // deterministic queue of index pairs
    std::set<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = i + 1; j < basis.size(); ++j) {
            pairs.insert({i, j});
        }
    }
    while (!pairs.empty()) {
        auto [i, j] = *pairs.begin();
        pairs.erase(pairs.begin());
        ModTerm li = *basis[i].lead_term(ord);
        ModTerm lj = *basis[j].lead_term(ord);
        if (li.component != lj.component) continue;
        Exponent gamma = Exponent::join(li.exponent, lj.exponent);
        ModuleElement ui =
            OreOperator::monomial(field, gamma.minus(li.exponent), field->one()) *
            basis[i];
        ModuleElement uj =
            OreOperator::monomial(field, gamma.minus(lj.exponent), field->one()) *
            basis[j];
        ModTerm top{li.component, gamma};
        ModuleElement s = ui.scaled(ui.coeff(top).inverse()) -
                          uj.scaled(uj.coeff(top).inverse());
        ModuleElement h = normal_form(s, basis, ord);
        if (h.is_zero()) continue;
        basis.push_back(monic(h, ord));
        for (size_t t = 0; t + 1 < basis.size(); ++t) {
            pairs.insert({t, basis.size() - 1});
        }
    }

    // minimalize: drop elements whose lead is divisible by another lead
    std::vector<ModuleElement> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        ModTerm li = *basis[i].lead_term(ord);
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            ModTerm lj = *basis[j].lead_term(ord);
            if (lj.component != li.component) continue;
            if (lj.exponent == li.exponent && lj.component == li.component) {
                redundant = j < i;  // keep the first of equal leads
            } else if (divides(lj.exponent, li.exponent)) {
                redundant = true;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // tail-reduce against the other elements for the unique reduced basis
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < minimal.size(); ++i) {
            std::vector<ModuleElement> others;
            for (size_t j = 0; j < minimal.size(); ++j) {
                if (j != i) others.push_back(minimal[j]);
            }
            ModuleElement reduced = monic(normal_form(minimal[i], others, ord), ord);
            if (reduced != minimal[i]) {
                if (reduced.is_zero()) {
                    minimal.erase(minimal.begin() + static_cast<long>(i));
                } else {
                    minimal[i] = reduced;
                }
                changed = true;
                break;
            }
        }
    }

    std::sort(minimal.begin(), minimal.end(),
              [&ord](const ModuleElement& a, const ModuleElement& b) {
                  return ord.less(*a.lead_term(ord), *b.lead_term(ord));
              });
    return minimal;
}

bool in_submodule(const ModuleElement& v, const std::vector<ModuleElement>& gb,
                  const TermOrder& ord) {
    return normal_form(v, gb, ord).is_zero();
}

}  // namespace ddpoly
