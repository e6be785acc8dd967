#pragma once

#include "ddpoly/groundfield.hpp"
#include "ddpoly/monoid.hpp"

#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace ddpoly {

using FieldPtr = std::shared_ptr<const GroundField>;

// One position of a free module: component index (0-based) and exponent.
struct ModTerm {
    int component = 0;
    Exponent exponent;
    bool operator==(const ModTerm&) const = default;
};

// canonical storage order: component, then graded-lex exponent
struct ModTermStructuralLess {
    bool operator()(const ModTerm& a, const ModTerm& b) const {
        if (a.component != b.component) return a.component < b.component;
        return Exponent::compare(a.exponent, b.exponent) < 0;
    }
};

// Multiplicative total order on module terms. Default: graded by total ord,
// then lex on (k_1..k_m, l_1..l_n), then smaller component index wins.
// Blockwise variant grades by the tuple of block orders first.
class TermOrder {
public:
    static TermOrder ord_graded();
    static TermOrder block_graded(PartitionSpec part);

    bool is_blockwise() const { return part_.has_value(); }
    const std::optional<PartitionSpec>& partition() const { return part_; }

    bool less(const Exponent& a, const Exponent& b) const;
    bool less(const ModTerm& a, const ModTerm& b) const;

private:
    std::optional<PartitionSpec> part_;
};

// Finite K-weighted sum of exponents over a ground field; the ring D of
// difference-differential operators. Exponents always live in N^(m+n).
class OreOperator {
public:
    explicit OreOperator(FieldPtr field);
    static OreOperator scalar(FieldPtr field, RatFunc c);
    static OreOperator monomial(FieldPtr field, const Exponent& e, RatFunc c);

    const FieldPtr& field() const { return field_; }
    bool is_zero() const { return terms_.empty(); }
    int ord() const;  // -1 for the zero operator
    const std::map<Exponent, RatFunc>& terms() const { return terms_; }
    RatFunc coeff(const Exponent& e) const;

    OreOperator operator+(const OreOperator& o) const;
    OreOperator operator-(const OreOperator& o) const;
    // noncommutative product: delta*a = a*delta + delta(a), alpha*a = alpha(a)*alpha
    OreOperator operator*(const OreOperator& o) const;
    OreOperator scaled(const RatFunc& c) const;  // left scalar multiple
    bool operator==(const OreOperator&) const = default;

    std::string to_text(const TermOrder& ord) const;

    void add_term(const Exponent& e, const RatFunc& c);

private:
    FieldPtr field_;
    std::map<Exponent, RatFunc> terms_;
};

// Element of the rank-s free left module over D.
class ModuleElement {
public:
    ModuleElement(FieldPtr field, int rank);
    static ModuleElement basis(FieldPtr field, int rank, int component);
    static ModuleElement monomial(FieldPtr field, int rank, const ModTerm& t,
                                  RatFunc c);

    const FieldPtr& field() const { return field_; }
    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    int ord() const;  // -1 for zero
    const std::map<ModTerm, RatFunc, ModTermStructuralLess>& terms() const {
        return terms_;
    }
    RatFunc coeff(const ModTerm& t) const;
    std::optional<ModTerm> lead_term(const TermOrder& ord) const;

    ModuleElement operator+(const ModuleElement& o) const;
    ModuleElement operator-(const ModuleElement& o) const;
    ModuleElement scaled(const RatFunc& c) const;
    bool operator==(const ModuleElement&) const = default;

    // operator coefficient of one component, as an element of D
    OreOperator component_operator(int component) const;

    std::string to_text(const TermOrder& ord) const;

    void add_term(const ModTerm& t, const RatFunc& c);

private:
    FieldPtr field_;
    int rank_ = 1;
    std::map<ModTerm, RatFunc, ModTermStructuralLess> terms_;
};

ModuleElement operator*(const OreOperator& op, const ModuleElement& v);

// Left reduction: no term of the result is divisible, in the same component,
// by the lead exponent of any element of basis.
ModuleElement normal_form(const ModuleElement& v,
                          const std::vector<ModuleElement>& basis,
                          const TermOrder& ord);

// Reduced left Groebner basis, unique for the given order; lead coefficients
// scaled to 1, output sorted by ascending lead term.
//
// Termination: every basis element added by the loop has a lead term that no
// earlier lead term divides, so the lead terms form an antichain-extending
// sequence in N^(m+n) x {components}; by Dickson's lemma such a sequence is
// finite, and the pair queue drains.
std::vector<ModuleElement> groebner(const std::vector<ModuleElement>& gens,
                                    const TermOrder& ord);

// true when v lies in the left submodule spanned by the Groebner basis
bool in_submodule(const ModuleElement& v, const std::vector<ModuleElement>& gb,
                  const TermOrder& ord);

}  // namespace ddpoly
