#include "ddpoly/chains.hpp"

#include <algorithm>

namespace ddpoly {

std::vector<std::pair<int, int>> degree_gap_audit(const ChainSpec& chain,
                                                  const ReportOptions& opts) {
    const ExtensionPresentation& X = chain.extension;
    TermOrder ord = TermOrder::ord_graded();
    std::vector<ModuleElement> gb_rel = groebner(X.relations, ord);

    // containment: generators of each link lie in the previous submodule
    for (size_t i = 0; i + 1 < chain.links.size(); ++i) {
        std::vector<ModuleElement> upper = gb_rel;
        for (const auto& z : chain.links[i].differentials) upper.push_back(z);
        std::vector<ModuleElement> gb_upper = groebner(upper, ord);
        for (const auto& z : chain.links[i + 1].differentials) {
            if (!in_submodule(z, gb_upper, ord)) {
                throw Error("ContainmentViolated",
                            "link " + std::to_string(i + 1) +
                                " is not contained in link " + std::to_string(i));
            }
        }
    }

    std::vector<NumericalPolynomial> chis;
    chis.reserve(chain.links.size());
    for (const auto& link : chain.links) {
        chis.push_back(chi_intermediate(X, link, {}, opts).chi);
    }
    std::vector<std::pair<int, int>> gaps;
    for (size_t i = 0; i + 1 < chis.size(); ++i) {
        gaps.emplace_back(static_cast<int>(i), (chis[i] - chis[i + 1]).degree());
    }
    return gaps;
}

namespace {

OreOperator stage_driver(const FieldPtr& F, int stage) {
    const Signature& sig = F->signature();
    std::vector<int> k(sig.derivations, 0), l(sig.translations, 0);
    if (stage < sig.derivations) {
        k[stage] = 1;
        return OreOperator::monomial(F, Exponent::make(sig, k, l), F->one());
    }
    l[stage - sig.derivations] = 1;
    OreOperator alpha =
        OreOperator::monomial(F, Exponent::make(sig, k, l), F->one());
    return alpha - OreOperator::scalar(F, F->one());  // alpha_j - 1
}

OreOperator op_power(const OreOperator& op, int e) {
    OreOperator acc = OreOperator::scalar(op.field(), op.field()->one());
    for (int i = 0; i < e; ++i) acc = acc * op;
    return acc;
}

}  // namespace

ChainSpec theorem5_chain(const ExtensionPresentation& X,
                         const std::vector<int>& caps) {
    if (!X.is_free()) {
        throw Error("NotFree", "the chain construction needs a free extension");
    }
    if (X.generators != 1) {
        throw Error("NotSingleGenerator",
                    "the chain construction is stated for one generator");
    }
    const Signature& sig = X.signature();
    int stages = sig.total();
    if (static_cast<int>(caps.size()) != stages) {
        throw Error("ValidationError", "one depth cap per basic operator");
    }
    for (int c : caps) {
        if (c < 1) throw Error("ValidationError", "depth caps must be >= 1");
    }

    ModuleElement x = ModuleElement::basis(X.field, 1, 0);
    ChainSpec chain{X, {}};

    // Stage tau descends through prefix * O_tau^k x, k = 0..caps[tau], with
    // the raised elements prefix * O_c^{caps[c]+1} x of the earlier stages
    // carried along. The exponents of each link's generators form an
    // antichain, which keeps consecutive submodules strictly nested.
    std::vector<ModuleElement> safety;
    OreOperator prefix = OreOperator::scalar(X.field, X.field->one());
    for (int stage = 0; stage < stages; ++stage) {
        OreOperator driver = stage_driver(X.field, stage);
        for (int k = (stage == 0 ? 0 : 1); k <= caps[stage]; ++k) {
            std::vector<ModuleElement> gens = safety;
            gens.push_back((prefix * op_power(driver, k)) * x);
            chain.links.push_back(IntermediateFieldSpec(std::move(gens), true));
        }
        safety.push_back((prefix * op_power(driver, caps[stage] + 1)) * x);
        prefix = prefix * op_power(driver, caps[stage]);
    }

    // bottom link: the ground field itself
    chain.links.push_back(IntermediateFieldSpec({}, true));
    return chain;
}

DimBoundReport dim_bound_report(const ExtensionPresentation& X, int k,
                                const ReportOptions& opts) {
    if (!X.is_free()) {
        throw Error("NotFree", "the dimension bound needs a free extension");
    }
    if (X.generators != k) {
        throw Error("ValidationError",
                    "k must match the number of free generators");
    }
    const Signature& sig = X.signature();
    DimBoundReport rep;
    rep.type_lower_bound = sig.total();
    rep.dim = k;
    for (int j = k; j >= 0; --j) {
        std::vector<ModuleElement> diffs;
        for (int c = 0; c < j; ++c) {
            diffs.push_back(ModuleElement::basis(X.field, k, c));
        }
        DimensionReport r =
            chi_intermediate(X, IntermediateFieldSpec(diffs, true), {}, opts);
        rep.top_coeffs.push_back(r.inv.c_top);
    }
    for (size_t i = 0; i + 1 < rep.top_coeffs.size(); ++i) {
        rep.drops.push_back(rep.top_coeffs[i] - rep.top_coeffs[i + 1]);
    }
    return rep;
}

}  // namespace ddpoly
