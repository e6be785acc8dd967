#include "corpus.hpp"

namespace ddpoly::corpus {

ModuleElement monomial_element(const FieldPtr& F, int rank, int component,
                               std::vector<int> k, std::vector<int> l) {
    return ModuleElement::monomial(
        F, rank,
        ModTerm{component,
                Exponent::make(F->signature(), std::move(k), std::move(l))},
        F->one());
}

IntermediateFieldSpec whole_extension(const ExtensionPresentation& X) {
    std::vector<ModuleElement> units;
    for (int c = 0; c < X.generators; ++c) {
        units.push_back(ModuleElement::basis(X.field, X.generators, c));
    }
    return IntermediateFieldSpec(std::move(units), true);
}

namespace {

FieldPtr rational_x(Signature sig) {
    std::vector<DerivationAction> ds;
    for (int i = 0; i < sig.derivations; ++i) {
        ds.push_back(i == 0 ? DerivationAction{0} : DerivationAction{});
    }
    std::vector<TranslationAction> as(sig.translations, TranslationAction{});
    return std::make_shared<GroundField>(sig, std::vector<std::string>{"x"},
                                         std::move(ds), std::move(as));
}

FieldPtr shift_x(Signature sig) {
    // alpha_1 acts as x -> x+1, remaining actions trivial
    std::vector<DerivationAction> ds(sig.derivations, DerivationAction{});
    std::vector<TranslationAction> as(sig.translations, TranslationAction{});
    if (sig.translations > 0) {
        as[0] = TranslationAction{TranslationAction::Kind::shift, 0};
    }
    return std::make_shared<GroundField>(sig, std::vector<std::string>{"x"},
                                         std::move(ds), std::move(as));
}

}  // namespace

std::vector<Instance> regression_instances() {
    std::vector<Instance> out;

    {  // 1: free, one derivation
        auto F = GroundField::constants(Signature(1, 0));
        ExtensionPresentation X(F, 1, {});
        out.push_back({"free-m1n0-s1", X, whole_extension(X), {}});
    }
    {  // 2: free, F = K<delta eta>
        auto F = GroundField::constants(Signature(1, 1));
        ExtensionPresentation X(F, 1, {});
        out.push_back({"free-m1n1-s1-Fdelta", X,
                       IntermediateFieldSpec(
                           {monomial_element(F, 1, 0, {1}, {0})}, true),
                       {}});
    }
    {  // 3: free, two generators, with the trivial 2-block partition
        auto F = GroundField::constants(Signature(1, 1));
        ExtensionPresentation X(F, 2, {});
        out.push_back({"free-m1n1-s2", X, whole_extension(X),
                       PartitionSpec::trivial(F->signature())});
    }
    {  // 4: single relation d^2
        auto F = GroundField::constants(Signature(1, 0));
        ExtensionPresentation X(F, 1, {monomial_element(F, 1, 0, {2}, {})});
        out.push_back({"rel-d2-m1n0", X, whole_extension(X), {}});
    }
    {  // 5: monomial staircase {d^2, a^2}, partitioned
        auto F = GroundField::constants(Signature(1, 1));
        ExtensionPresentation X(F, 1,
                                {monomial_element(F, 1, 0, {2}, {0}),
                                 monomial_element(F, 1, 0, {0}, {2})});
        out.push_back({"rel-d2-a2-m1n1", X, whole_extension(X),
                       PartitionSpec::trivial(F->signature())});
    }
    {  // 6: non-monomial relation d + a
        auto F = GroundField::constants(Signature(1, 1));
        ExtensionPresentation X(F, 1,
                                {monomial_element(F, 1, 0, {1}, {0}) +
                                 monomial_element(F, 1, 0, {0}, {1})});
        out.push_back({"rel-d-plus-a", X, whole_extension(X), {}});
    }
    {  // 7: mixed product relation d1*d2
        auto F = GroundField::constants(Signature(2, 0));
        ExtensionPresentation X(F, 1, {monomial_element(F, 1, 0, {1, 1}, {})});
        out.push_back({"rel-d1d2-m2n0", X, whole_extension(X), {}});
    }
    {  // 8: monomial staircase in m+n = 3 with a 2-block partition
        auto F = GroundField::constants(Signature(2, 1));
        ExtensionPresentation X(F, 1,
                                {monomial_element(F, 1, 0, {2, 0}, {0}),
                                 monomial_element(F, 1, 0, {0, 3}, {0})});
        out.push_back({"rel-d1sq-d2cube-m2n1", X, whole_extension(X),
                       PartitionSpec::trivial(F->signature())});
    }
    {  // 9: cross-component relation d*e1 - a*e2
        auto F = GroundField::constants(Signature(1, 1));
        ExtensionPresentation X(F, 2,
                                {monomial_element(F, 2, 0, {1}, {0}) -
                                 monomial_element(F, 2, 1, {0}, {1})});
        out.push_back({"rel-cross-de1-ae2", X, whole_extension(X), {}});
    }
    {  // 10: Q(x) with d/dx, relation (x*d - 1)e1
        auto F = rational_x(Signature(1, 0));
        ModuleElement rel =
            monomial_element(F, 1, 0, {1}, {}).scaled(F->indeterminate(0)) -
            ModuleElement::basis(F, 1, 0);
        ExtensionPresentation X(F, 1, {rel});
        out.push_back({"rel-xd-minus-1-Qx", X, whole_extension(X), {}});
    }
    {  // 11: shift field, difference relation (a - x)e1
        auto F = shift_x(Signature(1, 1));
        ModuleElement rel =
            monomial_element(F, 1, 0, {0}, {1}) -
            ModuleElement::basis(F, 1, 0).scaled(F->indeterminate(0));
        ExtensionPresentation X(F, 1, {rel});
        out.push_back({"rel-shift-a-minus-x", X, whole_extension(X), {}});
    }
    {  // 12: two translations, F = K<(a1-1) eta>
        auto F = GroundField::constants(Signature(0, 2));
        ExtensionPresentation X(F, 1, {});
        ModuleElement diff = monomial_element(F, 1, 0, {}, {1, 0}) -
                             ModuleElement::basis(F, 1, 0);
        out.push_back({"free-m0n2-Falpha1minus1", X,
                       IntermediateFieldSpec({diff}, true), {}});
    }
    {  // 13: twisted relation (a-1)^2 e1
        auto F = GroundField::constants(Signature(0, 1));
        ModuleElement a = monomial_element(F, 1, 0, {}, {1});
        ModuleElement one = ModuleElement::basis(F, 1, 0);
        ModuleElement rel = monomial_element(F, 1, 0, {}, {2}) -
                            a.scaled(F->constant(2)) + one;
        ExtensionPresentation X(F, 1, {rel});
        out.push_back({"rel-alpha-minus-1-sq", X, whole_extension(X), {}});
    }
    {  // 14: cross-component d*e1 + e2 over two generators
        auto F = GroundField::constants(Signature(1, 1));
        ExtensionPresentation X(F, 2,
                                {monomial_element(F, 2, 0, {1}, {0}) +
                                 ModuleElement::basis(F, 2, 1)});
        out.push_back({"rel-de1-plus-e2", X, whole_extension(X), {}});
    }
    {  // 15: m+n = 3 free, monomial intermediate field, partitioned
        auto F = GroundField::constants(Signature(1, 2));
        ExtensionPresentation X(F, 1, {});
        out.push_back({"free-m1n2-Fda1", X,
                       IntermediateFieldSpec(
                           {monomial_element(F, 1, 0, {1}, {1, 0})}, true),
                       PartitionSpec::trivial(F->signature())});
    }
    {  // 16: inversive signature; the module side still works over D
        auto F = GroundField::constants(Signature(1, 1, true));
        ExtensionPresentation X(F, 1, {monomial_element(F, 1, 0, {2}, {0})});
        out.push_back({"rel-d2-inversive-sig", X, whole_extension(X), {}});
    }

    return out;
}

std::vector<Regeneration> regenerations() {
    std::vector<Regeneration> out;

    auto elementary = [](const std::string& name, const FieldPtr& F,
                         std::vector<ModuleElement> base_rels,
                         const OreOperator& A,
                         std::vector<ModuleElement> field_diffs) {
        // eta'_1 = eta_1, eta'_2 = eta_2 + A eta_1
        ModuleElement e1 = ModuleElement::basis(F, 2, 0);
        ModuleElement e2 = ModuleElement::basis(F, 2, 1);
        std::vector<ModuleElement> fwd{e1, A * e1 + e2};
        std::vector<ModuleElement> bwd{e1, e2 - A * e1};
        std::vector<ModuleElement> rels2;
        for (const auto& r : base_rels) rels2.push_back(transform_through(r, bwd));
        ExtensionPresentation X(F, 2, base_rels);
        ExtensionPresentation X2(F, 2, rels2);
        std::vector<ModuleElement> diffs2;
        for (const auto& z : field_diffs) diffs2.push_back(transform_through(z, bwd));
        return Regeneration{name,
                            X,
                            X2,
                            fwd,
                            bwd,
                            IntermediateFieldSpec(field_diffs, true),
                            IntermediateFieldSpec(diffs2, true)};
    };

    {
        auto F = GroundField::constants(Signature(1, 1));
        const Signature& sig = F->signature();
        OreOperator d =
            OreOperator::monomial(F, Exponent::make(sig, {1}, {0}), F->one());
        OreOperator a =
            OreOperator::monomial(F, Exponent::make(sig, {0}, {1}), F->one());
        ModuleElement e1 = ModuleElement::basis(F, 2, 0);
        ModuleElement e2 = ModuleElement::basis(F, 2, 1);

        out.push_back(elementary("free-shear-d", F, {}, d, {e1, e2}));
        out.push_back(elementary("free-shear-a", F, {}, a, {d * e1}));
        out.push_back(elementary("free-shear-d2", F, {}, d * d, {e1, e2}));
        out.push_back(
            elementary("free-shear-d-plus-a", F, {}, d + a, {a * e2}));
        out.push_back(elementary("rel-shear-d", F,
                                 {monomial_element(F, 2, 0, {2}, {0})}, d,
                                 {e1, e2}));

        // swap of the two generators
        ExtensionPresentation X(F, 2, {monomial_element(F, 2, 0, {0}, {2})});
        std::vector<ModuleElement> swap{e2, e1};
        ExtensionPresentation X2(
            F, 2, {transform_through(X.relations[0], swap)});
        out.push_back({"rel-swap", X, X2, swap, swap,
                       IntermediateFieldSpec({d * e1}, true),
                       IntermediateFieldSpec({transform_through(d * e1, swap)},
                                             true)});
    }
    {
        // Q(x) coefficients with a genuinely scalar-twisted shear x*d
        auto F = rational_x(Signature(1, 0));
        const Signature& sig = F->signature();
        OreOperator xd = OreOperator::monomial(F, Exponent::make(sig, {1}, {}),
                                               F->indeterminate(0));
        ModuleElement e1 = ModuleElement::basis(F, 2, 0);
        out.push_back(elementary("free-shear-xd-Qx", F, {}, xd, {xd * e1}));
    }

    return out;
}

}  // namespace ddpoly::corpus
