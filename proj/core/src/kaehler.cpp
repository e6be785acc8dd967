#include "ddpoly/kaehler.hpp"

#include "ddpoly/oracle.hpp"

#include <algorithm>

namespace ddpoly {

ExtensionPresentation::ExtensionPresentation(FieldPtr f, int s,
                                             std::vector<ModuleElement> rels)
    : field(std::move(f)), generators(s), relations(std::move(rels)) {
    if (!field) throw Error("ValidationError", "presentation needs a ground field");
    if (generators < 1) {
        throw Error("ValidationError", "at least one generator expected");
    }
    for (auto& r : relations) {
        if (r.rank() != generators) {
            throw Error("ValidationError",
                        "relation lives outside the rank-s free module");
        }
        if (!r.field()->same_structure(*field)) {
            throw Error("SignatureMismatch", "relation over a different field");
        }
    }
}

IntermediateFieldSpec::IntermediateFieldSpec(std::vector<ModuleElement> diffs,
                                             bool closed)
    : differentials(std::move(diffs)), sigma_delta_closed(closed) {
    for (const auto& d : differentials) {
        if (d.is_zero()) {
            throw Error("ValidationError",
                        "zero differential in an intermediate field spec");
        }
    }
}

int gb_rank(const LeadSet& L) {
    int rank = 0;
    for (const auto& comp : L.leads) {
        if (!comp.empty()) ++rank;
    }
    return rank;
}

namespace {

std::vector<ModuleElement> unit_differentials(const ExtensionPresentation& X) {
    std::vector<ModuleElement> units;
    units.reserve(X.generators);
    for (int c = 0; c < X.generators; ++c) {
        units.push_back(ModuleElement::basis(X.field, X.generators, c));
    }
    return units;
}

bool all_monomial(const std::vector<ModuleElement>& gb) {
    return std::all_of(gb.begin(), gb.end(), [](const ModuleElement& g) {
        return g.terms().size() == 1;
    });
}

// dim(N intersect M_r) table via lead-term counting, all r = 0..limit
std::vector<Integer> staircase_table(const LeadSet& LU, const LeadSet& LR,
                                     const Signature& sig, int limit) {
    std::vector<Integer> t(limit + 1);
    for (int r = 0; r <= limit; ++r) {
        t[r] = count_exact(LU, sig, r) - count_exact(LR, sig, r);
    }
    return t;
}

// Shared pipeline behind chi_extension and chi_intermediate: the submodule
// N of M = D^s/relations generated by diffs, its induced-filtration
// dimension function, eventual polynomial, invariants and oracle record.
DimensionReport chi_core(const ExtensionPresentation& X,
                         const std::vector<ModuleElement>& diffs,
                         const std::optional<PartitionSpec>& part,
                         const ReportOptions& opts) {
    TermOrder ord = TermOrder::ord_graded();
    // the filtration is indexed by Lambda over N-exponents even when the
    // signature is inversive; Lambda* only enters through scalar actions
    Signature sig(X.signature().derivations, X.signature().translations, false);

    std::vector<ModuleElement> lower = X.relations;
    std::vector<ModuleElement> gb_lower = groebner(lower, ord);
    std::vector<ModuleElement> upper = gb_lower;
    for (const auto& z : diffs) {
        ModuleElement reduced = normal_form(z, gb_lower, ord);
        if (!reduced.is_zero()) upper.push_back(reduced);
    }
    std::vector<ModuleElement> gb_upper = groebner(upper, ord);

    LeadSet LR = lead_set(gb_lower, ord, X.generators);
    LeadSet LU = lead_set(gb_upper, ord, X.generators);

    DimensionReport rep;
    auto compl_lower = complement_polynomial(LR, sig);
    auto compl_upper = complement_polynomial(LU, sig);
    rep.chi = compl_lower.poly - compl_upper.poly;
    rep.threshold = std::max(compl_lower.threshold, compl_upper.threshold);
    rep.inv = invariants(rep.chi, sig.derivations, sig.translations);

    int limit = std::max(opts.table_limit, rep.threshold + 4);
    rep.table = staircase_table(LU, LR, sig, limit);
    for (int r = rep.threshold; r <= limit; ++r) {
        if (rep.chi.eval(r) != rep.table[r]) {
            throw Error("InternalError",
                        "staircase table disagrees with its polynomial");
        }
    }

    if (part) {
        rep.multivariate = true;
        rep.partition = part;
        auto bl = complement_polynomial(LR, sig, *part);
        auto bu = complement_polynomial(LU, sig, *part);
        rep.phi = bl.poly - bu.poly;
        rep.thresholds.resize(part->blocks());
        for (int k = 0; k < part->blocks(); ++k) {
            rep.thresholds[k] = std::max(bl.thresholds[k], bu.thresholds[k]);
        }
        rep.blockwise_certified = all_monomial(gb_lower) && all_monomial(gb_upper);
        rep.minv.total_degree = rep.phi.total_degree();
        rep.minv.support = rep.phi.support();
        rep.minv.a_caps = rep.phi.coeff(
            IndexTuple(rep.phi.caps().begin(), rep.phi.caps().end()));
        for (const auto& [idx, c] : rep.phi.terms()) {
            int td = 0;
            for (int v : idx) td += v;
            if (td == rep.minv.total_degree) rep.minv.top_terms[idx] = c;
        }
        if (!rep.minv.support.empty()) {
            rep.minv.support_maxima = maximal_index_set(rep.minv.support);
        }

        rep.table_bounds.assign(part->blocks(), opts.multi_table_limit);
        for (int k = 0; k < part->blocks(); ++k) {
            rep.table_bounds[k] =
                std::max(rep.table_bounds[k], rep.thresholds[k] + 2);
        }
        // row-major grid, axis 0 slowest
        std::vector<int> point(part->blocks(), 0);
        while (true) {
            rep.multi_table.push_back(
                count_exact(LU, sig, *part, point) -
                count_exact(LR, sig, *part, point));
            // polynomial agreement above the thresholds
            bool above = true;
            for (int k = 0; k < part->blocks(); ++k) {
                if (point[k] < rep.thresholds[k]) above = false;
            }
            if (above) {
                std::vector<Integer> pt(point.begin(), point.end());
                if (rep.phi.eval(pt) != rep.multi_table.back()) {
                    throw Error("InternalError",
                                "blockwise table disagrees with its polynomial");
                }
            }
            int axis = part->blocks() - 1;
            while (axis >= 0) {
                if (++point[axis] <= rep.table_bounds[axis]) break;
                point[axis] = 0;
                --axis;
            }
            if (axis < 0) break;
        }
    }

    if (opts.verify_r_max) {
        rep.oracle.checked = true;
        rep.oracle.r_max = *opts.verify_r_max;
        TruncationWindow w(rep.oracle.r_max);
        rep.oracle.values = dim_intersection(diffs, X, w);
        rep.oracle.match = true;
        for (int r = 0; r <= rep.oracle.r_max && r <= limit; ++r) {
            if (rep.oracle.values[r] != rep.table[r]) rep.oracle.match = false;
        }
        if (part) {
            int total = 0;
            for (int b : rep.table_bounds) total += b;
            TruncationWindow wb(total);
            rep.oracle.multi_values = dim_intersection_blockwise(
                diffs, X, *part, rep.table_bounds, wb);
            if (rep.oracle.multi_values != rep.multi_table) {
                rep.oracle.match = false;
            }
        }
    }
    return rep;
}

}  // namespace

DimensionReport chi_extension(const ExtensionPresentation& X,
                              const std::optional<PartitionSpec>& part,
                              const ReportOptions& opts) {
    return chi_core(X, unit_differentials(X), part, opts);
}

DimensionReport chi_intermediate(const ExtensionPresentation& X,
                                 const IntermediateFieldSpec& F,
                                 const std::optional<PartitionSpec>& part,
                                 const ReportOptions& opts) {
    if (!F.sigma_delta_closed) {
        throw Error("NotSigmaDeltaClosed",
                    "intermediate field not asserted closed under the basic "
                    "operators; the induced dimension function need not be "
                    "polynomial");
    }
    for (const auto& d : F.differentials) {
        if (d.rank() != X.generators) {
            throw Error("ValidationError",
                        "differential outside the presented module");
        }
    }
    return chi_core(X, F.differentials, part, opts);
}

ProbeResult quasi_polynomial_probe(const ExtensionPresentation& X,
                                   const std::vector<ModuleElement>& generators,
                                   int r_max) {
    std::vector<ModTerm> monomials;
    monomials.reserve(generators.size());
    for (const auto& g : generators) {
        if (g.terms().size() != 1) {
            throw Error("NonMonomialGenerator",
                        "direct transcendence counting needs monomial "
                        "generators lambda*e_i");
        }
        monomials.push_back(g.terms().begin()->first);
    }
    ProbeResult res;
    res.values.reserve(r_max + 1);
    for (int r = 0; r <= r_max; ++r) {
        res.values.push_back(trdeg_monomial_field(monomials, X, r));
    }
    std::vector<std::pair<long long, Integer>> pts;
    for (int r = 0; r <= r_max; ++r) pts.emplace_back(r, res.values[r]);
    try {
        res.poly = interpolate(pts, X.signature().total());
        res.eventually_polynomial = true;
        res.verdict = "Polynomial";
    } catch (const Error& e) {
        if (e.code() != "NotEventuallyPolynomial") throw;
        res.eventually_polynomial = false;
        res.verdict = "NotEventuallyPolynomial";
    }
    return res;
}

ModuleElement transform_through(const ModuleElement& z,
                                const std::vector<ModuleElement>& rows) {
    if (z.rank() != static_cast<int>(rows.size())) {
        throw Error("ValidationError", "transition row count mismatch");
    }
    ModuleElement out(rows.front().field(), rows.front().rank());
    for (int j = 0; j < z.rank(); ++j) {
        OreOperator zj = z.component_operator(j);
        if (zj.is_zero()) continue;
        out = out + zj * rows[j];
    }
    return out;
}

namespace {

void check_mutually_inverse(const ExtensionPresentation& X,
                            const std::vector<ModuleElement>& forward_rows,
                            const std::vector<ModuleElement>& backward_rows,
                            const ExtensionPresentation& X2) {
    // backward after forward must fix d(eta_j) modulo the relations of X
    TermOrder ord = TermOrder::ord_graded();
    auto gb = groebner(X.relations, ord);
    for (int j = 0; j < X.generators; ++j) {
        ModuleElement composed =
            transform_through(backward_rows[j], forward_rows);
        ModuleElement delta =
            composed - ModuleElement::basis(X.field, X.generators, j);
        if (!normal_form(delta, gb, ord).is_zero()) {
            throw Error("TransitionNotInvertible",
                        "composition does not fix generator " +
                            std::to_string(j + 1));
        }
    }
    (void)X2;
}

}  // namespace

CompareOutcome compare_generator_sets(
    const ExtensionPresentation& X, const ExtensionPresentation& X2,
    const std::vector<ModuleElement>& forward_rows,
    const std::vector<ModuleElement>& backward_rows,
    const IntermediateFieldSpec& F, const IntermediateFieldSpec& F2,
    const ReportOptions& opts) {
    if (X.generators != X2.generators ||
        static_cast<int>(forward_rows.size()) != X2.generators ||
        static_cast<int>(backward_rows.size()) != X.generators) {
        throw Error("TransitionNotInvertible",
                    "transition matrix is not square over the generators");
    }
    if (!X.field->same_structure(*X2.field)) {
        throw Error("SignatureMismatch",
                    "presentations over different ground fields");
    }
    // rows of the forward transition express d(eta'_i) in X coordinates and
    // must live in D^s over X; backward rows the other way around
    check_mutually_inverse(X, forward_rows, backward_rows, X2);
    check_mutually_inverse(X2, backward_rows, forward_rows, X);

    CompareOutcome out;
    out.first = chi_intermediate(X, F, {}, opts);
    out.second = chi_intermediate(X2, F2, {}, opts);
    out.invariants_equal = out.first.inv == out.second.inv;
    return out;
}

}  // namespace ddpoly
