#pragma once

#include "ddpoly/kaehler.hpp"

#include <utility>
#include <vector>

namespace ddpoly {

// Descending chain F_0 >= F_1 >= ... of intermediate fields of one
// extension; containment means every generator differential of F_{i+1} lies
// in the submodule of F_i, checked by Groebner membership.
struct ChainSpec {
    ExtensionPresentation extension;
    std::vector<IntermediateFieldSpec> links;
};

// deg(chi_i - chi_{i+1}) per consecutive pair; -1 marks equal polynomials.
// Throws ContainmentViolated when the chain invariant fails.
std::vector<std::pair<int, int>> degree_gap_audit(const ChainSpec& chain,
                                                  const ReportOptions& opts = {});

// The explicit strictly descending chains behind the type bound, stitched
// into one chain ending at K: stage tau descends through powers of the
// stage driver (delta_tau, or alpha_j - 1 for translation stages) up to
// caps[tau], carrying the raised safety elements of the earlier stages.
// Requires a free presentation with a single generator.
ChainSpec theorem5_chain(const ExtensionPresentation& X,
                         const std::vector<int>& caps);

struct DimBoundReport {
    int type_lower_bound = 0;           // m + n
    int dim = 0;                        // k
    std::vector<Integer> top_coeffs;    // c_{m+n} along F_k >= ... >= F_0
    std::vector<Integer> drops;         // consecutive differences
};

// Chain F_j = <e_1..e_j> over a free rank-k presentation: every consecutive
// top-coefficient drop is 1 and the drops sum to k. Throws NotFree.
DimBoundReport dim_bound_report(const ExtensionPresentation& X, int k,
                                const ReportOptions& opts = {});

}  // namespace ddpoly
