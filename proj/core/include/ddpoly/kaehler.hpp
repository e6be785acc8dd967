#pragma once

#include "ddpoly/monoid.hpp"
#include "ddpoly/numpoly.hpp"
#include "ddpoly/opalg.hpp"
#include "ddpoly/staircase.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ddpoly {

// Presentation of a difference-differential field extension L = K<eta_1..s>
// through a D-module presentation of its module of differentials: the free
// module D^s on d(eta_1)..d(eta_s) modulo the listed relations. An empty
// relation list presents the free extension.
struct ExtensionPresentation {
    FieldPtr field;
    int generators = 1;  // s
    std::vector<ModuleElement> relations;

    ExtensionPresentation(FieldPtr f, int s, std::vector<ModuleElement> rels);
    bool is_free() const { return relations.empty(); }
    const Signature& signature() const { return field->signature(); }
};

// Intermediate field F of L/K described through differentials of its
// declared generators; the caller asserts that F is closed under the basic
// operators (the spec of the counterexamples shows the assertion is
// mathematically necessary, not a formality).
struct IntermediateFieldSpec {
    std::vector<ModuleElement> differentials;
    bool sigma_delta_closed = false;

    IntermediateFieldSpec() = default;
    IntermediateFieldSpec(std::vector<ModuleElement> diffs, bool closed);
};

struct OracleRecord {
    bool checked = false;
    int r_max = -1;
    bool match = true;
    std::vector<Integer> values;        // univariate table, r = 0..r_max
    std::vector<Integer> multi_values;  // blockwise grid, multivariate runs
};

// Result of a dimension computation: the eventual polynomial with the
// threshold from which it provably agrees with the exact value table.
struct DimensionReport {
    bool multivariate = false;

    NumericalPolynomial chi;
    int threshold = 0;
    PolyInvariants inv;
    std::vector<Integer> table;  // exact values, r = 0..table_limit

    // multivariate mode
    MultiNumericalPolynomial phi;
    std::vector<int> thresholds;
    MultiInvariants minv;
    std::optional<PartitionSpec> partition;
    std::vector<int> table_bounds;       // grid bounds per axis
    std::vector<Integer> multi_table;    // row-major, axis 0 slowest
    bool blockwise_certified = false;    // reduced GB was monomial

    OracleRecord oracle;
};

struct ReportOptions {
    int table_limit = 8;
    std::optional<int> verify_r_max;  // oracle cross-check when set
    int multi_table_limit = 5;
};

// chi_{eta|K}: dimension polynomial of the extension itself.
DimensionReport chi_extension(const ExtensionPresentation& X,
                              const std::optional<PartitionSpec>& part = {},
                              const ReportOptions& opts = {});

// chi_{K,F,eta}: dimension polynomial of an intermediate field, computed on
// the induced filtration N intersect M_r via lead-term counting. Throws
// NotSigmaDeltaClosed when the closure flag is missing.
DimensionReport chi_intermediate(const ExtensionPresentation& X,
                                 const IntermediateFieldSpec& F,
                                 const std::optional<PartitionSpec>& part = {},
                                 const ReportOptions& opts = {});

struct ProbeResult {
    std::vector<Integer> values;  // r = 0..r_max
    bool eventually_polynomial = false;
    std::optional<NumericalPolynomial> poly;
    std::string verdict;  // "Polynomial" or "NotEventuallyPolynomial"
};

// trdeg table of the plain field generated by monomial images (no closure
// applied), with a front-anchored interpolation attempt. Generators must be
// monomial elements lambda*e_i; ambient extension must be free.
ProbeResult quasi_polynomial_probe(const ExtensionPresentation& X,
                                   const std::vector<ModuleElement>& generators,
                                   int r_max);

struct CompareOutcome {
    DimensionReport first;
    DimensionReport second;
    bool invariants_equal = false;
};

// Verifies that the supplied transition rows are mutually inverse module
// maps modulo the respective relations (TransitionNotInvertible otherwise),
// then computes both intermediate-field reports and compares (d, c_d,
// c_{m+n}).
CompareOutcome compare_generator_sets(
    const ExtensionPresentation& X, const ExtensionPresentation& X2,
    const std::vector<ModuleElement>& forward_rows,   // d(eta'_i) in X coords
    const std::vector<ModuleElement>& backward_rows,  // d(eta_j) in X2 coords
    const IntermediateFieldSpec& F, const IntermediateFieldSpec& F2,
    const ReportOptions& opts = {});

// Rewrites an element of X-coordinates through backward rows into
// X2-coordinates: z = sum_j z_j e_j  ->  sum_j z_j * backward_rows[j].
ModuleElement transform_through(const ModuleElement& z,
                                const std::vector<ModuleElement>& rows);

// D-rank of the submodule from its Groebner lead data: components with a
// nonempty lead antichain.
int gb_rank(const LeadSet& L);

}  // namespace ddpoly
