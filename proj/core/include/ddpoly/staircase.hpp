#pragma once

#include "ddpoly/monoid.hpp"
#include "ddpoly/numpoly.hpp"
#include "ddpoly/opalg.hpp"

#include <vector>

namespace ddpoly {

// Lead-exponent data of a submodule of a rank-s free module: one finite
// antichain (under divides) per component.
struct LeadSet {
    int components = 1;
    std::vector<std::vector<Exponent>> leads;  // per component, sorted

    static LeadSet make(int components,
                        std::vector<std::vector<Exponent>> raw_leads);
    static LeadSet empty(int components);
};

// Lead set of a Groebner basis, antichain-normalized per component.
LeadSet lead_set(const std::vector<ModuleElement>& gb, const TermOrder& ord,
                 int rank);

// #{(i, e) : e in Lambda(r), some lead of component i divides e}. By the
// graded-order correspondence this equals dim(N intersect M_r).
Integer count_exact(const LeadSet& L, const Signature& sig, int r);

// blockwise bounds, one per partition block
Integer count_exact(const LeadSet& L, const Signature& sig,
                    const PartitionSpec& part, const std::vector<int>& bounds);

// Eventual polynomial counting the NON-divisible positions, summed over
// components, plus the threshold r0 from which it is exact: inclusion-
// exclusion over subset joins, each subset S contributing
// (-1)^|S| C(t - ord(join S) + m+n, m+n). Throws InversiveUnsupported.
struct ComplementPolynomial {
    NumericalPolynomial poly;
    int threshold = 0;
};
ComplementPolynomial complement_polynomial(const LeadSet& L,
                                           const Signature& sig);

// blockwise product form under a partition; per-axis thresholds
struct ComplementPolynomialBlockwise {
    MultiNumericalPolynomial poly;
    std::vector<int> thresholds;
};
ComplementPolynomialBlockwise complement_polynomial(const LeadSet& L,
                                                    const Signature& sig,
                                                    const PartitionSpec& part);

}  // namespace ddpoly
