#pragma once

#include "ddpoly/kaehler.hpp"
#include "ddpoly/monoid.hpp"
#include "ddpoly/opalg.hpp"
#include "ddpoly/rational.hpp"

#include <utility>
#include <vector>

namespace ddpoly {

// Truncation control for the span saturation. Sweeps multiply the current
// layer by the basic operators; saturation stops at the first sweep that
// leaves every intersected dimension unchanged (fixed point), subject to the
// hard cap. Hitting the cap without a fixed point raises NotStabilized,
// never a silent truncation.
struct TruncationWindow {
    int r_max = 6;
    int max_sweeps = -1;  // -1: r_max + 8

    explicit TruncationWindow(int r = 6, int cap = -1)
        : r_max(r), max_sweeps(cap) {}
    int sweep_cap() const { return max_sweeps < 0 ? r_max + 8 : max_sweeps; }
};

// dim over the ground field of (N intersect M_r) for r = 0..r_max, where N
// is the submodule of M = D^s/relations generated by gens, M_r the induced
// filtration, all computed by exact fraction-field elimination on saturated
// spans (no Groebner machinery involved).
std::vector<Integer> dim_intersection(const std::vector<ModuleElement>& gens,
                                      const ExtensionPresentation& X,
                                      const TruncationWindow& w);

// blockwise analog: flat grid over bounds (r_1..r_B), r_k <= bounds[k],
// row-major with axis 0 slowest
std::vector<Integer> dim_intersection_blockwise(
    const std::vector<ModuleElement>& gens, const ExtensionPresentation& X,
    const PartitionSpec& part, const std::vector<int>& bounds,
    const TruncationWindow& w);

// trdeg over K of the plain field generated by distinct monomial images
// lambda*eta_j of a free extension: #{listed (j, lambda) : ord lambda <= r}.
// Throws AmbientNotFree.
Integer trdeg_monomial_field(const std::vector<ModTerm>& monomials,
                             const ExtensionPresentation& ambient, int r);

// span membership under the same saturation; true when v lies in the
// D-closure of gens within D^s/relations
bool oracle_member(const ModuleElement& v, const std::vector<ModuleElement>& gens,
                   const ExtensionPresentation& X, const TruncationWindow& w);

}  // namespace ddpoly
