#pragma once

#include "ddpoly/errors.hpp"

#include <string>
#include <vector>

namespace ddpoly {

// Basic set sizes: m derivations d1..dm, n translations a1..an. The inversive
// flag lets translation exponents range over Z instead of N.
struct Signature {
    int derivations = 0;
    int translations = 0;
    bool inversive = false;

    Signature() = default;
    Signature(int m, int n, bool inv = false);

    int total() const { return derivations + translations; }
    bool operator==(const Signature&) const = default;
};

// Contiguous partition of the basic set: block sizes m_1..m_p over the
// derivations and n_1..n_q over the translations.
struct PartitionSpec {
    std::vector<int> delta_blocks;
    std::vector<int> sigma_blocks;

    PartitionSpec() = default;
    PartitionSpec(std::vector<int> dblocks, std::vector<int> sblocks,
                  const Signature& sig);

    int p() const { return static_cast<int>(delta_blocks.size()); }
    int q() const { return static_cast<int>(sigma_blocks.size()); }
    int blocks() const { return p() + q(); }

    // Trivial partition: one delta block, one sigma block (blocks for empty
    // sides are omitted).
    static PartitionSpec trivial(const Signature& sig);

    bool operator==(const PartitionSpec&) const = default;
};

// Power product d1^k1..dm^km a1^l1..an^ln. k entries are nonnegative; l
// entries may be negative only under an inversive signature.
class Exponent {
public:
    Exponent() = default;

    static Exponent zero(const Signature& sig);
    static Exponent make(const Signature& sig, std::vector<int> k,
                         std::vector<int> l);

    int delta_size() const { return static_cast<int>(k_.size()); }
    int alpha_size() const { return static_cast<int>(l_.size()); }
    int k(int i) const { return k_[i]; }
    int l(int j) const { return l_[j]; }

    int ord() const;
    // 1-based block index over the concatenated (delta, sigma) blocks.
    int ord_block(const PartitionSpec& part, int block) const;
    std::vector<int> block_orders(const PartitionSpec& part) const;

    bool is_zero() const;

    Exponent plus(const Exponent& o) const;
    // pre: divides(o, *this); stays within the orthant of *this
    Exponent minus(const Exponent& o) const;
    // coordinatewise max; N-exponents only
    static Exponent join(const Exponent& a, const Exponent& b);

    // graded order: ord first, then lex on (k_1..k_m, l_1..l_n)
    static int compare(const Exponent& a, const Exponent& b);
    bool operator<(const Exponent& o) const { return compare(*this, o) < 0; }
    bool operator==(const Exponent&) const = default;

    std::string to_text() const;  // "d1^2 d2 a1^-3"; "1" for the identity

private:
    std::vector<int> k_, l_;
};

// Orthant-wise divisibility: b - a must be a valid exponent with every
// Z-coordinate weakly on the same side of 0 as b's coordinate.
bool divides(const Exponent& a, const Exponent& b);

// All exponents of total order <= r, graded then lexicographic.
std::vector<Exponent> enumerate_total(const Signature& sig, int r);

// All exponents with ord_block <= bounds[b] for every block, same order.
std::vector<Exponent> enumerate_blockwise(const Signature& sig,
                                          const PartitionSpec& part,
                                          const std::vector<int>& bounds);

}  // namespace ddpoly
