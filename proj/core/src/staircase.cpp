#include "ddpoly/staircase.hpp"

#include <algorithm>

namespace ddpoly {

namespace {

std::vector<Exponent> antichain(std::vector<Exponent> leads) {
    std::sort(leads.begin(), leads.end());
    leads.erase(std::unique(leads.begin(), leads.end()), leads.end());
    std::vector<Exponent> minimal;
    for (const auto& e : leads) {
        bool dominated = false;
        for (const auto& f : leads) {
            if (!(f == e) && divides(f, e)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) minimal.push_back(e);
    }
    return minimal;
}

void check_non_inversive(const LeadSet& L) {
    for (const auto& comp : L.leads) {
        for (const auto& e : comp) {
            for (int j = 0; j < e.alpha_size(); ++j) {
                if (e.l(j) < 0) {
                    throw Error("InversiveUnsupported",
                                "closed-form counting needs N-exponents");
                }
            }
        }
    }
}

// enumerate subsets of one component's lead set; calls f(join, parity)
template <typename F>
void for_each_subset_join(const std::vector<Exponent>& leads,
                          const Signature& sig, F&& f) {
    size_t n = leads.size();
    if (n > 24) {
        throw Error("ValidationError", "lead set too large for subset sweep");
    }
    for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
        Exponent join = Exponent::zero(sig);
        int bits = 0;
        for (size_t i = 0; i < n; ++i) {
            if (mask & (size_t{1} << i)) {
                join = Exponent::join(join, leads[i]);
                ++bits;
            }
        }
        f(join, bits % 2 == 0 ? 1 : -1);
    }
}

}  // namespace

LeadSet LeadSet::make(int components,
                      std::vector<std::vector<Exponent>> raw_leads) {
    if (components < 1) {
        throw Error("ValidationError", "lead set needs >= 1 components");
    }
    raw_leads.resize(components);
    LeadSet L;
    L.components = components;
    L.leads.reserve(components);
    for (auto& comp : raw_leads) {
        L.leads.push_back(antichain(std::move(comp)));
    }
    return L;
}

LeadSet LeadSet::empty(int components) {
    return make(components, std::vector<std::vector<Exponent>>(components));
}

LeadSet lead_set(const std::vector<ModuleElement>& gb, const TermOrder& ord,
                 int rank) {
    std::vector<std::vector<Exponent>> leads(rank);
    for (const auto& g : gb) {
        auto t = g.lead_term(ord);
        if (!t) continue;
        leads[t->component].push_back(t->exponent);
    }
    return LeadSet::make(rank, std::move(leads));
}

Integer count_exact(const LeadSet& L, const Signature& sig, int r) {
    Integer count = 0;
    auto lattice = enumerate_total(sig, r);
    for (const auto& comp : L.leads) {
        for (const auto& e : lattice) {
            for (const auto& lead : comp) {
                if (divides(lead, e)) {
                    ++count;
                    break;
                }
            }
        }
    }
    return count;
}

Integer count_exact(const LeadSet& L, const Signature& sig,
                    const PartitionSpec& part, const std::vector<int>& bounds) {
    Integer count = 0;
    auto lattice = enumerate_blockwise(sig, part, bounds);
    for (const auto& comp : L.leads) {
        for (const auto& e : lattice) {
            for (const auto& lead : comp) {
                if (divides(lead, e)) {
                    ++count;
                    break;
                }
            }
        }
    }
    return count;
}

ComplementPolynomial complement_polynomial(const LeadSet& L,
                                           const Signature& sig) {
    check_non_inversive(L);
    unsigned d = static_cast<unsigned>(sig.total());
    Dense acc;
    int threshold = 0;
    for (const auto& comp : L.leads) {
        for_each_subset_join(comp, sig, [&](const Exponent& join, int sign) {
            int c = join.ord();
            threshold = std::max(threshold, c);
            Dense term = binomial_dense(static_cast<long long>(sig.total()) - c, d);
            if (acc.size() < term.size()) acc.resize(term.size(), Rational(0));
            for (size_t u = 0; u < term.size(); ++u) {
                acc[u] += Rational(sign) * term[u];
            }
        });
    }
    return ComplementPolynomial{to_binomial_basis(acc), threshold};
}

ComplementPolynomialBlockwise complement_polynomial(const LeadSet& L,
                                                    const Signature& sig,
                                                    const PartitionSpec& part) {
    check_non_inversive(L);
    std::vector<int> caps;
    for (int b : part.delta_blocks) caps.push_back(b);
    for (int b : part.sigma_blocks) caps.push_back(b);
    int axes = static_cast<int>(caps.size());

    MultiDense acc;
    std::vector<int> thresholds(axes, 0);
    for (const auto& comp : L.leads) {
        for_each_subset_join(comp, sig, [&](const Exponent& join, int sign) {
            std::vector<int> c = join.block_orders(part);
            // per-axis dense factors C(t_k - c_k + cap_k, cap_k)
            std::vector<Dense> factors;
            factors.reserve(axes);
            for (int k = 0; k < axes; ++k) {
                thresholds[k] = std::max(thresholds[k], c[k]);
                factors.push_back(binomial_dense(
                    static_cast<long long>(caps[k]) - c[k],
                    static_cast<unsigned>(caps[k])));
            }
            MultiDense prod{{IndexTuple(axes, 0), Rational(sign)}};
            for (int k = 0; k < axes; ++k) {
                MultiDense next;
                for (const auto& [idx, v] : prod) {
                    for (size_t u = 0; u < factors[k].size(); ++u) {
                        if (factors[k][u] == 0) continue;
                        IndexTuple idx2 = idx;
                        idx2[k] = static_cast<int>(u);
                        next[idx2] += v * factors[k][u];
                    }
                }
                prod = std::move(next);
            }
            for (const auto& [idx, v] : prod) acc[idx] += v;
        });
    }
    return ComplementPolynomialBlockwise{to_multi_binomial_basis(acc, caps),
                                         std::move(thresholds)};
}

}  // namespace ddpoly
