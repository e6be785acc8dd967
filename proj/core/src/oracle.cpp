#include "ddpoly/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ddpoly {

namespace {

// Sparse row echelon over the ground field with a fixed column order.
// Columns listed "bad first": every position after a pivot is then at least
// as deep in the filtration as the pivot itself, so counting pivots by
// region gives intersection dimensions directly.
class Echelon {
public:
    explicit Echelon(std::vector<ModTerm> columns) : columns_(std::move(columns)) {
        for (size_t i = 0; i < columns_.size(); ++i) index_[columns_[i]] = i;
    }

    using Row = std::map<size_t, RatFunc>;

    Row to_row(const ModuleElement& v) const {
        Row row;
        for (const auto& [t, c] : v.terms()) {
            auto it = index_.find(t);
            if (it == index_.end()) {
                throw Error("InternalError", "span term outside the ambient window");
            }
            row[it->second] = c;
        }
        return row;
    }

    // reduce against current pivots; true when a new pivot was added
    bool add(const ModuleElement& v) {
        Row row = reduce(to_row(v));
        if (row.empty()) return false;
        size_t pivot = row.begin()->first;
        RatFunc inv = row.begin()->second.inverse();
        for (auto& [c, val] : row) val = val * inv;
        pivots_[pivot] = rows_.size();
        rows_.push_back(std::move(row));
        return true;
    }

    bool contains(const ModuleElement& v) const {
        return reduce(to_row(v)).empty();
    }

    const std::map<size_t, size_t>& pivots() const { return pivots_; }
    const std::vector<ModTerm>& columns() const { return columns_; }

private:
    Row reduce(Row row) const {
        while (!row.empty()) {
            size_t lead = row.begin()->first;
            auto p = pivots_.find(lead);
            if (p == pivots_.end()) return row;
            const Row& piv = rows_[p->second];
            RatFunc f = row.begin()->second;
            for (const auto& [c, val] : piv) {
                auto it = row.find(c);
                RatFunc next = (it == row.end() ? RatFunc(val.nvars()) : it->second) -
                               f * val;
                if (next.is_zero()) {
                    if (it != row.end()) row.erase(it);
                } else {
                    row[c] = next;
                }
            }
        }
        return row;
    }

    std::vector<ModTerm> columns_;
    std::map<ModTerm, size_t, ModTermStructuralLess> index_;
    std::vector<Row> rows_;
    std::map<size_t, size_t> pivots_;  // column -> row
};

std::vector<ModuleElement> nonzero_of(const std::vector<ModuleElement>& v) {
    std::vector<ModuleElement> out;
    for (const auto& e : v) {
        if (!e.is_zero()) out.push_back(e);
    }
    return out;
}

int max_ord_of(const std::vector<ModuleElement>& v) {
    int d = 0;
    for (const auto& e : v) d = std::max(d, e.ord());
    return d;
}

bool in_operator_monoid(const Exponent& e) {
    for (int j = 0; j < e.alpha_size(); ++j) {
        if (e.l(j) < 0) return false;
    }
    return true;
}

std::vector<ModTerm> ambient_columns(const ExtensionPresentation& X, int maxord,
                                     bool ord_descending) {
    std::vector<ModTerm> cols;
    for (const auto& e : enumerate_total(X.signature(), maxord)) {
        if (!in_operator_monoid(e)) continue;  // module terms live over D
        for (int c = 0; c < X.generators; ++c) {
            cols.push_back(ModTerm{c, e});
        }
    }
    std::sort(cols.begin(), cols.end(), [&](const ModTerm& a, const ModTerm& b) {
        int oa = a.exponent.ord(), ob = b.exponent.ord();
        if (ord_descending && oa != ob) return oa > ob;
        return ModTermStructuralLess{}(a, b);
    });
    return cols;
}

// Saturate the D-closure of seed inside the free module: sweep k feeds every
// product lambda*g with ord lambda = k into sink; stop at the first sweep
// past the floor that leaves observe() unchanged. Throws NotStabilized at
// the cap.
template <typename Sink, typename Observe>
void saturate(const std::vector<ModuleElement>& seed, const FieldPtr& F,
              int floor_sweeps, int cap, Sink&& sink, Observe&& observe) {
    const Signature& sig = F->signature();
    for (const auto& g : seed) sink(g);
    auto prev = observe();
    for (int sweep = 1;; ++sweep) {
        if (sweep > cap) {
            throw Error("NotStabilized",
                        "no fixed point within " + std::to_string(cap) +
                            " closure sweeps");
        }
        for (const auto& e : enumerate_total(sig, sweep)) {
            if (e.ord() != sweep || !in_operator_monoid(e)) continue;
            OreOperator mono = OreOperator::monomial(F, e, F->one());
            for (const auto& g : seed) sink(mono * g);
        }
        auto cur = observe();
        if (sweep >= floor_sweeps && cur == prev) return;
        prev = std::move(cur);
    }
}

// dim table r = 0..r_max of span(closure(seed)) intersect M_r in the free
// module D^s
std::vector<Integer> span_dim_table(const std::vector<ModuleElement>& seed,
                                    const ExtensionPresentation& X,
                                    const TruncationWindow& w) {
    std::vector<ModuleElement> gens = nonzero_of(seed);
    if (gens.empty()) return std::vector<Integer>(w.r_max + 1, Integer(0));
    int cap = w.sweep_cap();
    int maxord = cap + max_ord_of(gens);
    Echelon ech(ambient_columns(X, maxord, true));
    auto table = [&]() {
        std::vector<Integer> t(w.r_max + 1, Integer(0));
        for (const auto& [col, row] : ech.pivots()) {
            int o = ech.columns()[col].exponent.ord();
            if (o <= w.r_max) t[o] += 1;
        }
        for (int r = 1; r <= w.r_max; ++r) t[r] += t[r - 1];
        return t;
    };
    saturate(
        gens, X.field, std::min(w.r_max + 1, cap), cap,
        [&](const ModuleElement& h) { ech.add(h); }, table);
    return table();
}

}  // namespace

std::vector<Integer> dim_intersection(const std::vector<ModuleElement>& gens,
                                      const ExtensionPresentation& X,
                                      const TruncationWindow& w) {
    std::vector<ModuleElement> upper = nonzero_of(X.relations);
    for (const auto& g : gens) {
        if (!g.is_zero()) upper.push_back(g);
    }
    std::vector<Integer> table_u = span_dim_table(upper, X, w);
    if (X.is_free()) return table_u;
    std::vector<Integer> table_r = span_dim_table(X.relations, X, w);
    for (size_t i = 0; i < table_u.size(); ++i) table_u[i] -= table_r[i];
    return table_u;
}

std::vector<Integer> dim_intersection_blockwise(
    const std::vector<ModuleElement>& gens, const ExtensionPresentation& X,
    const PartitionSpec& part, const std::vector<int>& bounds,
    const TruncationWindow& w) {
    if (static_cast<int>(bounds.size()) != part.blocks()) {
        throw Error("ValidationError", "one bound per block expected");
    }
    // grid of (r_1..r_B), row-major, axis 0 slowest
    std::vector<std::vector<int>> grid;
    std::vector<int> point(bounds.size(), 0);
    while (true) {
        grid.push_back(point);
        int axis = static_cast<int>(bounds.size()) - 1;
        while (axis >= 0) {
            if (++point[axis] <= bounds[axis]) break;
            point[axis] = 0;
            --axis;
        }
        if (axis < 0) break;
    }

    auto grid_table = [&](const std::vector<ModuleElement>& seed) {
        std::vector<ModuleElement> live = nonzero_of(seed);
        if (live.empty()) return std::vector<Integer>(grid.size(), Integer(0));
        int cap = w.sweep_cap();
        int maxord = cap + max_ord_of(live);
        // one echelon per grid point, columns outside Lambda(r) first
        std::vector<Echelon> echs;
        echs.reserve(grid.size());
        std::vector<size_t> first_good(grid.size(), 0);
        auto base_cols = ambient_columns(X, maxord, false);
        for (size_t gi = 0; gi < grid.size(); ++gi) {
            const auto& pt = grid[gi];
            auto inside = [&](const ModTerm& t) {
                std::vector<int> bo = t.exponent.block_orders(part);
                for (size_t k = 0; k < bo.size(); ++k) {
                    if (bo[k] > pt[k]) return false;
                }
                return true;
            };
            std::vector<ModTerm> cols = base_cols;
            std::stable_sort(cols.begin(), cols.end(),
                             [&](const ModTerm& a, const ModTerm& b) {
                                 return !inside(a) && inside(b);
                             });
            size_t fg = 0;
            while (fg < cols.size() && !inside(cols[fg])) ++fg;
            first_good[gi] = fg;
            echs.emplace_back(std::move(cols));
        }
        auto table = [&]() {
            std::vector<Integer> t(grid.size(), Integer(0));
            for (size_t gi = 0; gi < grid.size(); ++gi) {
                for (const auto& [col, row] : echs[gi].pivots()) {
                    if (col >= first_good[gi]) t[gi] += 1;
                }
            }
            return t;
        };
        int total_floor = 0;
        for (int b : bounds) total_floor += b;
        saturate(
            live, X.field, std::min(total_floor + 1, cap), cap,
            [&](const ModuleElement& h) {
                for (auto& e : echs) e.add(h);
            },
            table);
        return table();
    };

    std::vector<ModuleElement> upper = nonzero_of(X.relations);
    for (const auto& g : gens) {
        if (!g.is_zero()) upper.push_back(g);
    }
    std::vector<Integer> table_u = grid_table(upper);
    if (!X.is_free()) {
        std::vector<Integer> table_r = grid_table(X.relations);
        for (size_t i = 0; i < table_u.size(); ++i) table_u[i] -= table_r[i];
    }
    return table_u;
}

Integer trdeg_monomial_field(const std::vector<ModTerm>& monomials,
                             const ExtensionPresentation& ambient, int r) {
    if (!ambient.is_free()) {
        throw Error("AmbientNotFree",
                    "direct transcendence counting needs a free extension");
    }
    std::set<ModTerm, ModTermStructuralLess> distinct(monomials.begin(),
                                                      monomials.end());
    Integer count = 0;
    for (const auto& t : distinct) {
        if (t.component < 0 || t.component >= ambient.generators) {
            throw Error("ValidationError", "monomial component out of range");
        }
        if (t.exponent.ord() <= r) ++count;
    }
    return count;
}

bool oracle_member(const ModuleElement& v, const std::vector<ModuleElement>& gens,
                   const ExtensionPresentation& X, const TruncationWindow& w) {
    std::vector<ModuleElement> upper = nonzero_of(X.relations);
    for (const auto& g : gens) {
        if (!g.is_zero()) upper.push_back(g);
    }
    if (upper.empty()) return v.is_zero();
    TruncationWindow local(std::max(w.r_max, v.ord()), w.max_sweeps);
    int cap = local.sweep_cap();
    int maxord = cap + std::max(max_ord_of(upper), v.ord());
    Echelon ech(ambient_columns(X, maxord, true));
    auto table = [&]() {
        std::vector<Integer> t(local.r_max + 1, Integer(0));
        for (const auto& [col, row] : ech.pivots()) {
            int o = ech.columns()[col].exponent.ord();
            if (o <= local.r_max) t[o] += 1;
        }
        for (int r = 1; r <= local.r_max; ++r) t[r] += t[r - 1];
        return t;
    };
    saturate(
        upper, X.field, std::min(local.r_max + 1, cap), cap,
        [&](const ModuleElement& h) { ech.add(h); }, table);
    return ech.contains(v);
}

}  // namespace ddpoly
