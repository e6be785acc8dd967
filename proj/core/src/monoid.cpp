#include "ddpoly/monoid.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>

namespace ddpoly {

Signature::Signature(int m, int n, bool inv)
    : derivations(m), translations(n), inversive(inv) {
    if (m < 0 || n < 0 || m + n < 1) {
        throw Error("ValidationError",
                    "signature needs m >= 0, n >= 0, m + n >= 1");
    }
}

PartitionSpec::PartitionSpec(std::vector<int> dblocks, std::vector<int> sblocks,
                             const Signature& sig)
    : delta_blocks(std::move(dblocks)), sigma_blocks(std::move(sblocks)) {
    auto check = [](const std::vector<int>& blocks, int expected,
                    const char* what) {
        int sum = 0;
        for (int b : blocks) {
            if (b <= 0) {
                throw Error("ValidationError",
                            std::string("empty ") + what + " block");
            }
            sum += b;
        }
        if (sum != expected) {
            throw Error("ValidationError",
                        std::string(what) + " blocks do not cover the set");
        }
    };
    check(delta_blocks, sig.derivations, "delta");
    check(sigma_blocks, sig.translations, "sigma");
    if (blocks() < 1) {
        throw Error("ValidationError", "partition needs at least one block");
    }
}

PartitionSpec PartitionSpec::trivial(const Signature& sig) {
    std::vector<int> d, s;
    if (sig.derivations > 0) d.push_back(sig.derivations);
    if (sig.translations > 0) s.push_back(sig.translations);
    return PartitionSpec(std::move(d), std::move(s), sig);
}

Exponent Exponent::zero(const Signature& sig) {
    Exponent e;
    e.k_.assign(sig.derivations, 0);
    e.l_.assign(sig.translations, 0);
    return e;
}

Exponent Exponent::make(const Signature& sig, std::vector<int> k,
                        std::vector<int> l) {
    if (static_cast<int>(k.size()) != sig.derivations ||
        static_cast<int>(l.size()) != sig.translations) {
        throw Error("SignatureMismatch", "exponent arity differs from signature");
    }
    for (int v : k) {
        if (v < 0) {
            throw Error("ValidationError", "negative derivation exponent");
        }
    }
    if (!sig.inversive) {
        for (int v : l) {
            if (v < 0) {
                throw Error("ValidationError",
                            "negative translation exponent in a non-inversive "
                            "signature");
            }
        }
    }
    Exponent e;
    e.k_ = std::move(k);
    e.l_ = std::move(l);
    return e;
}

int Exponent::ord() const {
    int s = 0;
    for (int v : k_) s += v;
    for (int v : l_) s += std::abs(v);
    return s;
}

std::vector<int> Exponent::block_orders(const PartitionSpec& part) const {
    if (std::accumulate(part.delta_blocks.begin(), part.delta_blocks.end(), 0) !=
            delta_size() ||
        std::accumulate(part.sigma_blocks.begin(), part.sigma_blocks.end(), 0) !=
            alpha_size()) {
        throw Error("SignatureMismatch", "partition does not match exponent arity");
    }
    std::vector<int> out;
    out.reserve(part.blocks());
    int at = 0;
    for (int b : part.delta_blocks) {
        int s = 0;
        for (int i = 0; i < b; ++i) s += k_[at + i];
        out.push_back(s);
        at += b;
    }
    at = 0;
    for (int b : part.sigma_blocks) {
        int s = 0;
        for (int j = 0; j < b; ++j) s += std::abs(l_[at + j]);
        out.push_back(s);
        at += b;
    }
    return out;
}

int Exponent::ord_block(const PartitionSpec& part, int block) const {
    if (block < 1 || block > part.blocks()) {
        throw Error("BlockOutOfRange",
                    "block " + std::to_string(block) + " not in 1.." +
                        std::to_string(part.blocks()));
    }
    return block_orders(part)[block - 1];
}

bool Exponent::is_zero() const {
    for (int v : k_) {
        if (v != 0) return false;
    }
    for (int v : l_) {
        if (v != 0) return false;
    }
    return true;
}

Exponent Exponent::plus(const Exponent& o) const {
    if (k_.size() != o.k_.size() || l_.size() != o.l_.size()) {
        throw Error("SignatureMismatch", "exponent arity clash in product");
    }
    Exponent e = *this;
    for (size_t i = 0; i < k_.size(); ++i) e.k_[i] += o.k_[i];
    for (size_t j = 0; j < l_.size(); ++j) e.l_[j] += o.l_[j];
    return e;
}

Exponent Exponent::minus(const Exponent& o) const {
    if (k_.size() != o.k_.size() || l_.size() != o.l_.size()) {
        throw Error("SignatureMismatch", "exponent arity clash in quotient");
    }
    Exponent e = *this;
    for (size_t i = 0; i < k_.size(); ++i) e.k_[i] -= o.k_[i];
    for (size_t j = 0; j < l_.size(); ++j) e.l_[j] -= o.l_[j];
    return e;
}

Exponent Exponent::join(const Exponent& a, const Exponent& b) {
    if (a.k_.size() != b.k_.size() || a.l_.size() != b.l_.size()) {
        throw Error("SignatureMismatch", "exponent arity clash in join");
    }
    Exponent e = a;
    for (size_t i = 0; i < a.k_.size(); ++i) e.k_[i] = std::max(a.k_[i], b.k_[i]);
    for (size_t j = 0; j < a.l_.size(); ++j) e.l_[j] = std::max(a.l_[j], b.l_[j]);
    return e;
}

int Exponent::compare(const Exponent& a, const Exponent& b) {
    int oa = a.ord(), ob = b.ord();
    if (oa != ob) return oa < ob ? -1 : 1;
    if (a.k_ != b.k_) return a.k_ < b.k_ ? -1 : 1;
    if (a.l_ != b.l_) return a.l_ < b.l_ ? -1 : 1;
    return 0;
}

std::string Exponent::to_text() const {
    std::string out;
    auto emit = [&out](const char* stem, int index, int power) {
        if (power == 0) return;
        if (!out.empty()) out += ' ';
        out += stem + std::to_string(index + 1);
        if (power != 1) out += "^" + std::to_string(power);
    };
    for (size_t i = 0; i < k_.size(); ++i) emit("d", static_cast<int>(i), k_[i]);
    for (size_t j = 0; j < l_.size(); ++j) emit("a", static_cast<int>(j), l_[j]);
    return out.empty() ? "1" : out;
}

bool divides(const Exponent& a, const Exponent& b) {
    if (a.delta_size() != b.delta_size() || a.alpha_size() != b.alpha_size()) {
        throw Error("SignatureMismatch", "exponent arity clash in divides");
    }
    for (int i = 0; i < a.delta_size(); ++i) {
        if (a.k(i) > b.k(i)) return false;
    }
    for (int j = 0; j < a.alpha_size(); ++j) {
        int x = a.l(j), y = b.l(j);
        if (y >= 0) {
            if (x < 0 || x > y) return false;
        } else {
            if (x > 0 || x < y) return false;
        }
    }
    return true;
}

namespace {

void enumerate_rec(const Signature& sig, int coord, std::vector<int>& k,
                   std::vector<int>& l,
                   const std::function<bool(const std::vector<int>&,
                                            const std::vector<int>&)>& fits,
                   std::vector<Exponent>& out, int hard_bound) {
    int m = sig.derivations, n = sig.translations;
    if (coord == m + n) {
        if (fits(k, l)) out.push_back(Exponent::make(sig, k, l));
        return;
    }
    if (coord < m) {
        for (int v = 0; v <= hard_bound; ++v) {
            k[coord] = v;
            enumerate_rec(sig, coord + 1, k, l, fits, out, hard_bound);
        }
        k[coord] = 0;
    } else {
        int j = coord - m;
        int lo = sig.inversive ? -hard_bound : 0;
        for (int v = lo; v <= hard_bound; ++v) {
            l[j] = v;
            enumerate_rec(sig, coord + 1, k, l, fits, out, hard_bound);
        }
        l[j] = 0;
    }
}

std::vector<Exponent> enumerate_where(
    const Signature& sig, int hard_bound,
    const std::function<bool(const std::vector<int>&, const std::vector<int>&)>&
        fits) {
    std::vector<int> k(sig.derivations, 0), l(sig.translations, 0);
    std::vector<Exponent> out;
    enumerate_rec(sig, 0, k, l, fits, out, hard_bound);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<Exponent> enumerate_total(const Signature& sig, int r) {
    if (r < 0) throw Error("ValidationError", "negative enumeration bound");
    return enumerate_where(sig, r, [r](const std::vector<int>& k,
                                       const std::vector<int>& l) {
        long long s = 0;
        for (int v : k) s += v;
        for (int v : l) s += std::abs(v);
        return s <= r;
    });
}

std::vector<Exponent> enumerate_blockwise(const Signature& sig,
                                          const PartitionSpec& part,
                                          const std::vector<int>& bounds) {
    if (static_cast<int>(bounds.size()) != part.blocks()) {
        throw Error("ValidationError", "one bound per block expected");
    }
    int hard = 0;
    for (int b : bounds) {
        if (b < 0) throw Error("ValidationError", "negative enumeration bound");
        hard = std::max(hard, b);
    }
    return enumerate_where(
        sig, hard,
        [&](const std::vector<int>& k, const std::vector<int>& l) {
            int at = 0, idx = 0;
            for (int b : part.delta_blocks) {
                int s = 0;
                for (int i = 0; i < b; ++i) s += k[at + i];
                if (s > bounds[idx]) return false;
                at += b;
                ++idx;
            }
            at = 0;
            for (int b : part.sigma_blocks) {
                int s = 0;
                for (int j = 0; j < b; ++j) s += std::abs(l[at + j]);
                if (s > bounds[idx]) return false;
                at += b;
                ++idx;
            }
            return true;
        });
}

}  // namespace ddpoly
