#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fockcb/error.hpp"
#include "fockcb/partition.hpp"

namespace fockcb {

/// r-bead beta-set: entries[i-1] = λ_i + r - i, strictly decreasing.
struct BetaSet {
    int r = 0;
    std::vector<int> entries;

    bool contains(int pos) const {
        return std::binary_search(entries.rbegin(), entries.rend(), pos);
    }
    bool operator==(const BetaSet&) const = default;
};

/// Runner data for a k-empty test at a given bead count r.
struct RunnerParams {
    int e = 0;
    int k = 0;
    int d = 0;  ///< runner index (r + k) mod e
    int c = 0;  ///< beads on runner d
    bool operator==(const RunnerParams&) const = default;
};

/// Finite multiset of integers, kept as ascending (value, multiplicity) pairs.
class IntMultiset {
public:
    IntMultiset() = default;
    explicit IntMultiset(const std::vector<int>& values) {
        std::map<int, int> m;
        for (int v : values) ++m[v];
        counts_.assign(m.begin(), m.end());
    }
    static IntMultiset from_counts(std::vector<std::pair<int, int>> counts) {
        std::map<int, int> m;
        for (auto [v, c] : counts) {
            detail::require(c > 0, "multiset multiplicities must be positive");
            m[v] += c;
        }
        IntMultiset s;
        s.counts_.assign(m.begin(), m.end());
        return s;
    }

    const std::vector<std::pair<int, int>>& counts() const noexcept { return counts_; }

    std::size_t size() const noexcept {
        std::size_t n = 0;
        for (const auto& vc : counts_) n += static_cast<std::size_t>(vc.second);
        return n;
    }
    bool empty() const noexcept { return counts_.empty(); }

    int multiplicity(int v) const {
        auto it = std::lower_bound(counts_.begin(), counts_.end(), std::make_pair(v, 0));
        return (it != counts_.end() && it->first == v) ? it->second : 0;
    }

    /// Number of elements (with multiplicity) strictly greater than v.
    std::size_t count_greater(int v) const {
        std::size_t n = 0;
        for (const auto& [x, c] : counts_)
            if (x > v) n += static_cast<std::size_t>(c);
        return n;
    }

    std::vector<int> sorted_descending() const {
        std::vector<int> out;
        out.reserve(size());
        for (auto it = counts_.rbegin(); it != counts_.rend(); ++it)
            out.insert(out.end(), static_cast<std::size_t>(it->second), it->first);
        return out;
    }
    std::vector<int> sorted_ascending() const {
        auto v = sorted_descending();
        std::reverse(v.begin(), v.end());
        return v;
    }

    /// Multiset sum (disjoint union).
    friend IntMultiset operator+(const IntMultiset& a, const IntMultiset& b) {
        std::vector<std::pair<int, int>> all(a.counts_);
        all.insert(all.end(), b.counts_.begin(), b.counts_.end());
        return from_counts(std::move(all));
    }

    bool operator==(const IntMultiset&) const = default;

private:
    std::vector<std::pair<int, int>> counts_;
};

inline BetaSet beta_set(const Partition& la, int r) {
    detail::require(r >= la.length(), "beta_set: r = " + std::to_string(r) +
                                          " is smaller than the number of parts " +
                                          std::to_string(la.length()));
    BetaSet b{r, {}};
    b.entries.reserve(static_cast<std::size_t>(r));
    for (int i = 1; i <= r; ++i) b.entries.push_back(la(i) + r - i);
    return b;
}

/// Validates and sorts an arbitrary set of distinct bead positions.
inline BetaSet make_beta_set(std::vector<int> positions) {
    std::sort(positions.begin(), positions.end(), std::greater<>());
    for (std::size_t i = 0; i < positions.size(); ++i) {
        detail::require(positions[i] >= 0, "bead positions must be non-negative");
        detail::require(i == 0 || positions[i - 1] != positions[i],
                        "bead positions must be distinct");
    }
    return BetaSet{static_cast<int>(positions.size()), std::move(positions)};
}

inline Partition partition_from_beta_set(const BetaSet& b) {
    std::vector<int> parts;
    parts.reserve(b.entries.size());
    for (int i = 1; i <= b.r; ++i) {
        const int v = b.entries[static_cast<std::size_t>(i - 1)] - b.r + i;
        detail::require(v >= 0, "beta-set entries must be distinct and non-negative");
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

/// A bead count large enough for every r-dependent statistic of the given
/// partitions: max(λ'_1, |λ|) + e over all of them.
inline int default_r(int e, std::initializer_list<const Partition*> parts) {
    int r = 0;
    for (const Partition* p : parts) r = std::max({r, p->length(), p->size()});
    return r + e;
}
inline int default_r(const Partition& la, int e) { return default_r(e, {&la}); }

namespace detail {

/// Per-runner bead levels (ascending) for a beta-set.
inline std::vector<std::vector<int>> runner_levels(const BetaSet& b, int e) {
    std::vector<std::vector<int>> levels(static_cast<std::size_t>(e));
    for (auto it = b.entries.rbegin(); it != b.entries.rend(); ++it)
        levels[static_cast<std::size_t>(*it % e)].push_back(*it / e);
    return levels;
}

}  // namespace detail

struct CoreAndWeight {
    Partition core;
    int weight = 0;
};

/// Slides every bead to the top of its runner; the weight is the total
/// number of single-step slides.
inline CoreAndWeight core_and_weight(const Partition& la, int e) {
    detail::check_modulus(e);
    const BetaSet b = beta_set(la, la.length());
    const auto levels = detail::runner_levels(b, e);
    std::vector<int> core_pos;
    int weight = 0;
    for (int i = 0; i < e; ++i) {
        const auto& lv = levels[static_cast<std::size_t>(i)];
        for (std::size_t t = 0; t < lv.size(); ++t) {
            weight += lv[t] - static_cast<int>(t);
            core_pos.push_back(i + static_cast<int>(t) * e);
        }
    }
    return {partition_from_beta_set(make_beta_set(std::move(core_pos))), weight};
}

inline Partition e_core(const Partition& la, int e) { return core_and_weight(la, e).core; }
inline int e_weight(const Partition& la, int e) { return core_and_weight(la, e).weight; }

inline RunnerParams runner_params(const Partition& la, int e, int k, int r) {
    detail::check_residue(e, k);
    const BetaSet b = beta_set(la, r);
    RunnerParams p{e, k, detail::mod(r + k, e), 0};
    for (int x : b.entries)
        if (x % e == p.d) ++p.c;
    return p;
}

inline bool is_k_empty(const Partition& la, int e, int k) {
    detail::check_residue(e, k);
    const int r = la.length();
    const BetaSet b = beta_set(la, r);
    const int d = detail::mod(r + k, e);
    const auto levels = detail::runner_levels(b, e);
    const auto& lv = levels[static_cast<std::size_t>(d)];
    for (std::size_t t = 0; t < lv.size(); ++t)
        if (lv[t] != static_cast<int>(t)) return false;
    return true;
}

/// Order-preserving renumbering of positions off runner d after deleting it.
inline int phi_d(int z, int e, int d) {
    detail::check_modulus(e);
    detail::require(z >= 0, "phi_d: position must be non-negative");
    detail::require(detail::mod(z, e) != detail::mod(d, e),
                    "phi_d: position " + std::to_string(z) + " lies on runner " +
                        std::to_string(d));
    return z - static_cast<int>(detail::floor_div(z + e - d, e));
}

/// λ^{-k}: delete runner d = (r + k) mod e from a k-empty display.
inline Partition remove_runner(const Partition& la, int e, int k) {
    detail::require(e >= 3, "remove_runner requires e >= 3");
    detail::check_residue(e, k);
    detail::require(is_k_empty(la, e, k), "remove_runner: (" + la.to_string() + ") is not " +
                                              std::to_string(k) + "-empty for e = " +
                                              std::to_string(e));
    const int r = la.length();
    const BetaSet b = beta_set(la, r);
    const int d = detail::mod(r + k, e);
    std::vector<int> kept;
    for (int x : b.entries)
        if (x % e != d) kept.push_back(phi_d(x, e, d));
    return partition_from_beta_set(make_beta_set(std::move(kept)));
}

/// Inverse of runner removal. Displays π with s beads on e - 1 runners,
/// inserts a new runner at index d of an e-runner abacus holding `beads`
/// top-aligned beads, and reads off the resulting partition.
inline Partition insert_runner(const Partition& pi, int e, int d, int beads, int s) {
    detail::require(e >= 2, "insert_runner requires e >= 2");
    detail::require(d >= 0 && d < e, "insert_runner: runner index out of range");
    detail::require(beads >= 0, "insert_runner: bead count must be non-negative");
    const BetaSet b = beta_set(pi, s);
    std::vector<int> pos;
    for (int x : b.entries) {
        // the unique z off runner d with phi_d(z) = x
        pos.push_back(x + static_cast<int>(detail::floor_div(x + e - 1 - d, e - 1)));
    }
    for (int t = 0; t < beads; ++t) pos.push_back(d + t * e);
    return partition_from_beta_set(make_beta_set(std::move(pos)));
}

/// X^e(B): multiplicity of z is |B ∩ {z, z+e, z+2e, ...}|.
inline IntMultiset extension(const std::vector<int>& positions, int e) {
    detail::check_modulus(e);
    std::vector<int> vals;
    for (int b : positions)
        for (int z = b; z >= 0; z -= e) vals.push_back(z);
    return IntMultiset(vals);
}

inline IntMultiset extended_beta_set(const Partition& la, int e, int r) {
    return extension(beta_set(la, r).entries, e);
}

/// Positions vacated by each single slide while forming the e-core.
inline IntMultiset weight_multiset(const Partition& la, int e, int r) {
    detail::check_modulus(e);
    const auto levels = detail::runner_levels(beta_set(la, r), e);
    std::vector<int> vals;
    for (int i = 0; i < e; ++i) {
        const auto& lv = levels[static_cast<std::size_t>(i)];
        for (std::size_t t = 0; t < lv.size(); ++t)
            for (int j = lv[t]; j > static_cast<int>(t); --j) vals.push_back(i + j * e);
    }
    return IntMultiset(vals);
}

/// I ≽ J: equal sizes and the descending sorts compare pointwise.
inline bool bruhat_geq(const IntMultiset& I, const IntMultiset& J) {
    if (I.size() != J.size()) return false;
    const auto a = I.sorted_descending();
    const auto b = J.sorted_descending();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < b[i]) return false;
    return true;
}

/// μ ⊵ λ in the e-refined dominance order.
inline bool dominates(const Partition& mu, const Partition& la, int e) {
    detail::check_modulus(e);
    if (mu == la) return true;
    if (mu.size() != la.size()) return false;
    const auto cm = core_and_weight(mu, e);
    const auto cl = core_and_weight(la, e);
    if (cm.core != cl.core || cm.weight != cl.weight) return false;
    const int r = default_r(e, {&mu, &la});
    return bruhat_geq(extended_beta_set(mu, e, r), extended_beta_set(la, e, r));
}

namespace detail {
inline void require_k_empty(const Partition& la, int e, int k, const char* what) {
    require(is_k_empty(la, e, k), std::string(what) + ": (" + la.to_string() + ") is not " +
                                      std::to_string(k) + "-empty for e = " +
                                      std::to_string(e));
}
}  // namespace detail

/// U_k(λ): elements of the extended beta-set exceeding d + c e.
inline int ux(const Partition& la, int e, int k, int r) {
    detail::check_residue(e, k);
    detail::require_k_empty(la, e, k, "ux");
    const RunnerParams p = runner_params(la, e, k, r);
    return static_cast<int>(extended_beta_set(la, e, r).count_greater(p.d + p.c * e));
}
inline int ux(const Partition& la, int e, int k) { return ux(la, e, k, default_r(la, e)); }

/// U_k(λ) as the sum over beads of floor((β - d - (c-1)e)/e), clipped at 0.
inline int ux_by_beads(const Partition& la, int e, int k, int r) {
    detail::check_residue(e, k);
    detail::require_k_empty(la, e, k, "ux");
    const RunnerParams p = runner_params(la, e, k, r);
    const int last = p.d + (p.c - 1) * e;
    int total = 0;
    for (int b : beta_set(la, r).entries)
        if (b >= last) total += static_cast<int>(detail::floor_div(b - last, e));
    return total;
}

/// n_{r,k}(λ): pairs a < b of beads with a on runner d and b off it.
inline int n_rk(const Partition& la, int e, int k, int r) {
    detail::check_residue(e, k);
    const BetaSet b = beta_set(la, r);
    const int d = detail::mod(r + k, e);
    int count = 0;
    int off_runner_above = 0;
    // entries are descending: walk them accumulating beads off runner d
    for (int x : b.entries) {
        if (x % e == d)
            count += off_runner_above;
        else
            ++off_runner_above;
    }
    return count;
}

}  // namespace fockcb
