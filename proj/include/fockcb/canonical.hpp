#pragma once

#include <algorithm>
#include <cstddef>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fockcb/abacus.hpp"
#include "fockcb/blocks.hpp"
#include "fockcb/error.hpp"
#include "fockcb/laurent.hpp"
#include "fockcb/parallel.hpp"
#include "fockcb/partition.hpp"
#include "fockcb/wedge.hpp"

namespace fockcb {

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

/// A set of partitions from one block, ordered by a linear extension of
/// descending dominance, with the bar-involution coefficients among them.
///
/// `bar[i][j]` is a_{λμ}(q) for λ = members[i], μ = members[j]; it vanishes
/// unless j <= i. `dom[i][j]` records members[i] ⊵ members[j].
struct BlockTable {
    BlockId id;
    int r = 0;
    std::vector<Partition> members;
    PolyMatrix bar;
    std::vector<std::vector<char>> dom;

    std::size_t size() const noexcept { return members.size(); }

    /// Position of λ in `members`, or size() if absent.
    std::size_t index_of(const Partition& la) const {
        auto it = std::find(members.begin(), members.end(), la);
        return static_cast<std::size_t>(it - members.begin());
    }
};

namespace detail {

/// Orders partitions of one block so that μ ⊳ λ puts μ first: descending
/// lexicographic order of the descending-sorted extended beta-sets.
inline void sort_by_dominance(std::vector<Partition>& parts, int e, int r,
                              std::vector<std::vector<int>>* keys_out = nullptr) {
    std::vector<std::pair<std::vector<int>, Partition>> keyed;
    keyed.reserve(parts.size());
    for (auto& p : parts) keyed.emplace_back(extended_beta_set(p, e, r).sorted_descending(), std::move(p));
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    parts.clear();
    if (keys_out) keys_out->clear();
    for (auto& [k, p] : keyed) {
        parts.push_back(std::move(p));
        if (keys_out) keys_out->push_back(std::move(k));
    }
}

inline bool pointwise_geq(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < b[i]) return false;
    return true;
}

}  // namespace detail

/// Bar coefficients among `members`, which must lie in a single block.
/// Columns are computed in parallel, one straightening engine per worker.
inline BlockTable make_block_table(const BlockId& id, std::vector<Partition> members,
                                   unsigned threads = 1) {
    detail::validate_block(id);
    BlockTable t;
    t.id = id;
    const int n = id.size();
    t.r = std::max(n, 1);
    std::vector<std::vector<int>> keys;
    detail::sort_by_dominance(members, id.e, t.r, &keys);
    t.members = std::move(members);
    const std::size_t N = t.members.size();
    t.dom.assign(N, std::vector<char>(N, 0));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i; j < N; ++j) t.dom[i][j] = detail::pointwise_geq(keys[i], keys[j]);

    std::unordered_map<Partition, std::size_t> index;
    for (std::size_t i = 0; i < N; ++i) index.emplace(t.members[i], i);
    t.bar.assign(N, std::vector<LaurentPoly>(N));
    parallel_for(N, threads, [&](std::size_t j) {
        const FockVector col = bar_standard(t.members[j], id.e, t.r);
        for (const auto& [la, c] : col) {
            auto it = index.find(la);
            if (it == index.end()) {
                if (e_core(la, id.e) != id.core)
                    throw engine_error("bar image of (" + t.members[j].to_string() +
                                       ") leaves its block at (" + la.to_string() + ")");
                continue;  // outside the requested subset
            }
            const std::size_t i = it->second;
            if (!t.dom[j][i])
                throw engine_error("bar coefficient a at (" + la.to_string() + "), (" +
                                   t.members[j].to_string() + ") violates dominance");
            t.bar[i][j] = c;
        }
        if (!(t.bar[j][j] == LaurentPoly(1)))
            throw engine_error("diagonal bar coefficient of (" + t.members[j].to_string() +
                               ") is not 1");
    });
    return t;
}

/// The whole block with the given core and weight.
inline BlockTable block_bar_matrix(const Partition& core, int w, int e, unsigned threads = 1) {
    BlockId id{e, core, w};
    return make_block_table(id, enumerate_block(id), threads);
}

/// Column j of the canonical basis over the table: d[i] = d_{members[i], members[j]}.
/// Rows outside {λ : members[j] ⊵ λ} stay zero.
inline std::vector<LaurentPoly> canonical_column(const BlockTable& t, std::size_t j) {
    const std::size_t N = t.size();
    std::vector<LaurentPoly> d(N);
    std::vector<LaurentPoly> dbar(N);
    d[j] = 1;
    dbar[j] = 1;
    for (std::size_t i = j + 1; i < N; ++i) {
        if (!t.dom[j][i]) continue;
        LaurentPoly g;
        for (std::size_t x = j; x < i; ++x) {
            if (dbar[x].is_zero() || t.bar[i][x].is_zero()) continue;
            g += dbar[x] * t.bar[i][x];
        }
        if (!(g.bar() == -g))
            throw engine_error("canonical basis recursion: non-antisymmetric difference " +
                               g.to_string() + " at (" + t.members[i].to_string() + "), (" +
                               t.members[j].to_string() + ")");
        d[i] = g.positive_part();
        dbar[i] = d[i].bar();
    }
    return d;
}

/// Full matrix D with D[i][j] = d_{members[i], members[j]}.
inline PolyMatrix decomposition_matrix(const BlockTable& t, unsigned threads = 1) {
    const std::size_t N = t.size();
    PolyMatrix D(N, std::vector<LaurentPoly>(N));
    parallel_for(N, threads, [&](std::size_t j) {
        auto col = canonical_column(t, j);
        for (std::size_t i = 0; i < N; ++i) D[i][j] = std::move(col[i]);
    });
    return D;
}

inline PolyMatrix decomposition_matrix(const Partition& core, int w, int e, unsigned threads = 1) {
    return decomposition_matrix(block_bar_matrix(core, w, e, threads), threads);
}

struct CanonicalVector {
    Partition mu;
    std::map<Partition, LaurentPoly> coeffs;  ///< nonzero d_{λμ}(q) only
};

/// G(μ), computed on the sub-block {ξ : μ ⊵ ξ}.
inline CanonicalVector canonical_vector(const Partition& mu, int e) {
    const BlockId id = block_of(mu, e);
    std::vector<Partition> below;
    for (auto& p : enumerate_block(id))
        if (dominates(mu, p, e)) below.push_back(std::move(p));
    const BlockTable t = make_block_table(id, std::move(below));
    const std::size_t j = t.index_of(mu);
    const auto col = canonical_column(t, j);
    CanonicalVector v{mu, {}};
    for (std::size_t i = 0; i < t.size(); ++i)
        if (!col[i].is_zero()) v.coeffs.emplace(t.members[i], col[i]);
    return v;
}

/// d^e_{λμ}(q), computed on the interval {ξ : μ ⊵ ξ ⊵ λ}.
inline LaurentPoly q_decomp(const Partition& la, const Partition& mu, int e) {
    detail::check_modulus(e);
    if (!dominates(mu, la, e)) return {};
    const BlockId id = block_of(mu, e);
    std::vector<Partition> between;
    for (auto& p : enumerate_block(id))
        if (dominates(mu, p, e) && dominates(p, la, e)) between.push_back(std::move(p));
    const BlockTable t = make_block_table(id, std::move(between));
    return canonical_column(t, t.index_of(mu))[t.index_of(la)];
}

/// A block table together with its decomposition matrix.
struct SolvedBlock {
    BlockTable table;
    PolyMatrix d;

    const LaurentPoly& entry(const Partition& la, const Partition& mu) const {
        static const LaurentPoly zero;
        const std::size_t i = table.index_of(la);
        const std::size_t j = table.index_of(mu);
        if (i == table.size() || j == table.size()) return zero;
        return d[i][j];
    }
};

inline SolvedBlock solve_block(const BlockId& id, unsigned threads = 1) {
    SolvedBlock s{block_bar_matrix(id.core, id.weight, id.e, threads), {}};
    s.d = decomposition_matrix(s.table, threads);
    return s;
}

/// Thread-safe memo of solved blocks. Each block is computed once; concurrent
/// requests for the same block wait for the first.
class BlockCache {
public:
    explicit BlockCache(unsigned threads_per_block = 1) : threads_(threads_per_block) {}

    std::shared_ptr<const SolvedBlock> get(const BlockId& id) {
        std::shared_future<std::shared_ptr<const SolvedBlock>> fut;
        std::promise<std::shared_ptr<const SolvedBlock>> mine;
        bool owner = false;
        {
            std::lock_guard lock(mutex_);
            auto it = blocks_.find(id);
            if (it == blocks_.end()) {
                fut = mine.get_future().share();
                blocks_.emplace(id, fut);
                owner = true;
            } else {
                fut = it->second;
            }
        }
        if (owner) {
            try {
                mine.set_value(std::make_shared<const SolvedBlock>(solve_block(id, threads_)));
            } catch (...) {
                mine.set_exception(std::current_exception());
            }
        }
        return fut.get();
    }

    LaurentPoly q_decomp(const Partition& la, const Partition& mu, int e) {
        const BlockId id = block_of(mu, e);
        if (block_of(la, e) != id) return {};
        return get(id)->entry(la, mu);
    }

    std::size_t size() const {
        std::lock_guard lock(mutex_);
        return blocks_.size();
    }

private:
    unsigned threads_;
    mutable std::mutex mutex_;
    std::map<BlockId, std::shared_future<std::shared_ptr<const SolvedBlock>>> blocks_;
};

}  // namespace fockcb
