#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fockcb/abacus.hpp"
#include "fockcb/error.hpp"
#include "fockcb/partition.hpp"

namespace fockcb {

/// A block: all partitions with the given e-core and e-weight.
struct BlockId {
    int e = 2;
    Partition core;
    int weight = 0;

    int size() const { return core.size() + e * weight; }
    auto operator<=>(const BlockId&) const = default;
    bool operator==(const BlockId&) const = default;

    std::string to_string() const {
        return "e=" + std::to_string(e) + " core=(" + core.to_string() +
               ") w=" + std::to_string(weight);
    }
};

inline bool is_e_core(const Partition& la, int e) { return e_weight(la, e) == 0; }

inline BlockId block_of(const Partition& la, int e) {
    auto cw = core_and_weight(la, e);
    return {e, std::move(cw.core), cw.weight};
}

namespace detail {

inline void validate_block(const BlockId& id) {
    check_modulus(id.e);
    require(id.weight >= 0, "block weight must be non-negative");
    require(is_e_core(id.core, id.e),
            "(" + id.core.to_string() + ") is not a " + std::to_string(id.e) + "-core");
}

/// Partitions of n with at most max_parts parts, as descending vectors.
inline void partitions_bounded(int n, int max_part, std::vector<int>& cur,
                               std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_bounded(n - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace detail

/// Every partition in the block. Distributes the weight over the runners of
/// the core's abacus; on each runner the bead displacements form a partition
/// of that runner's share.
inline std::vector<Partition> enumerate_block(const BlockId& id) {
    detail::validate_block(id);
    const int e = id.e;
    const int w = id.weight;
    // Enough beads that every runner carries at least w of them.
    const int r = id.core.length() + e * w;
    const BetaSet core_beads = beta_set(id.core, r);
    std::vector<int> counts(static_cast<std::size_t>(e), 0);
    for (int x : core_beads.entries) ++counts[static_cast<std::size_t>(x % e)];

    std::vector<std::vector<std::vector<int>>> per_share(static_cast<std::size_t>(w + 1));
    for (int s = 0; s <= w; ++s) {
        std::vector<int> cur;
        detail::partitions_bounded(s, s, cur, per_share[static_cast<std::size_t>(s)]);
    }

    std::vector<Partition> out;
    std::vector<int> share(static_cast<std::size_t>(e), 0);
    std::vector<const std::vector<int>*> choice(static_cast<std::size_t>(e), nullptr);

    std::function<void(int)> place = [&](int runner) {
        if (runner == e) {
            std::vector<int> pos;
            pos.reserve(static_cast<std::size_t>(r));
            for (int i = 0; i < e; ++i) {
                const int c = counts[static_cast<std::size_t>(i)];
                const auto& disp = *choice[static_cast<std::size_t>(i)];
                // largest displacement goes to the lowest bead
                for (int t = 0; t < c; ++t) {
                    const int from_bottom = c - 1 - t;
                    const int move = from_bottom < static_cast<int>(disp.size())
                                         ? disp[static_cast<std::size_t>(from_bottom)]
                                         : 0;
                    pos.push_back(i + (t + move) * e);
                }
            }
            out.push_back(partition_from_beta_set(make_beta_set(std::move(pos))));
            return;
        }
        for (const auto& disp : per_share[static_cast<std::size_t>(share[static_cast<std::size_t>(runner)])]) {
            choice[static_cast<std::size_t>(runner)] = &disp;
            place(runner + 1);
        }
    };

    std::function<void(int, int)> split = [&](int runner, int left) {
        if (runner == e - 1) {
            share[static_cast<std::size_t>(runner)] = left;
            place(0);
            return;
        }
        for (int s = 0; s <= left; ++s) {
            share[static_cast<std::size_t>(runner)] = s;
            split(runner + 1, left - s);
        }
    };
    split(0, w);
    std::sort(out.begin(), out.end());
    return out;
}

/// All e-cores of size at most max_size, in order of size.
inline std::vector<Partition> e_cores_up_to(int e, int max_size) {
    detail::check_modulus(e);
    std::vector<Partition> out;
    for (int n = 0; n <= max_size; ++n)
        for_each_partition(n, [&](const Partition& p) {
            if (is_e_core(p, e)) out.push_back(p);
        });
    return out;
}

/// Φ: add every addable node of residue k. λ must have no removable k-nodes.
inline Partition scopes_phi(const Partition& la, int e, int k) {
    detail::check_residue(e, k);
    detail::require(nodes_by_residue(la, e, k, NodeKind::removable).empty(),
                    "scopes_phi: (" + la.to_string() + ") has removable nodes of residue " +
                        std::to_string(k));
    return add_nodes(la, nodes_by_residue(la, e, k, NodeKind::addable));
}

struct ScopesMove {
    int k = 0;
    int a = 0;  ///< addable residue-k nodes of the source core
};

struct ScopesPair {
    BlockId source;
    BlockId target;
    ScopesMove move;
    std::vector<std::pair<Partition, Partition>> bijection;  ///< λ ↦ Φ(λ)
};

/// The block reached by adding all a >= w addable k-nodes to the core.
inline ScopesPair scopes_adjacent(const BlockId& b, int k) {
    detail::validate_block(b);
    detail::check_residue(b.e, k);
    const int a = static_cast<int>(nodes_by_residue(b.core, b.e, k, NodeKind::addable).size());
    detail::require(a >= b.weight && a > 0,
                    "scopes_adjacent: core (" + b.core.to_string() + ") has " +
                        std::to_string(a) + " addable " + std::to_string(k) +
                        "-nodes, need at least max(1, w = " + std::to_string(b.weight) + ")");
    ScopesPair out;
    out.source = b;
    out.move = {k, a};
    out.target = {b.e, scopes_phi(b.core, b.e, k), b.weight};
    for (const Partition& la : enumerate_block(b)) out.bijection.emplace_back(la, scopes_phi(la, b.e, k));
    return out;
}

struct ScopesReduction {
    BlockId representative;
    std::vector<std::pair<int, Partition>> trace;  ///< (k, core after the move)
};

/// Greedily undoes Scopes moves: while some residue k (smallest first) has
/// at least max(1, w) removable k-nodes on the core, remove them all. Each
/// step shrinks the core, so this terminates.
inline ScopesReduction scopes_reduce(const BlockId& b) {
    detail::validate_block(b);
    ScopesReduction red{b, {}};
    for (bool moved = true; moved;) {
        moved = false;
        for (int k = 0; k < b.e; ++k) {
            auto rem = nodes_by_residue(red.representative.core, b.e, k, NodeKind::removable);
            if (!rem.empty() && static_cast<int>(rem.size()) >= b.weight) {
                red.representative.core = remove_nodes(red.representative.core, rem);
                red.trace.emplace_back(k, red.representative.core);
                moved = true;
                break;
            }
        }
    }
    return red;
}

}  // namespace fockcb
