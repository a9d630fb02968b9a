#pragma once

// The Mullineux map on e-regular partitions. The map itself is computed
// through good nodes of the crystal; the rim-strip description is used to
// check every result.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fockcb/abacus.hpp"
#include "fockcb/blocks.hpp"
#include "fockcb/canonical.hpp"
#include "fockcb/error.hpp"
#include "fockcb/partition.hpp"

namespace fockcb {

/// Positions (b_i, c_i) moved by one rim strip, at bead count r.
/// `pairs` is ordered b_1 > c_1 > b_2 > ... > c_t.
struct RimStrip {
    int r = 0;
    std::vector<std::pair<int, int>> pairs;
    int rim_length = 0;
    Partition result;
};

namespace detail {

inline std::vector<char> occupancy(const BetaSet& b, int limit) {
    std::vector<char> occ(static_cast<std::size_t>(std::max(limit, 0)), 0);
    for (int x : b.entries)
        if (x < limit) occ[static_cast<std::size_t>(x)] = 1;
    return occ;
}

inline RimStrip finish_strip(const BetaSet& b, int r, std::vector<std::pair<int, int>> pairs) {
    std::vector<int> pos(b.entries);
    int rim = 0;
    for (auto [from, to] : pairs) {
        *std::find(pos.begin(), pos.end(), from) = to;
        rim += from - to;
    }
    return {r, std::move(pairs), rim, partition_from_beta_set(make_beta_set(std::move(pos)))};
}

inline int default_strip_r(const Partition& la, int e) { return la.length() + la.size() + e; }

}  // namespace detail

/// The e-rim of μ: starting from the last bead, climb its runner to the
/// first gap, then jump to the last bead above that gap, until the gaps run
/// down to the first empty position.
inline RimStrip strip_rim(const Partition& mu, int e, int r) {
    detail::check_modulus(e);
    detail::require(!mu.empty(), "strip_rim: the partition must be non-empty");
    detail::require(is_e_regular(mu, e), "strip_rim: (" + mu.to_string() + ") is not " +
                                             std::to_string(e) + "-regular");
    detail::require(r >= mu.length(), "strip_rim: r is smaller than the number of parts");
    const BetaSet b = beta_set(mu, r);
    const int beta = b.entries.front();
    const int gamma = r - mu.length();
    const auto occ = detail::occupancy(b, beta + 1);
    auto occupied = [&](int p) { return p >= 0 && p <= beta && occ[static_cast<std::size_t>(p)]; };

    std::vector<std::pair<int, int>> pairs;
    int bi = beta;
    for (;;) {
        int c = bi - e;
        while (c >= 0 && occupied(c)) c -= e;
        if (c < 0) {
            // every bead above b_i on its runner is present
            detail::require(gamma < bi, "strip_rim: internal inconsistency");
            pairs.emplace_back(bi, gamma);
            break;
        }
        pairs.emplace_back(bi, c);
        int next = c - 1;
        while (next >= gamma && !occupied(next)) --next;
        if (next < gamma) break;  // positions c-1, ..., gamma are all empty
        bi = next;
    }
    return detail::finish_strip(b, r, std::move(pairs));
}

inline RimStrip strip_rim(const Partition& mu, int e) {
    return strip_rim(mu, e, detail::default_strip_r(mu, e));
}

/// Conjugate e-rim of an e-restricted ν: starting from the first gap, descend
/// its runner to the first bead, then jump to the first gap below that bead,
/// until the beads run up to the last bead. Pairs are reported f_1 > g_1 > ...
inline RimStrip strip_rim_conj(const Partition& nu, int e, int r) {
    detail::check_modulus(e);
    detail::require(!nu.empty(), "strip_rim_conj: the partition must be non-empty");
    detail::require(is_e_restricted(nu, e), "strip_rim_conj: (" + nu.to_string() +
                                                ") is not " + std::to_string(e) + "-restricted");
    detail::require(r >= nu.length(), "strip_rim_conj: r is smaller than the number of parts");
    const BetaSet b = beta_set(nu, r);
    const int delta = b.entries.front();
    const int eps = r - nu.length();
    const auto occ = detail::occupancy(b, delta + 1);
    auto occupied = [&](int p) { return p >= 0 && p <= delta && occ[static_cast<std::size_t>(p)]; };

    std::vector<std::pair<int, int>> pairs;
    int gi = eps;
    for (;;) {
        int f = gi + e;
        while (f <= delta && !occupied(f)) f += e;
        if (f > delta) {
            // every position below g_i on its runner is empty
            detail::require(delta > gi, "strip_rim_conj: internal inconsistency");
            pairs.emplace_back(delta, gi);
            break;
        }
        pairs.emplace_back(f, gi);
        int next = f + 1;
        while (next <= delta && occupied(next)) ++next;
        if (next > delta) break;  // positions f+1, ..., delta are all occupied
        gi = next;
    }
    std::reverse(pairs.begin(), pairs.end());
    return detail::finish_strip(b, r, std::move(pairs));
}

inline RimStrip strip_rim_conj(const Partition& nu, int e) {
    return strip_rim_conj(nu, e, detail::default_strip_r(nu, e));
}

/// Checks the defining conditions of an e-rim against the display of μ.
/// Returns an empty string when they hold, else the first violated one.
inline std::string rim_strip_violation(const Partition& mu, int e, const RimStrip& s) {
    const BetaSet b = beta_set(mu, s.r);
    const int gamma = s.r - mu.length();
    auto occupied = [&](int p) { return b.contains(p); };
    if (s.pairs.empty()) return "no pairs";
    if (s.pairs.front().first != b.entries.front()) return "b_1 is not the last bead";
    for (std::size_t i = 0; i < s.pairs.size(); ++i) {
        const auto [bi, ci] = s.pairs[i];
        if (!(bi > ci) || ci < 0) return "pairs are not strictly decreasing";
        if (i + 1 < s.pairs.size() && !(ci > s.pairs[i + 1].first)) return "pairs are not strictly decreasing";
        if (!occupied(bi) || occupied(ci)) return "b_i must be occupied and c_i empty";
        const bool last = i + 1 == s.pairs.size();
        const bool congruent = (bi - ci) % e == 0;
        bool column_full = true;
        if (congruent) {
            for (int p = bi - e; p > ci; p -= e) column_full = column_full && occupied(p);
        }
        if (!last) {
            if (!congruent || !column_full) return "condition on b_i, c_i fails for i < t";
            for (int p = ci - 1; p > s.pairs[i + 1].first; --p)
                if (occupied(p)) return "positions between c_i and b_{i+1} must be empty";
        } else {
            bool case_a = congruent && column_full;
            if (case_a)
                for (int p = ci - 1; p >= gamma; --p) case_a = case_a && !occupied(p);
            bool case_b = ci == gamma;
            for (int p = bi - e; p >= 0 && case_b; p -= e) case_b = occupied(p);
            if (case_a == case_b) return case_a ? "both terminal cases apply" : "no terminal case applies";
        }
    }
    return {};
}

/// Residue signature of one colour: the i-nodes top to bottom with every
/// addable node that lies above a removable node cancelled against it.
struct Signature {
    std::vector<Node> removable;  ///< uncancelled, top to bottom
    std::vector<Node> addable;    ///< uncancelled, top to bottom
};

inline Signature signature(const Partition& la, int e, int i) {
    auto add = nodes_by_residue(la, e, i, NodeKind::addable);
    auto rem = nodes_by_residue(la, e, i, NodeKind::removable);
    std::vector<std::pair<Node, bool>> seq;  // (node, is_removable)
    for (const Node& n : add) seq.emplace_back(n, false);
    for (const Node& n : rem) seq.emplace_back(n, true);
    std::sort(seq.begin(), seq.end(), [](const auto& a, const auto& b) { return a.first.row < b.first.row; });
    std::vector<std::pair<Node, bool>> stack;
    for (auto& x : seq) {
        if (x.second && !stack.empty() && !stack.back().second)
            stack.pop_back();
        else
            stack.push_back(x);
    }
    Signature s;
    for (auto& [n, is_rem] : stack) (is_rem ? s.removable : s.addable).push_back(n);
    return s;
}

/// The good removable i-node, if any: the lowest uncancelled removable node.
inline std::optional<Node> good_node(const Partition& la, int e, int i) {
    auto s = signature(la, e, i);
    if (s.removable.empty()) return std::nullopt;
    return s.removable.back();
}

/// The cogood addable i-node: the highest uncancelled addable node.
inline Node cogood_node(const Partition& la, int e, int i) {
    auto s = signature(la, e, i);
    if (s.addable.empty()) throw engine_error("no cogood addable node");
    return s.addable.front();
}

/// Residues i_1, ..., i_n with μ = f̃_{i_n} ... f̃_{i_1} ∅.
inline std::vector<int> good_node_path(const Partition& mu, int e) {
    std::vector<int> path;
    Partition cur = mu;
    while (!cur.empty()) {
        bool found = false;
        for (int i = 0; i < e && !found; ++i) {
            if (auto n = good_node(cur, e, i)) {
                cur = remove_nodes(cur, {*n});
                path.push_back(i);
                found = true;
            }
        }
        if (!found)
            throw engine_error("(" + cur.to_string() + ") has no good node; input was not e-regular");
    }
    std::reverse(path.begin(), path.end());
    return path;
}

inline Partition mullineux_conjugate(const Partition& mu, int e);

namespace detail {

inline int mull_first_row(const Partition& mu, int e, int rim) {
    return rim % e == 0 ? rim - mu.length() : rim - mu.length() + 1;
}

/// m(μ) from good nodes, without the characterization check.
inline Partition mullineux_raw(const Partition& mu, int e) {
    Partition out;
    for (int i : good_node_path(mu, e)) {
        const int neg = mod(-i, e);
        out = add_nodes(out, {cogood_node(out, e, neg)});
    }
    return out;
}

}  // namespace detail

/// ρ = m(μ)' in the characterization of μ ↦ m(μ)': ρ is e-restricted,
/// ρ_1 = l, rim'(ρ) = rim(μ), and ρ^▽ = m(μ^△)'.
inline bool check_mull_characterization(const Partition& mu, const Partition& rho, int e) {
    detail::check_modulus(e);
    detail::require(!mu.empty() && is_e_regular(mu, e),
                    "check_mull_characterization: mu must be non-empty and e-regular");
    if (rho.empty() || !is_e_restricted(rho, e)) return false;
    const RimStrip s = strip_rim(mu, e);
    if (rho.first() != detail::mull_first_row(mu, e, s.rim_length)) return false;
    const RimStrip sc = strip_rim_conj(rho, e);
    if (sc.rim_length != s.rim_length) return false;
    return sc.result == mullineux_conjugate(s.result, e);
}

/// m(μ)'. Every result is checked against the rim-strip characterization.
inline Partition mullineux_conjugate(const Partition& mu, int e) {
    detail::check_modulus(e);
    detail::require(is_e_regular(mu, e),
                    "mullineux: (" + mu.to_string() + ") is not " + std::to_string(e) + "-regular");
    if (mu.empty()) return {};
    Partition rho = conjugate(detail::mullineux_raw(mu, e));
    if (!check_mull_characterization(mu, rho, e))
        throw engine_error("mullineux: good-node image of (" + mu.to_string() +
                           ") fails the rim-strip characterization");
    return rho;
}

inline Partition mullineux(const Partition& mu, int e) {
    return conjugate(mullineux_conjugate(mu, e));
}

/// m(μ)' found as the unique λ in μ's block with d_{λμ}(q) = q^w.
inline Partition mullineux_by_degree(const Partition& mu, int e, BlockCache& cache) {
    detail::require(is_e_regular(mu, e), "mullineux_by_degree: (" + mu.to_string() + ") is not " +
                                             std::to_string(e) + "-regular");
    const BlockId id = block_of(mu, e);
    auto solved = cache.get(id);
    const auto& t = solved->table;
    const std::size_t j = t.index_of(mu);
    const LaurentPoly target = LaurentPoly::q(id.weight);
    std::vector<Partition> hits;
    for (std::size_t i = 0; i < t.size(); ++i)
        if (solved->d[i][j] == target) hits.push_back(t.members[i]);
    if (hits.size() != 1)
        throw engine_error("mullineux_by_degree: " + std::to_string(hits.size()) + " entries equal q^" +
                           std::to_string(id.weight) + " in column (" + mu.to_string() + ")");
    return hits.front();
}

inline Partition mullineux_by_degree(const Partition& mu, int e) {
    BlockCache cache;
    return mullineux_by_degree(mu, e, cache);
}

}  // namespace fockcb
