#pragma once

// Truncated Fock space: r-wedges modulo the modulo-e commutation relations,
// straightening into ordered wedges, the bar involution on standard basis
// vectors, and the f_k action.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fockcb/abacus.hpp"
#include "fockcb/error.hpp"
#include "fockcb/laurent.hpp"
#include "fockcb/partition.hpp"

namespace fockcb {

/// Letters of a wedge u_{i_1} ∧ ... ∧ u_{i_r}.
using Word = std::vector<int>;

/// Linear combination of ordered wedges; no zero coefficients stored.
using WedgeVector = std::map<Word, LaurentPoly>;

/// Linear combination of standard basis vectors |λ⟩.
using FockVector = std::map<Partition, LaurentPoly>;

namespace detail {

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (int v : w) h = (h ^ static_cast<std::uint32_t>(v)) * 0x100000001b3ULL;
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};

inline bool is_ordered(const Word& w) {
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i - 1] <= w[i]) return false;
    return true;
}

template <class Map>
void add_term(Map& m, const typename Map::key_type& k, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = m.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) m.erase(it);
    }
}

}  // namespace detail

/// One term a u_x ∧ u_y (x > y) of a two-letter straightening.
struct PairTerm {
    int first;
    int second;
    LaurentPoly coeff;
};

/// Rewrites u_l ∧ u_m (l <= m) as ordered two-letter wedges.
inline std::vector<PairTerm> pair_terms(int l, int m, int e) {
    detail::check_modulus(e);
    detail::require(l >= 0 && l <= m, "straighten_pair requires 0 <= l <= m");
    std::vector<PairTerm> out;
    if (l == m) return out;
    if ((m - l) % e == 0) {
        out.push_back({m, l, LaurentPoly(-1)});
        return out;
    }
    const int i = (m - l) % e;
    out.push_back({m, l, LaurentPoly::monomial(-1, -1)});
    const LaurentPoly factor = LaurentPoly::q(-2) - LaurentPoly(1);
    // Series u_{m-i}∧u_{l+i}, -q^{-1} u_{m-e}∧u_{l+e}, q^{-2} u_{m-e-i}∧u_{l+e+i}, ...
    // truncated at the first term that is not strictly ordered.
    for (int n = 0;; ++n) {
        const int j = n / 2;
        const int shift = (n % 2 == 0) ? j * e + i : (j + 1) * e;
        const int x = m - shift;
        const int y = l + shift;
        if (!(x > y)) break;
        const Integer sign = (n % 2 == 0) ? 1 : -1;
        out.push_back({x, y, factor * LaurentPoly::monomial(sign, -n)});
    }
    return out;
}

inline WedgeVector straighten_pair(int l, int m, int e) {
    WedgeVector v;
    for (auto& t : pair_terms(l, m, e)) detail::add_term(v, Word{t.first, t.second}, t.coeff);
    return v;
}

/// Straightening engine for a fixed modulus. Inserts letters one at a time
/// on the left of already-ordered tails, resolving the single inversion at
/// the head with the two-letter relations. Head insertions are memoized per
/// (letter, tail); the memo is cleared between top-level calls once it
/// exceeds `cache_limit` entries.
class Straightener {
public:
    using Terms = std::vector<std::pair<Word, LaurentPoly>>;

    explicit Straightener(int e, std::size_t cache_limit = 2'000'000)
        : e_(e), cache_limit_(cache_limit) {
        detail::check_modulus(e);
    }

    int modulus() const noexcept { return e_; }
    std::size_t cache_size() const noexcept { return insert_cache_.size(); }
    void clear_cache() {
        insert_cache_.clear();
        pair_cache_.clear();
    }

    /// Normal form of an arbitrary word.
    WedgeVector straighten(const Word& w) {
        for (int x : w) detail::require(x >= 0, "wedge letters must be non-negative");
        if (insert_cache_.size() > cache_limit_) clear_cache();
        WedgeVector out;
        if (w.empty()) {
            out.emplace(Word{}, LaurentPoly(1));
            return out;
        }
        std::unordered_map<Word, LaurentPoly, detail::WordHash> state;
        state.emplace(Word{w.back()}, LaurentPoly(1));
        for (std::size_t pos = w.size() - 1; pos-- > 0;) {
            std::unordered_map<Word, LaurentPoly, detail::WordHash> next;
            const int x = w[pos];
            for (const auto& [tail, c] : state)
                for (const auto& [word, c2] : insert(x, tail)) detail::add_term(next, word, c * c2);
            state = std::move(next);
        }
        for (auto& [word, c] : state) out.emplace(word, std::move(c));
        return out;
    }

    /// u_x ∧ (ordered tail) as a combination of ordered wedges.
    const Terms& insert(int x, const Word& tail) {
        Word key;
        key.reserve(tail.size() + 1);
        key.push_back(x);
        key.insert(key.end(), tail.begin(), tail.end());
        if (auto it = insert_cache_.find(key); it != insert_cache_.end()) return it->second;

        Terms result;
        if (tail.empty() || x > tail.front()) {
            result.emplace_back(key, LaurentPoly(1));
        } else if (x < tail.front()) {
            std::unordered_map<Word, LaurentPoly, detail::WordHash> acc;
            const Word rest(tail.begin() + 1, tail.end());
            for (const PairTerm& t : pair(x, tail.front())) {
                // u_a ∧ u_b ∧ rest: settle u_b into rest first, then u_a.
                const Terms& inner = insert(t.second, rest);
                for (const auto& [w1, c1] : inner) {
                    const LaurentPoly c = t.coeff * c1;
                    const Terms& outer = insert(t.first, w1);
                    for (const auto& [w2, c2] : outer) detail::add_term(acc, w2, c * c2);
                }
            }
            result.reserve(acc.size());
            for (auto& [w, c] : acc) result.emplace_back(w, std::move(c));
        }
        // x == tail.front(): repeated letter, the wedge vanishes
        return insert_cache_.emplace(std::move(key), std::move(result)).first->second;
    }

private:
    const std::vector<PairTerm>& pair(int l, int m) {
        const std::uint64_t key = (static_cast<std::uint64_t>(l) << 32) | static_cast<std::uint32_t>(m);
        if (auto it = pair_cache_.find(key); it != pair_cache_.end()) return it->second;
        return pair_cache_.emplace(key, pair_terms(l, m, e_)).first->second;
    }

    int e_;
    std::size_t cache_limit_;
    std::unordered_map<Word, Terms, detail::WordHash> insert_cache_;
    std::unordered_map<std::uint64_t, std::vector<PairTerm>> pair_cache_;
};

namespace detail {

/// Per-thread engines, one per modulus.
inline Straightener& thread_straightener(int e) {
    thread_local std::map<int, std::unique_ptr<Straightener>> engines;
    auto& slot = engines[e];
    if (!slot) slot = std::make_unique<Straightener>(e);
    return *slot;
}

}  // namespace detail

inline WedgeVector straighten(const Word& w, int e) {
    return detail::thread_straightener(e).straighten(w);
}

/// Reference straightener: repeatedly rewrites the leftmost inversion of
/// each unordered word. Exponential in general; used to cross-check the
/// insertion engine on short words.
inline WedgeVector straighten_naive(const Word& w, int e) {
    std::map<Word, LaurentPoly> pending{{w, LaurentPoly(1)}};
    WedgeVector done;
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const Word& word = node.key();
        const LaurentPoly& c = node.mapped();
        std::size_t k = 0;
        while (k + 1 < word.size() && word[k] > word[k + 1]) ++k;
        if (k + 1 >= word.size()) {
            detail::add_term(done, word, c);
            continue;
        }
        for (const PairTerm& t : pair_terms(word[k], word[k + 1], e)) {
            Word next(word);
            next[k] = t.first;
            next[k + 1] = t.second;
            detail::add_term(pending, next, c * t.coeff);
        }
    }
    return done;
}

/// Coefficients a^e_{λμ}(q) of the bar involution applied to |μ⟩, computed
/// in the truncated Fock space with r beads (r >= |μ| for stability).
inline FockVector bar_standard(const Partition& mu, int e, int r, Straightener& engine) {
    detail::check_modulus(e);
    detail::require(engine.modulus() == e, "bar_standard: engine modulus mismatch");
    detail::require(r >= mu.size() && r >= mu.length(),
                    "bar_standard: r must be at least |mu| = " + std::to_string(mu.size()));
    const BetaSet b = beta_set(mu, r);
    const Word reversed(b.entries.rbegin(), b.entries.rend());
    const WedgeVector v = engine.straighten(reversed);
    auto diag = v.find(b.entries);
    if (diag == v.end() || diag->second.is_zero())
        throw engine_error("bar_standard: b_{mu mu} vanished for (" + mu.to_string() + ")");
    const LaurentPoly& norm = diag->second;
    FockVector out;
    if (norm.is_signed_monomial()) {
        const Integer sign = norm.coeff(norm.min_degree());
        const int shift = -norm.min_degree();
        for (const auto& [word, c] : v)
            out.emplace(partition_from_beta_set(BetaSet{r, word}), c.scaled(sign, shift));
    } else {
        // Not expected; the general division path still gives exact results.
        for (const auto& [word, c] : v)
            out.emplace(partition_from_beta_set(BetaSet{r, word}), exact_div(c, norm));
    }
    return out;
}

inline FockVector bar_standard(const Partition& mu, int e, int r) {
    return bar_standard(mu, e, r, detail::thread_straightener(e));
}

inline FockVector bar_standard(const Partition& mu, int e) {
    return bar_standard(mu, e, mu.size() + e);
}

/// f_k |λ⟩ = Σ q^{N(λ,μ)} |μ⟩ extended linearly.
inline FockVector apply_f(const FockVector& v, int e, int k) {
    detail::check_residue(e, k);
    FockVector out;
    for (const auto& [la, c] : v) {
        const auto addable = nodes_by_residue(la, e, k, NodeKind::addable);
        const auto removable = nodes_by_residue(la, e, k, NodeKind::removable);
        for (const Node& n : addable) {
            int exponent = 0;
            for (const Node& a : addable) exponent += (a.row < n.row);
            for (const Node& r : removable) exponent -= (r.row < n.row);
            detail::add_term(out, add_nodes(la, {n}), c.shifted(exponent));
        }
    }
    return out;
}

/// f_k^{(a)} = f_k^a / [a]!
inline FockVector apply_f_divided(const FockVector& v, int e, int k, int a) {
    detail::require(a >= 1, "apply_f_divided requires a >= 1");
    FockVector w = v;
    for (int i = 0; i < a; ++i) w = apply_f(w, e, k);
    const LaurentPoly fact = quantum_factorial(a);
    for (auto& [la, c] : w) c = exact_div(c, fact);
    return w;
}

}  // namespace fockcb
