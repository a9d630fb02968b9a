#pragma once

// Exhaustive sweeps over declared ranges. Each suite returns a SuiteReport;
// failures are listed in order of increasing block size so the first one is
// a smallest counterexample.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fockcb/abacus.hpp"
#include "fockcb/blocks.hpp"
#include "fockcb/canonical.hpp"
#include "fockcb/error.hpp"
#include "fockcb/laurent.hpp"
#include "fockcb/mullineux.hpp"
#include "fockcb/parallel.hpp"
#include "fockcb/partition.hpp"
#include "fockcb/wedge.hpp"

namespace fockcb {

struct SuiteReport {
    std::string name;
    std::string statement;
    std::vector<std::pair<std::string, std::string>> ranges;
    std::uint64_t cases = 0;
    std::uint64_t failure_count = 0;
    std::vector<std::string> failures;  ///< at most `max_listed_failures`, smallest first
    std::vector<std::string> notes;
    double seconds = 0;

    static constexpr std::size_t max_listed_failures = 25;

    bool passed() const noexcept { return failure_count == 0; }

    void fail(std::string what) {
        ++failure_count;
        if (failures.size() < max_listed_failures) failures.push_back(std::move(what));
    }

    void merge(SuiteReport&& part) {
        cases += part.cases;
        for (auto& f : part.failures) {
            if (failures.size() < max_listed_failures) failures.push_back(std::move(f));
        }
        failure_count += part.failure_count;
        for (auto& n : part.notes) notes.push_back(std::move(n));
    }
};

/// Blocks with modulus in `moduli`, core size <= max_core_size and weight <= max_weight.
struct BlockRange {
    std::vector<int> moduli;
    int max_weight = 0;
    int max_core_size = 0;
    int min_weight = 0;

    std::vector<std::pair<std::string, std::string>> describe() const {
        std::string es;
        for (std::size_t i = 0; i < moduli.size(); ++i) es += (i ? "," : "") + std::to_string(moduli[i]);
        return {{"e", es},
                {"weight", std::to_string(min_weight) + ".." + std::to_string(max_weight)},
                {"max_core_size", std::to_string(max_core_size)}};
    }
};

/// Ordered by block size, then core, modulus and weight.
inline std::vector<BlockId> blocks_in_range(const BlockRange& range) {
    std::vector<BlockId> out;
    for (int e : range.moduli)
        for (const Partition& core : e_cores_up_to(e, range.max_core_size))
            for (int w = range.min_weight; w <= range.max_weight; ++w) out.push_back({e, core, w});
    std::sort(out.begin(), out.end(), [](const BlockId& a, const BlockId& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        if (a.core != b.core) return a.core < b.core;
        if (a.e != b.e) return a.e < b.e;
        return a.weight < b.weight;
    });
    return out;
}

namespace detail {

inline std::string pstr(const Partition& p) { return "(" + p.to_string() + ")"; }

/// Runs per_block on every block in parallel and merges the partial reports
/// in block order. Exceptions inside a block become failures of that block.
inline SuiteReport sweep_blocks(SuiteReport report, const std::vector<BlockId>& blocks, unsigned threads,
                                const std::function<void(const BlockId&, SuiteReport&)>& per_block) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<SuiteReport> parts(blocks.size());
    parallel_for(blocks.size(), threads, [&](std::size_t i) {
        try {
            per_block(blocks[i], parts[i]);
        } catch (const std::exception& ex) {
            parts[i].fail(blocks[i].to_string() + ": exception: " + ex.what());
        }
    });
    for (auto& p : parts) report.merge(std::move(p));
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

inline bool divisible_by_q(const LaurentPoly& p) { return p.is_zero() || p.min_degree() >= 1; }

inline const LaurentPoly& bar_entry(const SolvedBlock& s, const Partition& la, const Partition& mu) {
    static const LaurentPoly zero;
    const std::size_t i = s.table.index_of(la);
    const std::size_t j = s.table.index_of(mu);
    if (i == s.table.size() || j == s.table.size()) return zero;
    return s.table.bar[i][j];
}

/// Last occupied position on runner d lies before the first empty position.
inline bool beads_before_gaps(const Partition& la, int e, int k, int r) {
    const RunnerParams p = runner_params(la, e, k, r);
    return p.c == 0 || p.d + (p.c - 1) * e < r - la.length();
}

/// First empty position on runner d lies after the last bead.
inline bool gap_after_beads(const Partition& la, int e, int k, int r) {
    const RunnerParams p = runner_params(la, e, k, r);
    return p.d + p.c * e > (la.empty() ? r - 1 : la.first() + r - 1);
}

}  // namespace detail

/// d^e_{λμ}(q) = d^{e-1}_{λ^{-k}μ^{-k}}(q) for every k and every pair of
/// k-empty members of a block with U_k(λ) = U_k(μ). The same pairs are also
/// checked for the bar coefficients a. The two moduli use separate caches.
inline SuiteReport verify_runner_removal(const BlockRange& range, unsigned threads = default_threads()) {
    for (int e : range.moduli) detail::require(e >= 3, "runner removal needs e >= 3");
    SuiteReport rep;
    rep.name = "runner-removal";
    rep.statement = "d^e(la,mu) = d^(e-1)(la^-k,mu^-k) and a^e(la,mu) = a^(e-1)(la^-k,mu^-k) "
                    "for k-empty la, mu in one block with U_k(la) = U_k(mu)";
    rep.ranges = range.describe();
    auto lhs = std::make_shared<BlockCache>();
    auto rhs = std::make_shared<BlockCache>();
    std::atomic<std::uint64_t> hyp1{0}, hyp2{0};
    rep = detail::sweep_blocks(std::move(rep), blocks_in_range(range), threads,
                               [&](const BlockId& b, SuiteReport& out) {
        const int e = b.e;
        auto solved = lhs->get(b);
        const auto& t = solved->table;
        const int r = default_r(e, {&t.members.back(), &t.members.front()}) + b.size();
        for (int k = 0; k < e; ++k) {
            std::vector<std::size_t> idx;
            std::vector<int> u;
            std::vector<Partition> removed;
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (!is_k_empty(t.members[i], e, k)) continue;
                idx.push_back(i);
                u.push_back(ux(t.members[i], e, k, r));
                removed.push_back(remove_runner(t.members[i], e, k));
            }
            for (std::size_t x = 0; x < idx.size(); ++x) {
                for (std::size_t y = 0; y < idx.size(); ++y) {
                    const Partition& la = t.members[idx[x]];
                    const Partition& mu = t.members[idx[y]];
                    const bool h1 = detail::beads_before_gaps(la, e, k, r) && detail::beads_before_gaps(mu, e, k, r);
                    const bool h2 = detail::gap_after_beads(la, e, k, r) && detail::gap_after_beads(mu, e, k, r);
                    hyp1 += h1;
                    hyp2 += h2;
                    if ((h1 || h2) && u[x] != u[y])
                        out.fail(b.to_string() + " k=" + std::to_string(k) + ": classical runner-removal "
                                 "hypothesis holds but U_k differs for " + detail::pstr(la) + ", " + detail::pstr(mu));
                    if (u[x] != u[y]) continue;
                    ++out.cases;
                    const LaurentPoly& d_e = solved->d[idx[x]][idx[y]];
                    const BlockId small = block_of(removed[y], e - 1);
                    auto other = rhs->get(small);
                    const LaurentPoly d_small = other->entry(removed[x], removed[y]);
                    if (!(d_e == d_small))
                        out.fail(b.to_string() + " k=" + std::to_string(k) + " la=" + detail::pstr(la) +
                                 " mu=" + detail::pstr(mu) + ": runner removal fails, d^e = " +
                                 d_e.to_string() + " but d^(e-1)" + detail::pstr(removed[x]) +
                                 detail::pstr(removed[y]) + " = " + d_small.to_string());
                    const LaurentPoly& a_e = t.bar[idx[x]][idx[y]];
                    const LaurentPoly& a_small = detail::bar_entry(*other, removed[x], removed[y]);
                    if (!(a_e == a_small))
                        out.fail(b.to_string() + " k=" + std::to_string(k) + " la=" + detail::pstr(la) +
                                 " mu=" + detail::pstr(mu) + ": bar coefficients differ, a^e = " +
                                 a_e.to_string() + ", a^(e-1) = " + a_small.to_string());
                }
            }
        }
    });
    rep.notes.push_back("pairs meeting the beads-before-gaps hypothesis: " + std::to_string(hyp1.load()));
    rep.notes.push_back("pairs meeting the gap-after-beads hypothesis: " + std::to_string(hyp2.load()));
    return rep;
}

/// U_k(μ) = U_k(m(μ)') whenever both are k-empty, over all e-regular μ with
/// |μ| <= max_size. Also checks μ ⊵ m(μ)', that m is an involution, the
/// rim-strip conditions, and for e >= 3 that runner removal commutes with
/// μ ↦ m(μ)'.
inline SuiteReport verify_mullineux(const std::vector<int>& moduli, int max_size,
                                    unsigned threads = default_threads()) {
    SuiteReport rep;
    rep.name = "mullineux";
    rep.statement = "U_k(mu) = U_k(m(mu)') when mu and m(mu)' are both k-empty";
    std::string es;
    for (std::size_t i = 0; i < moduli.size(); ++i) es += (i ? "," : "") + std::to_string(moduli[i]);
    rep.ranges = {{"e", es}, {"max_size", std::to_string(max_size)}};
    const auto start = std::chrono::steady_clock::now();

    struct Item {
        int e;
        int n;
    };
    std::vector<Item> items;
    for (int n = 0; n <= max_size; ++n)
        for (int e : moduli) items.push_back({e, n});
    std::vector<SuiteReport> parts(items.size());
    parallel_for(items.size(), threads, [&](std::size_t it) {
        const int e = items[it].e;
        SuiteReport& out = parts[it];
        for_each_partition(items[it].n, [&](const Partition& mu) {
            if (!is_e_regular(mu, e)) return;
            const std::string tag = "e=" + std::to_string(e) + " mu=" + detail::pstr(mu);
            try {
                const Partition rho = mullineux_conjugate(mu, e);
                const Partition m = conjugate(rho);
                ++out.cases;
                if (mullineux(m, e) != mu) out.fail(tag + ": m(m(mu)) != mu");
                if (!dominates(mu, rho, e)) out.fail(tag + ": mu does not dominate m(mu)' = " + detail::pstr(rho));
                if (!mu.empty()) {
                    const RimStrip s = strip_rim(mu, e);
                    const RimStrip s1 = strip_rim(mu, e, s.r + 1);
                    if (auto v = rim_strip_violation(mu, e, s); !v.empty()) out.fail(tag + ": rim strip: " + v);
                    if (s.result != s1.result || s.rim_length != s1.rim_length)
                        out.fail(tag + ": rim strip depends on r");
                    const auto [bt, ct] = s.pairs.back();
                    if (detail::mod(s.rim_length - (bt - ct), e) != 0) out.fail(tag + ": rim != b_t - c_t mod e");
                    if (s.rim_length != mu.size() - s.result.size()) out.fail(tag + ": rim length identity");
                    const RimStrip sc = strip_rim_conj(rho, e);
                    const RimStrip sp = strip_rim(conjugate(rho), e);
                    if (sc.rim_length != sp.rim_length || sc.result != conjugate(sp.result))
                        out.fail(tag + ": conjugate rim strip disagrees with the rim strip of the conjugate");
                }
                for (int k = 0; k < e; ++k) {
                    if (!is_k_empty(mu, e, k) || !is_k_empty(rho, e, k)) continue;
                    ++out.cases;
                    const int um = ux(mu, e, k);
                    const int ur = ux(rho, e, k);
                    if (um != ur)
                        out.fail(tag + " k=" + std::to_string(k) + ": U_k(mu) = " + std::to_string(um) +
                                 " but U_k(m(mu)') = " + std::to_string(ur));
                    if (e >= 3) {
                        const Partition mu_k = remove_runner(mu, e, k);
                        if (!is_e_regular(mu_k, e - 1)) {
                            out.fail(tag + " k=" + std::to_string(k) + ": mu^-k is not (e-1)-regular");
                        } else if (mullineux_conjugate(mu_k, e - 1) != remove_runner(rho, e, k)) {
                            out.fail(tag + " k=" + std::to_string(k) +
                                     ": m_(e-1)(mu^-k)' != (m(mu)')^-k");
                        }
                    }
                }
            } catch (const std::exception& ex) {
                out.fail(tag + ": exception: " + ex.what());
            }
        });
    });
    for (auto& p : parts) rep.merge(std::move(p));
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

/// The good-node Mullineux map agrees with the canonical-basis oracle.
inline SuiteReport verify_mullineux_oracle(const BlockRange& range, unsigned threads = default_threads()) {
    SuiteReport rep;
    rep.name = "mullineux-oracle";
    rep.statement = "m(mu)' is the unique la with d(la,mu) = q^w";
    rep.ranges = range.describe();
    auto cache = std::make_shared<BlockCache>();
    return detail::sweep_blocks(std::move(rep), blocks_in_range(range), threads,
                                [&](const BlockId& b, SuiteReport& out) {
        for (const Partition& mu : enumerate_block(b)) {
            if (!is_e_regular(mu, b.e)) continue;
            ++out.cases;
            const Partition direct = mullineux_conjugate(mu, b.e);
            const Partition oracle = mullineux_by_degree(mu, b.e, *cache);
            if (direct != oracle)
                out.fail(b.to_string() + " mu=" + detail::pstr(mu) + ": m(mu)' = " + detail::pstr(direct) +
                         " but the q^w entry is at " + detail::pstr(oracle));
        }
    });
}

/// d(la', m(mu)) = q^w d(la, mu)(q^-1) for every la and e-regular mu of a block.
inline SuiteReport verify_conjugation(const BlockRange& range, unsigned threads = default_threads()) {
    SuiteReport rep;
    rep.name = "conjugation";
    rep.statement = "d(la', m(mu)) = q^w d(la, mu)(q^-1) for e-regular mu";
    rep.ranges = range.describe();
    auto left = std::make_shared<BlockCache>();
    auto right = std::make_shared<BlockCache>();
    return detail::sweep_blocks(std::move(rep), blocks_in_range(range), threads,
                                [&](const BlockId& b, SuiteReport& out) {
        auto s = left->get(b);
        auto c = right->get({b.e, conjugate(b.core), b.weight});
        const auto& t = s->table;
        for (std::size_t j = 0; j < t.size(); ++j) {
            const Partition& mu = t.members[j];
            if (!is_e_regular(mu, b.e)) continue;
            const Partition m = mullineux(mu, b.e);
            for (std::size_t i = 0; i < t.size(); ++i) {
                ++out.cases;
                const LaurentPoly lhs = c->entry(conjugate(t.members[i]), m);
                const LaurentPoly want = s->d[i][j].bar().shifted(b.weight);
                if (!(lhs == want))
                    out.fail(b.to_string() + " la=" + detail::pstr(t.members[i]) + " mu=" + detail::pstr(mu) +
                             ": d(la', m(mu)) = " + lhs.to_string() + ", expected " + want.to_string());
            }
        }
    });
}

/// Column degree profile: the entry at m(mu)' is q^w; every other entry has
/// degree at most w - 1.
inline SuiteReport verify_degree_profile(const BlockRange& range, unsigned threads = default_threads()) {
    SuiteReport rep;
    rep.name = "degree-profile";
    rep.statement = "d(m(mu)', mu) = q^w for e-regular mu; all other entries have degree <= w-1";
    rep.ranges = range.describe();
    auto cache = std::make_shared<BlockCache>();
    return detail::sweep_blocks(std::move(rep), blocks_in_range(range), threads,
                                [&](const BlockId& b, SuiteReport& out) {
        auto s = cache->get(b);
        const auto& t = s->table;
        for (std::size_t j = 0; j < t.size(); ++j) {
            const Partition& mu = t.members[j];
            const bool regular = is_e_regular(mu, b.e);
            const Partition rho = regular ? mullineux_conjugate(mu, b.e) : Partition{};
            for (std::size_t i = 0; i < t.size(); ++i) {
                ++out.cases;
                const LaurentPoly& d = s->d[i][j];
                const std::string where = b.to_string() + " la=" + detail::pstr(t.members[i]) + " mu=" + detail::pstr(mu);
                if (regular && t.members[i] == rho) {
                    if (!(d == LaurentPoly::q(b.weight))) out.fail(where + ": expected q^w, got " + d.to_string());
                } else if (!d.is_zero() && d.max_degree() > b.weight - 1) {
                    out.fail(where + ": degree of " + d.to_string() + " exceeds w-1");
                }
            }
        }
    });
}

/// Support: d(la,mu) != 0 and a(la,mu) != 0 only when mu ⊵ la.
inline SuiteReport verify_dominance_support(const BlockRange& range, unsigned threads = default_threads()) {
    SuiteReport rep;
    rep.name = "dominance-support";
    rep.statement = "d(la,mu) and a(la,mu) vanish unless mu dominates la";
    rep.ranges = range.describe();
    auto cache = std::make_shared<BlockCache>();
    return detail::sweep_blocks(std::move(rep), blocks_in_range(range), threads,
                                [&](const BlockId& b, SuiteReport& out) {
        auto s = cache->get(b);
        const auto& t = s->table;
        for (std::size_t j = 0; j < t.size(); ++j)
            for (std::size_t i = 0; i < t.size(); ++i) {
                ++out.cases;
                if ((s->d[i][j].is_zero() && t.bar[i][j].is_zero()) || dominates(t.members[j], t.members[i], b.e))
                    continue;
                out.fail(b.to_string() + " la=" + detail::pstr(t.members[i]) + " mu=" +
                         detail::pstr(t.members[j]) + ": nonzero entry outside dominance");
            }
    });
}

/// For e-regular mu: d(la,mu) != 0 implies mu ⊵ la ⊵ m(mu)'.
inline SuiteReport verify_sandwich_support(const BlockRange& range, unsigned threads = default_threads()) {
    SuiteReport rep;
    rep.name = "sandwich-support";
    rep.statement = "d(la,mu) != 0 implies mu >= la >= m(mu)' for e-regular mu";
    rep.ranges = range.describe();
    auto cache = std::make_shared<BlockCache>();
    return detail::sweep_blocks(std::move(rep), blocks_in_range(range), threads,
                                [&](const BlockId& b, SuiteReport& out) {
        auto s = cache->get(b);
        const auto& t = s->table;
        for (std::size_t j = 0; j < t.size(); ++j) {
            const Partition& mu = t.members[j];
            if (!is_e_regular(mu, b.e)) continue;
            const Partition rho = mullineux_conjugate(mu, b.e);
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (s->d[i][j].is_zero()) continue;
                ++out.cases;
                const Partition& la = t.members[i];
                if (!dominates(mu, la, b.e) || !dominates(la, rho, b.e))
                    out.fail(b.to_string() + " la=" + detail::pstr(la) + " mu=" + detail::pstr(mu) +
                             ": not between mu and m(mu)' = " + detail::pstr(rho));
            }
        }
    });
}

/// A(q) A(q^-1) = I on each block; each computed G(mu) is bar-invariant,
/// has d(mu,mu) = 1 and q-divisible off-diagonal entries. Negative
/// coefficients are reported as notes only.
inline SuiteReport verify_bar_involution(const BlockRange& range, unsigned threads = default_threads()) {
    SuiteReport rep;
    rep.name = "bar-involution";
    rep.statement = "A(q)A(q^-1) = I; G(mu) is bar-invariant, unitriangular, q-divisible off the diagonal";
    rep.ranges = range.describe();
    auto cache = std::make_shared<BlockCache>();
    std::mutex note_mutex;
    std::vector<std::string> negative;
    rep = detail::sweep_blocks(std::move(rep), blocks_in_range(range), threads,
                               [&](const BlockId& b, SuiteReport& out) {
        auto s = cache->get(b);
        const auto& t = s->table;
        const std::size_t N = t.size();
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) {
                ++out.cases;
                LaurentPoly sum;
                LaurentPoly inv;
                for (std::size_t x = j; x <= i; ++x) {
                    if (!t.bar[i][x].is_zero() && !t.bar[x][j].is_zero()) sum += t.bar[i][x] * t.bar[x][j].bar();
                    if (!t.bar[i][x].is_zero() && !s->d[x][j].is_zero()) inv += t.bar[i][x] * s->d[x][j].bar();
                }
                const std::string where = b.to_string() + " la=" + detail::pstr(t.members[i]) + " mu=" + detail::pstr(t.members[j]);
                if (!(sum == LaurentPoly(i == j ? 1 : 0))) out.fail(where + ": A(q)A(q^-1) entry is " + sum.to_string());
                if (!(inv == s->d[i][j])) out.fail(where + ": G(mu) is not bar-invariant");
                const LaurentPoly& d = s->d[i][j];
                if (i == j && !(d == LaurentPoly(1))) out.fail(where + ": diagonal entry " + d.to_string());
                if (i != j && !detail::divisible_by_q(d)) out.fail(where + ": entry " + d.to_string() + " not divisible by q");
                for (const auto& [x, c] : d.terms())
                    if (c < 0) {
                        std::lock_guard lock(note_mutex);
                        negative.push_back(where + ": negative coefficient in " + d.to_string());
                        break;
                    }
            }
    });
    if (negative.empty())
        rep.notes.push_back("all coefficients non-negative");
    else
        for (auto& n : negative) rep.notes.push_back("warning: " + n);
    return rep;
}

/// Scopes moves: for every block and every k whose core has a >= max(w, 1)
/// addable k-nodes, the map Φ is a bijection onto the target block, every
/// member has exactly a addable and no removable k-nodes,
/// f_k^(a)|la> = |Φ(la)>, and d(la,mu) = d(Φ(la),Φ(mu)).
inline SuiteReport verify_scopes(const BlockRange& range, unsigned threads = default_threads()) {
    SuiteReport rep;
    rep.name = "scopes";
    rep.statement = "d(la,mu) = d(Phi(la),Phi(mu)) on Scopes-adjacent blocks";
    rep.ranges = range.describe();
    auto source = std::make_shared<BlockCache>();
    auto target = std::make_shared<BlockCache>();
    return detail::sweep_blocks(std::move(rep), blocks_in_range(range), threads,
                                [&](const BlockId& b, SuiteReport& out) {
        for (int k = 0; k < b.e; ++k) {
            const int a = static_cast<int>(nodes_by_residue(b.core, b.e, k, NodeKind::addable).size());
            if (a == 0 || a < b.weight) continue;
            const ScopesPair sp = scopes_adjacent(b, k);
            const std::string tag = b.to_string() + " k=" + std::to_string(k);
            auto s = source->get(b);
            auto c = target->get(sp.target);
            if (c->table.size() != s->table.size()) out.fail(tag + ": target block has a different size");
            std::set<Partition> images;
            for (const auto& [la, img] : sp.bijection) {
                ++out.cases;
                images.insert(img);
                if (block_of(img, b.e) != sp.target) out.fail(tag + ": Phi" + detail::pstr(la) + " leaves the target block");
                if (static_cast<int>(nodes_by_residue(la, b.e, k, NodeKind::addable).size()) != a ||
                    !nodes_by_residue(la, b.e, k, NodeKind::removable).empty())
                    out.fail(tag + ": " + detail::pstr(la) + " does not have exactly a addable and no removable k-nodes");
                const FockVector fv = apply_f_divided({{la, LaurentPoly(1)}}, b.e, k, a);
                if (fv.size() != 1 || fv.begin()->first != img || !(fv.begin()->second == LaurentPoly(1)))
                    out.fail(tag + ": f_k^(a)|" + detail::pstr(la) + "> != |Phi(la)>");
            }
            if (images.size() != sp.bijection.size()) out.fail(tag + ": Phi is not injective");
            for (const auto& [la, pla] : sp.bijection)
                for (const auto& [mu, pmu] : sp.bijection) {
                    ++out.cases;
                    const LaurentPoly& x = s->entry(la, mu);
                    const LaurentPoly& y = c->entry(pla, pmu);
                    if (!(x == y))
                        out.fail(tag + " la=" + detail::pstr(la) + " mu=" + detail::pstr(mu) + ": d = " +
                                 x.to_string() + " but d(Phi(la),Phi(mu)) = " + y.to_string());
                }
            if (scopes_reduce(b).representative != scopes_reduce(sp.target).representative)
                out.fail(tag + ": adjacent blocks reduce to different representatives");
        }
    });
}

/// For e > 2w > 0, each nonzero d^e(la,mu) is carried down to modulus 2w:
/// an e-singular mu first gets an empty runner at the left, then runners
/// are removed at a k where mu and m(mu)' are both k-empty. Every step must
/// preserve the value.
inline SuiteReport verify_finite(const BlockRange& range, unsigned threads = default_threads()) {
    SuiteReport rep;
    rep.name = "finite-descent";
    rep.statement = "for e > 2w every nonzero d^e(la,mu) equals some d^(2w)(xi,rho) of weight w";
    rep.ranges = range.describe();
    auto cache = std::make_shared<BlockCache>();
    std::vector<BlockId> blocks;
    for (const BlockId& b : blocks_in_range(range))
        if (b.weight > 0 && b.e > 2 * b.weight) blocks.push_back(b);
    return detail::sweep_blocks(std::move(rep), blocks, threads, [&](const BlockId& b, SuiteReport& out) {
        auto s = cache->get(b);
        const auto& t = s->table;
        const int w = b.weight;
        for (std::size_t j = 0; j < t.size(); ++j)
            for (std::size_t i = 0; i < t.size(); ++i) {
                const LaurentPoly value = s->d[i][j];
                if (value.is_zero()) continue;
                ++out.cases;
                Partition la = t.members[i];
                Partition mu = t.members[j];
                int e = b.e;
                const std::string tag = b.to_string() + " la=" + detail::pstr(la) + " mu=" + detail::pstr(mu);
                auto check = [&](const char* step) {
                    const LaurentPoly now = cache->q_decomp(la, mu, e);
                    if (now == value) return true;
                    out.fail(tag + ": " + step + " at e=" + std::to_string(e) + " gives " + now.to_string() +
                             " instead of " + value.to_string());
                    return false;
                };
                if (!is_e_regular(mu, e)) {
                    const int r0 = std::max(la.length(), mu.length());
                    la = insert_runner(la, e + 1, 0, 0, r0);
                    mu = insert_runner(mu, e + 1, 0, 0, r0);
                    ++e;
                    if (!is_e_regular(mu, e)) {
                        out.fail(tag + ": adding an empty runner leaves mu singular");
                        continue;
                    }
                    if (!check("adding an empty runner")) continue;
                }
                bool ok = true;
                while (ok && e > 2 * w) {
                    const Partition rho = mullineux_conjugate(mu, e);
                    int k = 0;
                    while (k < e && !(is_k_empty(mu, e, k) && is_k_empty(rho, e, k))) ++k;
                    if (k == e) {
                        out.fail(tag + ": no common empty runner at e=" + std::to_string(e));
                        ok = false;
                        break;
                    }
                    if (!is_k_empty(la, e, k)) {
                        out.fail(tag + ": la is not k-empty at e=" + std::to_string(e));
                        ok = false;
                        break;
                    }
                    la = remove_runner(la, e, k);
                    mu = remove_runner(mu, e, k);
                    --e;
                    ok = check("runner removal");
                }
                if (ok && (e_weight(la, e) != w || e_weight(mu, e) != w))
                    out.fail(tag + ": descent ends outside weight " + std::to_string(w));
            }
    });
}

/// Orders polynomials by their term lists.
struct PolyLess {
    bool operator()(const LaurentPoly& a, const LaurentPoly& b) const {
        const auto ta = a.terms();
        const auto tb = b.terms();
        return std::lexicographical_compare(ta.begin(), ta.end(), tb.begin(), tb.end());
    }
};

using PolySet = std::set<LaurentPoly, PolyLess>;

struct DSetResult {
    int e = 2;
    int weight = 0;
    int max_core_size = 0;
    std::vector<BlockId> representatives;
    PolySet values;
    std::string strategy = "inverse Scopes moves, smallest residue first";
    double seconds = 0;
};

/// All q-decomposition numbers of weight w at modulus e over one
/// representative per Scopes class met among cores of size <= max_core_size,
/// together with 0.
inline DSetResult d_set(int e, int w, int max_core_size, unsigned threads = default_threads()) {
    detail::check_modulus(e);
    detail::require(w >= 0, "d_set: weight must be non-negative");
    const auto start = std::chrono::steady_clock::now();
    DSetResult res;
    res.e = e;
    res.weight = w;
    res.max_core_size = max_core_size;
    std::set<BlockId> reps;
    for (const Partition& core : e_cores_up_to(e, max_core_size))
        reps.insert(scopes_reduce({e, core, w}).representative);
    res.representatives.assign(reps.begin(), reps.end());
    std::vector<PolySet> found(res.representatives.size());
    parallel_for(res.representatives.size(), threads, [&](std::size_t i) {
        const SolvedBlock s = solve_block(res.representatives[i]);
        for (const auto& row : s.d)
            for (const auto& x : row) found[i].insert(x);
    });
    res.values.insert(LaurentPoly());
    for (auto& f : found) res.values.insert(f.begin(), f.end());
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

}  // namespace fockcb
