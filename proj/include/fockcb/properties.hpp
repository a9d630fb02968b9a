#pragma once

// Property sweeps over partitions, abacus statistics, Laurent arithmetic and
// the straightening engine. Random inputs come from a fixed-seed generator,
// so every run checks the same cases.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fockcb/abacus.hpp"
#include "fockcb/blocks.hpp"
#include "fockcb/canonical.hpp"
#include "fockcb/laurent.hpp"
#include "fockcb/partition.hpp"
#include "fockcb/verify.hpp"
#include "fockcb/wedge.hpp"

namespace fockcb {

namespace detail {

inline SuiteReport timed(std::string name, std::string statement,
                         std::vector<std::pair<std::string, std::string>> ranges,
                         const std::function<void(SuiteReport&)>& body) {
    SuiteReport rep;
    rep.name = std::move(name);
    rep.statement = std::move(statement);
    rep.ranges = std::move(ranges);
    const auto start = std::chrono::steady_clock::now();
    try {
        body(rep);
    } catch (const std::exception& ex) {
        rep.fail(std::string("exception: ") + ex.what());
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

inline std::string wstr(const Word& w) {
    std::string s = "u";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "^u" : "") + std::to_string(w[i]);
    return s;
}

inline WedgeVector scaled_sum(const WedgeVector& a, const WedgeVector& b, const LaurentPoly& cb) {
    WedgeVector out = a;
    for (const auto& [w, c] : b) add_term(out, w, c * cb);
    return out;
}

inline Word random_word(std::mt19937& rng, int len, int max_letter) {
    std::uniform_int_distribution<int> letter(0, max_letter);
    Word w(static_cast<std::size_t>(len));
    for (int& x : w) x = letter(rng);
    return w;
}

inline LaurentPoly random_poly(std::mt19937& rng, int lo, int hi, int max_coeff) {
    std::uniform_int_distribution<int> c(-max_coeff, max_coeff);
    std::vector<std::pair<int, Integer>> terms;
    for (int x = lo; x <= hi; ++x) terms.emplace_back(x, Integer(c(rng)));
    return LaurentPoly::from_terms(terms);
}

}  // namespace detail

/// Conjugation, regular/restricted duality, addable/removable counts and the
/// row order of nodes_by_residue for |λ| <= max_size.
inline SuiteReport prop_partitions(int max_size = 20, std::vector<int> moduli = {2, 3, 4, 5}) {
    return detail::timed("partitions", "conjugation and node counts",
                         {{"max_size", std::to_string(max_size)}, {"e", "2..5"}}, [&](SuiteReport& rep) {
        for (int n = 0; n <= max_size; ++n)
            for_each_partition(n, [&](const Partition& la) {
                const std::string tag = detail::pstr(la);
                ++rep.cases;
                const Partition lc = conjugate(la);
                if (conjugate(lc) != la) rep.fail(tag + ": conjugation is not an involution");
                for (int e : moduli) {
                    if (is_e_regular(la, e) != is_e_restricted(lc, e))
                        rep.fail(tag + " e=" + std::to_string(e) + ": regular/restricted duality");
                    if (n > 12) continue;
                    if (all_nodes(la, e, NodeKind::addable).size() != all_nodes(la, e, NodeKind::removable).size() + 1)
                        rep.fail(tag + " e=" + std::to_string(e) + ": addable != removable + 1");
                    for (int k = 0; k < e; ++k)
                        for (NodeKind kind : {NodeKind::addable, NodeKind::removable}) {
                            const auto nodes = nodes_by_residue(la, e, k, kind);
                            for (std::size_t i = 1; i < nodes.size(); ++i)
                                if (nodes[i - 1].row >= nodes[i].row)
                                    rep.fail(tag + ": nodes_by_residue rows not increasing");
                        }
                }
            });
    });
}

/// Beta-set round trips and shifts, core/weight bookkeeping, the
/// complementary beta-sets of λ and λ', and conjugation of cores.
inline SuiteReport prop_abacus(int max_size = 14, std::vector<int> moduli = {2, 3, 4, 5}) {
    return detail::timed("abacus", "beta-set round trips, cores, complementary beta-sets",
                         {{"max_size", std::to_string(max_size)}, {"e", "2..5"}}, [&](SuiteReport& rep) {
        for (int n = 0; n <= max_size; ++n)
            for_each_partition(n, [&](const Partition& la) {
                const std::string tag = detail::pstr(la);
                const Partition lc = conjugate(la);
                for (int r = la.length(); r <= la.length() + 4; ++r) {
                    ++rep.cases;
                    const BetaSet b = beta_set(la, r);
                    if (partition_from_beta_set(b) != la) rep.fail(tag + ": beta-set round trip at r=" + std::to_string(r));
                    std::vector<int> shifted;
                    for (int x : b.entries) shifted.push_back(x + 1);
                    shifted.push_back(0);
                    if (beta_set(la, r + 1).entries != shifted) rep.fail(tag + ": shift at r=" + std::to_string(r));
                    for (int s = la.first(); s <= la.first() + 3; ++s) {
                        std::vector<int> all(b.entries);
                        for (int g : beta_set(lc, s).entries) all.push_back(r + s - 1 - g);
                        std::sort(all.begin(), all.end());
                        bool ok = static_cast<int>(all.size()) == r + s;
                        for (std::size_t i = 0; ok && i < all.size(); ++i) ok = all[i] == static_cast<int>(i);
                        if (!ok) rep.fail(tag + ": beta-sets of la and la' are not complementary at r=" +
                                          std::to_string(r) + " s=" + std::to_string(s));
                    }
                }
                for (int e : moduli) {
                    ++rep.cases;
                    const auto cw = core_and_weight(la, e);
                    if (la.size() != cw.core.size() + e * cw.weight) rep.fail(tag + ": |la| != |core| + e w");
                    if (e_core(cw.core, e) != cw.core || e_weight(cw.core, e) != 0) rep.fail(tag + ": core not idempotent");
                    if (e_core(lc, e) != conjugate(cw.core)) rep.fail(tag + ": core of la' is not the conjugate core");
                }
            });
    });
}

/// Dominance on blocks: partial order, r-independence, conjugation reversal,
/// and agreement with the weight-multiset comparison.
inline SuiteReport prop_dominance(const BlockRange& range = {{2, 3, 4}, 3, 6}) {
    return detail::timed("dominance", "dominance is an r-independent partial order, reversed by conjugation",
                         range.describe(), [&](SuiteReport& rep) {
        for (const BlockId& b : blocks_in_range(range)) {
            const auto members = enumerate_block(b);
            const std::size_t N = members.size();
            int r = 0;
            for (const auto& p : members) r = std::max({r, p.length(), p.size()});
            r += b.e;
            std::vector<IntMultiset> x0, x1, wm;
            for (const auto& p : members) {
                x0.push_back(extended_beta_set(p, b.e, r));
                x1.push_back(extended_beta_set(p, b.e, r + 1));
                wm.push_back(weight_multiset(p, b.e, r));
            }
            std::vector<std::vector<char>> dom(N, std::vector<char>(N));
            for (std::size_t i = 0; i < N; ++i)
                for (std::size_t j = 0; j < N; ++j) {
                    ++rep.cases;
                    const std::string tag = b.to_string() + " " + detail::pstr(members[i]) + " vs " + detail::pstr(members[j]);
                    dom[i][j] = dominates(members[i], members[j], b.e);
                    if (bruhat_geq(x0[i], x0[j]) != bruhat_geq(x1[i], x1[j])) rep.fail(tag + ": depends on r");
                    if (static_cast<bool>(dom[i][j]) != bruhat_geq(x0[i], x0[j])) rep.fail(tag + ": r-choice mismatch");
                    if (static_cast<bool>(dom[i][j]) != bruhat_geq(wm[i], wm[j]))
                        rep.fail(tag + ": dominance disagrees with weight multisets");
                    if (static_cast<bool>(dom[i][j]) !=
                        dominates(conjugate(members[j]), conjugate(members[i]), b.e))
                        rep.fail(tag + ": conjugation does not reverse dominance");
                }
            for (std::size_t i = 0; i < N; ++i) {
                if (!dom[i][i]) rep.fail(b.to_string() + ": not reflexive");
                for (std::size_t j = 0; j < N; ++j) {
                    if (i != j && dom[i][j] && dom[j][i]) rep.fail(b.to_string() + ": not antisymmetric");
                    if (!dom[i][j]) continue;
                    for (std::size_t k = 0; k < N; ++k)
                        if (dom[j][k] && !dom[i][k]) rep.fail(b.to_string() + ": not transitive");
                }
            }
        }
    });
}

/// U_k statistics on k-empty members of blocks: both formulas agree,
/// monotonicity under dominance, the conjugate and n_{r,k} identities,
/// runner removal as an order isomorphism, and the interval property.
inline SuiteReport prop_ux(const BlockRange& range = {{3, 4, 5}, 3, 6}) {
    return detail::timed("ux", "U_k identities on k-empty partitions", range.describe(), [&](SuiteReport& rep) {
        for (const BlockId& b : blocks_in_range(range)) {
            const int e = b.e;
            const int w = b.weight;
            const auto members = enumerate_block(b);
            const std::size_t N = members.size();
            int r = 0;
            for (const auto& p : members) r = std::max({r, p.length(), p.size()});
            r += 2 * e;
            std::vector<std::vector<char>> dom(N, std::vector<char>(N));
            for (std::size_t i = 0; i < N; ++i)
                for (std::size_t j = 0; j < N; ++j) dom[i][j] = dominates(members[i], members[j], e);
            for (int k = 0; k < e; ++k) {
                const std::string bk = b.to_string() + " k=" + std::to_string(k);
                const int kc = e - 1 - k;
                const Partition& core = b.core;
                const int core_sum = ux(core, e, k, r) + ux(conjugate(core), e, kc, r);
                const int core_n = ux(core, e, k, r) + n_rk(core, e, k, r);
                std::vector<int> U(N, -1), Uc(N, -1), nr(N, -1);
                for (std::size_t i = 0; i < N; ++i) {
                    const Partition& la = members[i];
                    const Partition lc = conjugate(la);
                    ++rep.cases;
                    const bool ke = is_k_empty(la, e, k);
                    if (ke != is_k_empty(lc, e, kc)) rep.fail(bk + " " + detail::pstr(la) + ": k-empty but la' not (e-1-k)-empty");
                    if (!ke) continue;
                    U[i] = ux(la, e, k, r);
                    if (U[i] != ux(la, e, k, r + 1) || U[i] != ux(la, e, k)) rep.fail(bk + " " + detail::pstr(la) + ": U_k depends on r");
                    if (U[i] != ux_by_beads(la, e, k, r)) rep.fail(bk + " " + detail::pstr(la) + ": the two U_k formulas disagree");
                    Uc[i] = ux(lc, e, kc, r);
                    if (U[i] + Uc[i] != core_sum + w) rep.fail(bk + " " + detail::pstr(la) + ": U_k(la) + U_(e-1-k)(la') identity");
                    nr[i] = n_rk(la, e, k, r);
                    if (U[i] + nr[i] != core_n + w) rep.fail(bk + " " + detail::pstr(la) + ": U_k + n_rk identity");
                }
                std::vector<std::size_t> K;
                for (std::size_t i = 0; i < N; ++i)
                    if (U[i] >= 0) K.push_back(i);
                for (std::size_t i : K)
                    for (std::size_t j : K) {
                        ++rep.cases;
                        const std::string tag = bk + " " + detail::pstr(members[i]) + ", " + detail::pstr(members[j]);
                        if (U[i] + Uc[i] != U[j] + Uc[j]) rep.fail(tag + ": conjugate sums differ");
                        if ((U[i] == U[j]) != (nr[i] == nr[j])) rep.fail(tag + ": U_k equality and n_rk equality disagree");
                        if (dom[i][j] && U[i] < U[j]) rep.fail(tag + ": U_k not monotone under dominance");
                        if (dom[i][j] && U[i] == U[j])
                            for (std::size_t x = 0; x < N; ++x)
                                if (dom[i][x] && dom[x][j] && U[x] != U[i])
                                    rep.fail(tag + ": " + detail::pstr(members[x]) + " in between is not k-empty with equal U_k");
                    }
                if (e < 3) continue;
                const BlockId target{e - 1, e_core(remove_runner(core, e, k), e - 1), w};
                std::vector<Partition> images;
                for (std::size_t i : K) images.push_back(remove_runner(members[i], e, k));
                std::vector<Partition> sorted_images(images);
                std::sort(sorted_images.begin(), sorted_images.end());
                if (sorted_images != enumerate_block(target)) rep.fail(bk + ": runner removal is not a bijection onto " + target.to_string());
                for (std::size_t x = 0; x < K.size(); ++x)
                    for (std::size_t y = 0; y < K.size(); ++y) {
                        ++rep.cases;
                        if (static_cast<bool>(dom[K[x]][K[y]]) != dominates(images[x], images[y], e - 1))
                            rep.fail(bk + " " + detail::pstr(members[K[x]]) + ", " + detail::pstr(members[K[y]]) +
                                     ": runner removal does not preserve dominance");
                    }
            }
        }
    });
}

/// Laurent arithmetic: bar is an involutive ring map, exact division, the
/// bar-difference solver and bar-invariance of quantum integers.
inline SuiteReport prop_laurent(int samples = 2000, unsigned seed = 12345) {
    return detail::timed("laurent", "bar involution, exact division, quantum integers",
                         {{"samples", std::to_string(samples)}}, [&](SuiteReport& rep) {
        std::mt19937 rng(seed);
        std::uniform_int_distribution<int> lo(-6, 3), len(0, 6);
        for (int t = 0; t < samples; ++t) {
            ++rep.cases;
            const int la = lo(rng), lb = lo(rng);
            const LaurentPoly a = detail::random_poly(rng, la, la + len(rng), 5);
            LaurentPoly b = detail::random_poly(rng, lb, lb + len(rng), 5);
            if (b.is_zero()) b = LaurentPoly::q(lb);
            if (!(a.bar().bar() == a)) rep.fail("bar(bar(" + a.to_string() + ")) != itself");
            if (!((a + b).bar() == a.bar() + b.bar())) rep.fail("bar is not additive");
            if (!((a * b).bar() == a.bar() * b.bar())) rep.fail("bar is not multiplicative");
            if (!(exact_div(a * b, b) == a)) rep.fail("exact_div(" + (a * b).to_string() + ", " + b.to_string() + ")");
            const int lf = std::max(1, lb + 3);
            const LaurentPoly f = detail::random_poly(rng, lf, lf + len(rng), 5);
            if (!(solve_bar_difference(f - f.bar()) == f)) rep.fail("solve_bar_difference on " + f.to_string());
        }
        for (int n = 0; n <= 12; ++n) {
            ++rep.cases;
            if (!(quantum_integer(n).bar() == quantum_integer(n))) rep.fail("[" + std::to_string(n) + "] not bar-invariant");
            if (!(quantum_factorial(n).bar() == quantum_factorial(n))) rep.fail("[" + std::to_string(n) + "]! not bar-invariant");
        }
    });
}

/// Straightening: fixed points, zero and sign rules, bounds on output
/// letters, preserved residues, Bruhat descent of the e-extension,
/// agreement with leftmost-inversion rewriting, and the two-letter relations
/// in context.
inline SuiteReport prop_straighten(int samples = 1500, unsigned seed = 2024) {
    return detail::timed("straighten", "straightening rules and output constraints",
                         {{"samples", std::to_string(samples)}, {"e", "2..5"}}, [&](SuiteReport& rep) {
        std::mt19937 rng(seed);
        std::uniform_int_distribution<int> emod(2, 5), len(2, 5);
        for (int t = 0; t < samples; ++t) {
            const int e = emod(rng);
            const Word w = detail::random_word(rng, len(rng), 14);
            const std::string tag = "e=" + std::to_string(e) + " " + detail::wstr(w);
            ++rep.cases;
            const WedgeVector v = straighten(w, e);
            if (!(v == straighten_naive(w, e))) rep.fail(tag + ": insertion and leftmost-inversion rewriting disagree");
            Word sorted(w);
            std::sort(sorted.begin(), sorted.end(), std::greater<>());
            // a repeat inside a contiguous run of letters congruent mod e
            bool congruent_repeat = false;
            for (std::size_t i = 0; i < w.size() && !congruent_repeat; ++i)
                for (std::size_t j = i + 1; j < w.size() && (w[j] - w[i]) % e == 0; ++j)
                    if (w[j] == w[i]) congruent_repeat = true;
            if (detail::is_ordered(w) && !(v == WedgeVector{{w, LaurentPoly(1)}})) rep.fail(tag + ": ordered word changed");
            if (congruent_repeat && !v.empty()) rep.fail(tag + ": repeat in a congruent run gives a nonzero result");
            std::vector<int> res_in;
            for (int x : w) res_in.push_back(x % e);
            std::sort(res_in.begin(), res_in.end());
            const IntMultiset xin = extension(w, e);
            for (const auto& [out, c] : v) {
                if (out.front() > sorted.front() || out.back() < sorted.back()) rep.fail(tag + ": output letter out of range");
                std::vector<int> res_out;
                for (int x : out) res_out.push_back(x % e);
                std::sort(res_out.begin(), res_out.end());
                if (res_out != res_in) rep.fail(tag + ": residues not preserved");
                if (!bruhat_geq(xin, extension(out, e))) rep.fail(tag + ": e-extension does not decrease");
            }
            // swapping two adjacent congruent letters flips the sign
            for (std::size_t i = 0; i + 1 < w.size(); ++i) {
                if (w[i] == w[i + 1] || detail::mod(w[i] - w[i + 1], e) != 0) continue;
                Word s(w);
                std::swap(s[i], s[i + 1]);
                WedgeVector neg;
                for (const auto& [out, c] : v) neg.emplace(out, -c);
                if (!(straighten(s, e) == neg)) rep.fail(tag + ": congruent transposition does not flip the sign");
            }
        }
        // both two-letter relations, embedded between random context letters
        std::uniform_int_distribution<int> letter(0, 30), gap(1, 40);
        const LaurentPoly q = LaurentPoly::q(1), qi = LaurentPoly::q(-1);
        for (int t = 0; t < samples; ++t) {
            const int e = emod(rng);
            const int l = letter(rng);
            const int m = l + gap(rng);
            const int i = (m - l) % e;
            if (i == 0) continue;
            const Word pre = detail::random_word(rng, t % 2, 50);
            const Word post = detail::random_word(rng, (t / 2) % 2, 50);
            auto ctx = [&](int x, int y) {
                Word out(pre);
                out.push_back(x);
                out.push_back(y);
                out.insert(out.end(), post.begin(), post.end());
                return straighten(out, e);
            };
            ++rep.cases;
            const int steps = (m - l - i) / e;
            WedgeVector s1, s2;
            for (int j = 1; j <= steps; ++j) {
                s1 = detail::scaled_sum(s1, ctx(l + j * e, m - j * e), 1);
                s2 = detail::scaled_sum(s2, ctx(m - j * e, l + j * e), 1);
            }
            const WedgeVector rhs1 = detail::scaled_sum(detail::scaled_sum({}, ctx(l, m), -q), s1, qi - q);
            const WedgeVector rhs2 = detail::scaled_sum(detail::scaled_sum({}, ctx(m, l), -qi), s2, q - qi);
            const std::string tag = "e=" + std::to_string(e) + " l=" + std::to_string(l) + " m=" + std::to_string(m);
            if (!(ctx(m, l) == rhs1)) rep.fail(tag + ": relation for u_m^u_l fails");
            if (!(ctx(l, m) == rhs2)) rep.fail(tag + ": relation for u_l^u_m fails");
        }
    });
}

/// For words avoiding runner d, straightening at e then renumbering by φ_d
/// equals renumbering then straightening at e - 1.
inline SuiteReport prop_runner_deletion(int samples = 1500, unsigned seed = 77) {
    return detail::timed("runner-deletion-straightening", "straightening commutes with deleting an unused runner",
                         {{"samples", std::to_string(samples)}, {"e", "3..6"}}, [&](SuiteReport& rep) {
        std::mt19937 rng(seed);
        std::uniform_int_distribution<int> emod(3, 6), len(2, 5), letter(0, 24);
        for (int t = 0; t < samples; ++t) {
            const int e = emod(rng);
            const int d = std::uniform_int_distribution<int>(0, e - 1)(rng);
            Word w;
            const int n = len(rng);
            while (static_cast<int>(w.size()) < n) {
                const int x = letter(rng);
                if (x % e != d) w.push_back(x);
            }
            auto phi = [&](const Word& x) {
                Word y;
                for (int z : x) y.push_back(phi_d(z, e, d));
                return y;
            };
            ++rep.cases;
            WedgeVector mapped;
            for (const auto& [out, c] : straighten(w, e)) detail::add_term(mapped, phi(out), c);
            if (!(mapped == straighten(phi(w), e - 1)))
                rep.fail("e=" + std::to_string(e) + " d=" + std::to_string(d) + " " + detail::wstr(w) +
                         ": straightening does not commute with runner deletion");
        }
    });
}

/// Bar images of standard basis vectors: supported on the block, below μ in
/// dominance, with a(μ,μ) = 1, and independent of the bead count.
inline SuiteReport prop_bar_standard(int max_size = 9, std::vector<int> moduli = {2, 3, 4}) {
    return detail::timed("bar-standard", "bar images are unitriangular, block-supported and r-stable",
                         {{"max_size", std::to_string(max_size)}, {"e", "2..4"}}, [&](SuiteReport& rep) {
        for (int e : moduli)
            for (int n = 0; n <= max_size; ++n)
                for_each_partition(n, [&](const Partition& mu) {
                    ++rep.cases;
                    const std::string tag = "e=" + std::to_string(e) + " mu=" + detail::pstr(mu);
                    const int r = std::max(n, mu.length());
                    const FockVector a = bar_standard(mu, e, r);
                    if (!(a == bar_standard(mu, e, r + 1))) rep.fail(tag + ": bar image depends on r");
                    auto it = a.find(mu);
                    if (it == a.end() || !(it->second == LaurentPoly(1))) rep.fail(tag + ": a(mu,mu) != 1");
                    for (const auto& [la, c] : a)
                        if (!dominates(mu, la, e)) rep.fail(tag + ": support at " + detail::pstr(la) + " outside dominance");
                });
    });
}

/// enumerate_block against grouping all partitions of n by core and weight.
inline SuiteReport prop_block_enumeration(int max_n = 30, std::vector<int> moduli = {2, 3, 4, 5}) {
    return detail::timed("block-enumeration", "enumerate_block equals brute-force grouping",
                         {{"max_n", std::to_string(max_n)}, {"e", "2..5"}}, [&](SuiteReport& rep) {
        for (int n = 0; n <= max_n; ++n) {
            const auto all = partitions_of(n);
            for (int e : moduli) {
                std::map<BlockId, std::vector<Partition>> groups;
                for (const auto& p : all) groups[block_of(p, e)].push_back(p);
                for (auto& [id, parts] : groups) {
                    ++rep.cases;
                    std::sort(parts.begin(), parts.end());
                    if (enumerate_block(id) != parts) rep.fail(id.to_string() + ": enumeration differs from brute force");
                }
            }
        }
    });
}

/// The set of values of a block equals that of its Scopes representative.
inline SuiteReport prop_dset_invariance(const BlockRange& range = {{3, 4}, 2, 6}) {
    return detail::timed("scopes-class-values", "Scopes-equivalent blocks have the same value sets",
                         range.describe(), [&](SuiteReport& rep) {
        BlockCache cache;
        auto values = [&](const BlockId& b) {
            PolySet s;
            for (const auto& row : cache.get(b)->d)
                for (const auto& x : row) s.insert(x);
            return s;
        };
        for (const BlockId& b : blocks_in_range(range)) {
            ++rep.cases;
            const BlockId rep_block = scopes_reduce(b).representative;
            if (values(b) != values(rep_block))
                rep.fail(b.to_string() + ": value set differs from representative " + rep_block.to_string());
        }
    });
}

/// Every property suite at its default bounds.
inline std::vector<SuiteReport> run_property_suites() {
    return {prop_partitions(),  prop_abacus(),       prop_dominance(),          prop_ux(),
            prop_laurent(),     prop_straighten(),   prop_runner_deletion(),          prop_bar_standard(),
            prop_block_enumeration(), prop_dset_invariance()};
}

}  // namespace fockcb
