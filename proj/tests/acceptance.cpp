// Acceptance run: one PASS/FAIL line per criterion, exact comparisons only.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fockcb/fockcb.hpp"

using namespace fockcb;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::vector<std::string> details;

    void check(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            details.push_back(what);
        }
    }

    void suite(const SuiteReport& r, double limit_seconds = 0) {
        std::ostringstream s;
        s << r.name << ": " << r.cases << " cases, " << r.failure_count << " failures, " << r.seconds << " s";
        details.push_back(s.str());
        if (!r.passed()) {
            ok = false;
            for (const auto& f : r.failures) details.push_back("  " + f);
        }
        if (limit_seconds > 0 && r.seconds >= limit_seconds) {
            ok = false;
            details.push_back("  over the time limit of " + std::to_string(limit_seconds) + " s");
        }
    }
};

Partition P(const char* s) { return Partition::parse(s); }
LaurentPoly Q(int x) { return LaurentPoly::q(x); }

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

const BlockRange sweep_range{{3, 4, 5}, 3, 4};

Outcome golden_straightening() {
    Outcome o;
    const auto t0 = Clock::now();
    const WedgeVector v = straighten({0, 2, 12}, 3);
    const double s = seconds_since(t0);
    const WedgeVector want{{{12, 2, 0}, -Q(-2)},
                           {{11, 3, 0}, Q(-3) - Q(-1)},
                           {{9, 5, 0}, Q(-2) - Q(-4)},
                           {{8, 6, 0}, Q(-5) - Q(-3)}};
    o.check(v == want, "u0^u2^u12 at e=3 does not match the four-term expansion");
    o.check(s < 1e-3, "straightening took " + std::to_string(s * 1e3) + " ms");
    o.details.push_back("straighten: " + std::to_string(s * 1e3) + " ms");
    return o;
}

Outcome golden_bar() {
    Outcome o;
    const auto t0 = Clock::now();
    const FockVector v = bar_standard(P("4"), 3, 4);
    const double s = seconds_since(t0);
    const FockVector want{{P("4"), LaurentPoly(1)}, {P("2,2"), Q(1) - Q(-1)}, {P("1,1,1,1"), Q(-2) - 1}};
    o.check(v == want, "bar image of (4) at e=3 does not match");
    o.check(s < 1e-2, "bar involution took " + std::to_string(s * 1e3) + " ms");
    o.details.push_back("bar_standard: " + std::to_string(s * 1e3) + " ms");
    return o;
}

Outcome golden_runner_removal() {
    Outcome o;
    o.check(remove_runner(P("7,4,2,1,1"), 4, 1) == P("5,3,2,1"), "(7,4,2,1,1) does not map to (5,3,2,1)");
    o.check(remove_runner(P("11,2,1,1"), 4, 1) == P("8,2,1"), "(11,2,1,1) does not map to (8,2,1)");
    o.check(ux(P("7,4,2,1,1"), 4, 1) == 3, "U_1(7,4,2,1,1) != 3");
    o.check(ux(P("11,2,1,1"), 4, 1) == 3, "U_1(11,2,1,1) != 3");
    o.check(extended_beta_set(P("7,4,2,1,1"), 4, 9) ==
                IntMultiset({0, 0, 1, 1, 2, 2, 3, 3, 3, 4, 5, 6, 7, 7, 8, 11, 11, 15}),
            "extended beta-set of (7,4,2,1,1) does not match");
    o.check(extended_beta_set(P("11,2,1,1"), 4, 9) ==
                IntMultiset({0, 0, 1, 1, 2, 2, 3, 3, 3, 4, 5, 6, 7, 7, 9, 11, 15, 19}),
            "extended beta-set of (11,2,1,1) does not match");
    return o;
}

Outcome runner_removal_sweep() {
    Outcome o;
    o.suite(verify_runner_removal(sweep_range), 600);
    return o;
}

Outcome mullineux_sweep() {
    Outcome o;
    o.suite(verify_mullineux({2, 3, 4}, 20), 120);
    return o;
}

Outcome golden_mullineux() {
    Outcome o;
    const RimStrip s = strip_rim(P("12,11,11,7,6,5,3,3,2"), 3);
    std::vector<int> flat;
    for (auto [b, c] : s.pairs) {
        flat.push_back(b - s.r + 15);
        flat.push_back(c - s.r + 15);
    }
    const RimStrip at15 = strip_rim(P("12,11,11,7,6,5,3,3,2"), 3, 15);
    std::vector<int> flat15;
    for (auto [b, c] : at15.pairs) {
        flat15.push_back(b);
        flat15.push_back(c);
    }
    o.check(flat15 == std::vector<int>{26, 20, 18, 15, 14, 6}, "rim-strip positions do not match");
    o.check(flat == flat15, "rim-strip positions depend on the bead count");
    o.check(at15.rim_length == 17 && s.rim_length == 17, "rim length is not 17");
    o.check(at15.result == P("10,10,8,5,5,2,2,1"), "stripped partition does not match");
    o.check(mullineux_conjugate(P("3"), 3) == P("2,1"), "m((3))' != (2,1)");
    o.check(mullineux_conjugate(P("6,3,1"), 3) == P("5,3,2"), "m((6,3,1))' != (5,3,2)");
    return o;
}

Outcome mullineux_oracle() {
    Outcome o;
    o.suite(verify_mullineux_oracle({{2, 3, 4}, 2, 4}));
    return o;
}

Outcome identity_suites() {
    Outcome o;
    o.suite(verify_conjugation(sweep_range));
    o.suite(verify_degree_profile(sweep_range));
    o.suite(verify_dominance_support(sweep_range));
    o.suite(verify_sandwich_support(sweep_range));
    o.suite(verify_bar_involution(sweep_range));
    o.suite(verify_scopes(sweep_range));
    o.suite(verify_finite(sweep_range));
    return o;
}

Outcome weight_three_values() {
    Outcome o;
    const LaurentPoly q = Q(1);
    const PolySet allowed{LaurentPoly(), LaurentPoly(1), q, q * q, q * q * q};
    const auto t0 = Clock::now();
    for (int e = 2; e <= 6; ++e) {
        const DSetResult r = d_set(e, 3, 8);
        std::string vals;
        for (const auto& v : r.values) {
            vals += (vals.empty() ? "" : ", ") + v.to_string();
            o.check(allowed.count(v) > 0, "e=" + std::to_string(e) + " produced " + v.to_string());
        }
        o.details.push_back("e=" + std::to_string(e) + ": " + std::to_string(r.representatives.size()) +
                            " representative blocks, values {" + vals + "}, " + std::to_string(r.seconds) + " s");
    }
    const double s = seconds_since(t0);
    o.check(s < 1800, "d_set sweep took " + std::to_string(s) + " s");
    return o;
}

Outcome property_suites() {
    Outcome o;
    for (const SuiteReport& r : run_property_suites()) o.suite(r, 60);
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"golden straightening", golden_straightening},
        {"golden bar involution", golden_bar},
        {"golden runner removal", golden_runner_removal},
        {"runner removal sweep", runner_removal_sweep},
        {"Mullineux U_k sweep", mullineux_sweep},
        {"golden Mullineux", golden_mullineux},
        {"Mullineux oracle agreement", mullineux_oracle},
        {"identity suites", identity_suites},
        {"weight-3 value set", weight_three_values},
        {"property suites", property_suites},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& ex) {
            o.ok = false;
            o.details.push_back(std::string("exception: ") + ex.what());
        }
        const double s = seconds_since(t0);
        failed += !o.ok;
        std::printf("%s criterion %zu: %s (%.3f s)\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), s);
        for (const auto& d : o.details) std::printf("    %s\n", d.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
