// fockcb: command-line front end for the fockcb library.
//
// Exit codes: 0 success, 1 verification or engine failure, 2 usage error.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fockcb/fockcb.hpp"

namespace {

using fockcb::io::json;
using namespace fockcb;

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

struct Options {
    bool as_json = false;
    int e = 0;
    int k = 0;
    int weight = 0;
    int r = -1;
    unsigned threads = 0;
    std::string lambda;
    std::string mu;
    std::string core = "0";
    bool matrix = false;
    std::string format = "text";
    bool conjugate_flag = false;
    bool check = false;
    int max_core_size = 4;
    int max_size = 20;
    int max_weight = -1;
    std::vector<int> moduli;
    std::string suite;
};

void emit(const Options& o, const std::string& kind, const json& data, const std::string& text) {
    if (o.as_json)
        std::cout << io::envelope(kind, data).dump(2) << '\n';
    else
        std::cout << text;
}

std::string line(const std::string& s) { return s + '\n'; }

unsigned threads_of(const Options& o) { return o.threads ? o.threads : default_threads(); }

/// Recomputes with the default bead count and insists on the same answer.
template <class T>
void require_r_independent(const T& with_r, const T& with_default, const std::string& what) {
    if (!(with_r == with_default)) throw engine_error(what + " depends on the bead count r");
}

int cmd_decomp(const Options& o) {
    const Partition la = Partition::parse(o.lambda);
    const Partition mu = Partition::parse(o.mu);
    detail::check_modulus(o.e);
    const LaurentPoly d = q_decomp(la, mu, o.e);
    emit(o, "poly", io::to_json(d), line(d.to_string()));
    return exit_ok;
}

int cmd_bar(const Options& o) {
    const Partition mu = Partition::parse(o.mu);
    detail::check_modulus(o.e);
    const int stable = std::max(mu.size(), mu.length());
    FockVector v = bar_standard(mu, o.e, std::max(stable, 1));
    if (o.r >= 0) require_r_independent(bar_standard(mu, o.e, o.r), v, "bar image");
    std::string text;
    for (const auto& [la, c] : v) text += la.to_string() + "\t" + c.to_string() + "\n";
    emit(o, "fock_vector", io::to_json(v), text);
    return exit_ok;
}

int cmd_block(const Options& o) {
    const BlockId id{o.e, Partition::parse(o.core), o.weight};
    detail::validate_block(id);
    if (!o.matrix) {
        BlockTable t = make_block_table(id, enumerate_block(id), threads_of(o));
        json parts = json::array();
        std::string text;
        for (const auto& p : t.members) {
            parts.push_back(io::to_json(p));
            text += p.to_string() + "\n";
        }
        emit(o, "partitions", {{"block", io::to_json(id)}, {"partitions", parts}}, text);
        return exit_ok;
    }
    const SolvedBlock s = solve_block(id, threads_of(o));
    io::PolyTable table{id, s.table.members, s.d};
    std::ostringstream text;
    const char sep = o.format == "csv" ? ',' : '\t';
    auto cell = [&](const std::string& x) { return o.format == "csv" ? "\"" + x + "\"" : x; };
    text << cell("lambda\\mu");
    for (const auto& p : table.partitions) text << sep << cell(p.to_string());
    text << '\n';
    for (std::size_t i = 0; i < table.partitions.size(); ++i) {
        text << cell(table.partitions[i].to_string());
        for (const auto& x : table.entries[i]) text << sep << cell(x.to_string());
        text << '\n';
    }
    emit(o, "matrix", io::to_json(table), text.str());
    return exit_ok;
}

int cmd_mull(const Options& o) {
    const Partition mu = Partition::parse(o.mu);
    detail::check_modulus(o.e);
    if (o.check) {
        const RimStrip s = o.r >= 0 ? strip_rim(mu, o.e, o.r) : strip_rim(mu, o.e);
        const Partition rho = mullineux_conjugate(mu, o.e);
        const bool ok = check_mull_characterization(mu, rho, o.e);
        std::string pairs;
        for (auto [b, c] : s.pairs) pairs += (pairs.empty() ? "" : " ") + std::to_string(b) + "," + std::to_string(c);
        json data = io::to_json(s);
        data["mullineux_conjugate"] = io::to_json(rho);
        data["characterization"] = ok;
        emit(o, "rim_strip", data,
             "pairs: " + pairs + "\nrim: " + std::to_string(s.rim_length) + "\nresult: " + s.result.to_string() +
                 "\nmullineux_conjugate: " + rho.to_string() + "\ncharacterization: " + (ok ? "ok" : "fail") + "\n");
        return ok ? exit_ok : exit_failure;
    }
    const Partition out = o.conjugate_flag ? mullineux_conjugate(mu, o.e) : mullineux(mu, o.e);
    emit(o, "partition", io::to_json(out), line(out.to_string()));
    return exit_ok;
}

int cmd_remove_runner(const Options& o) {
    const Partition la = Partition::parse(o.lambda);
    const Partition out = remove_runner(la, o.e, o.k);
    const int r = o.r >= 0 ? o.r : la.length();
    const RunnerParams p = runner_params(la, o.e, o.k, r);
    const int r_out = r - p.c;
    json data = {{"partition", io::to_json(out)},
                 {"beta_set", io::to_json(beta_set(la, r))},
                 {"removed_beta_set", io::to_json(beta_set(out, r_out))}};
    emit(o, "runner_removal", data, line(out.to_string()));
    return exit_ok;
}

int cmd_ux(const Options& o) {
    const Partition la = Partition::parse(o.lambda);
    const int u = ux(la, o.e, o.k);
    if (o.r >= 0) require_r_independent(ux(la, o.e, o.k, o.r), u, "U_k");
    emit(o, "integer", u, line(std::to_string(u)));
    return exit_ok;
}

int cmd_core(const Options& o) {
    const Partition la = Partition::parse(o.lambda);
    detail::check_modulus(o.e);
    const auto cw = core_and_weight(la, o.e);
    emit(o, "core", {{"core", io::to_json(cw.core)}, {"weight", cw.weight}},
         "core: " + cw.core.to_string() + "\nweight: " + std::to_string(cw.weight) + "\n");
    return exit_ok;
}

int cmd_dset(const Options& o) {
    const DSetResult d = d_set(o.e, o.weight, o.max_core_size, threads_of(o));
    std::string text;
    for (const auto& v : d.values) text += v.to_string() + "\n";
    emit(o, "dset", io::to_json(d), text);
    return exit_ok;
}

int cmd_scopes(const Options& o) {
    const BlockId id{o.e, Partition::parse(o.core), o.weight};
    const ScopesReduction red = scopes_reduce(id);
    json trace = json::array();
    std::string text = "representative: " + red.representative.to_string() + "\n";
    for (const auto& [k, core] : red.trace) {
        trace.push_back({{"k", k}, {"core", io::to_json(core)}});
        text += "remove k=" + std::to_string(k) + " -> core " + core.to_string() + "\n";
    }
    emit(o, "scopes", {{"representative", io::to_json(red.representative)}, {"trace", trace},
                       {"strategy", "smallest residue first"}},
         text);
    return exit_ok;
}

BlockRange range_of(const Options& o, std::vector<int> moduli, int max_weight, int max_core) {
    return {o.moduli.empty() ? std::move(moduli) : o.moduli, o.max_weight >= 0 ? o.max_weight : max_weight,
            max_core};
}

std::string report_text(const SuiteReport& r) {
    std::ostringstream s;
    s << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.statement << '\n';
    for (const auto& [k, v] : r.ranges) s << "  " << k << " = " << v << '\n';
    s << "  cases: " << r.cases << "  failures: " << r.failure_count << "  seconds: " << r.seconds << '\n';
    for (const auto& f : r.failures) s << "  failure: " << f << '\n';
    for (const auto& n : r.notes) s << "  note: " << n << '\n';
    return s.str();
}

int cmd_verify(const Options& o) {
    const unsigned t = threads_of(o);
    const int core = o.max_core_size;
    std::vector<SuiteReport> reports;
    const std::string& s = o.suite;
    const bool all = s == "all";
    if (all || s == "runner-removal") reports.push_back(verify_runner_removal(range_of(o, {3, 4, 5}, 3, core), t));
    if (all || s == "mullineux") reports.push_back(verify_mullineux(o.moduli.empty() ? std::vector<int>{2, 3, 4} : o.moduli, o.max_size, t));
    if (all || s == "mullineux-oracle") reports.push_back(verify_mullineux_oracle(range_of(o, {2, 3, 4}, 2, core), t));
    if (all || s == "conjugation") reports.push_back(verify_conjugation(range_of(o, {3, 4, 5}, 3, core), t));
    if (all || s == "degree-profile") reports.push_back(verify_degree_profile(range_of(o, {3, 4, 5}, 3, core), t));
    if (all || s == "dominance-support") reports.push_back(verify_dominance_support(range_of(o, {3, 4, 5}, 3, core), t));
    if (all || s == "sandwich-support") reports.push_back(verify_sandwich_support(range_of(o, {3, 4, 5}, 3, core), t));
    if (all || s == "bar-involution") reports.push_back(verify_bar_involution(range_of(o, {3, 4, 5}, 3, core), t));
    if (all || s == "scopes") reports.push_back(verify_scopes(range_of(o, {3, 4, 5}, 3, core), t));
    if (all || s == "finite") reports.push_back(verify_finite(range_of(o, {3, 4, 5}, 3, core), t));
    if (all || s == "properties")
        for (auto& r : run_property_suites()) reports.push_back(std::move(r));
    if (reports.empty()) throw CLI::ValidationError("verify", "unknown suite '" + s + "'");
    bool ok = true;
    json data = json::array();
    std::string text;
    for (const auto& r : reports) {
        ok = ok && r.passed();
        data.push_back(io::to_json(r));
        text += report_text(r);
    }
    emit(o, "suite_reports", data, text);
    return ok ? exit_ok : exit_failure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-decomposition numbers, runner removal and the Mullineux map"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.as_json, "Emit JSON instead of text");
    app.add_option("--threads", o.threads, "Worker threads (default: FOCKCB_THREADS or hardware concurrency)");

    auto e_opt = [&](CLI::App* c) { c->add_option("--e", o.e, "Modulus e >= 2")->required(); };
    auto r_opt = [&](CLI::App* c) { c->add_option("--r", o.r, "Bead count for displays"); };
    const char* part_help = "Partition: comma-separated weakly decreasing positive parts, 0 for the empty partition";

    auto* decomp = app.add_subcommand("decomp", "q-decomposition number d_{lambda mu}(q)");
    e_opt(decomp);
    r_opt(decomp);
    decomp->add_option("--lambda", o.lambda, part_help)->required();
    decomp->add_option("--mu", o.mu, part_help)->required();

    auto* bar = app.add_subcommand("bar", "Bar involution of a standard basis vector");
    e_opt(bar);
    r_opt(bar);
    bar->add_option("--mu", o.mu, part_help)->required();

    auto* block = app.add_subcommand("block", "Members or decomposition matrix of a block");
    e_opt(block);
    r_opt(block);
    block->add_option("--core", o.core, part_help)->required();
    block->add_option("--weight", o.weight, "Weight w >= 0")->required();
    block->add_flag("--matrix", o.matrix, "Print the decomposition matrix");
    block->add_option("--format", o.format, "Matrix text format")->check(CLI::IsMember({"text", "csv"}));

    auto* mull = app.add_subcommand("mull", "Mullineux map of an e-regular partition");
    e_opt(mull);
    r_opt(mull);
    mull->add_option("--mu", o.mu, part_help)->required();
    mull->add_flag("--conjugate", o.conjugate_flag, "Print m(mu)' instead of m(mu)");
    mull->add_flag("--check", o.check, "Print the rim strip and check the characterization");

    auto* rr = app.add_subcommand("remove-runner", "Remove the runner of a k-empty partition");
    e_opt(rr);
    r_opt(rr);
    rr->add_option("--k", o.k, "Residue k")->required();
    rr->add_option("--lambda", o.lambda, part_help)->required();

    auto* uxc = app.add_subcommand("ux", "The statistic U_k of a k-empty partition");
    e_opt(uxc);
    r_opt(uxc);
    uxc->add_option("--k", o.k, "Residue k")->required();
    uxc->add_option("--lambda", o.lambda, part_help)->required();

    auto* corec = app.add_subcommand("core", "e-core and e-weight");
    e_opt(corec);
    r_opt(corec);
    corec->add_option("--lambda", o.lambda, part_help)->required();

    auto* dset = app.add_subcommand("dset", "All q-decomposition numbers of a weight over Scopes representatives");
    e_opt(dset);
    r_opt(dset);
    dset->add_option("--weight", o.weight, "Weight w >= 0")->required();
    dset->add_option("--max-core-size", o.max_core_size, "Largest core size searched")->required();

    auto* scopes = app.add_subcommand("scopes", "Reduce a block along Scopes moves");
    e_opt(scopes);
    r_opt(scopes);
    scopes->add_option("--core", o.core, part_help)->required();
    scopes->add_option("--weight", o.weight, "Weight w >= 0")->required();

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    r_opt(verify);
    verify->add_option("suite", o.suite,
                       "runner-removal | mullineux | mullineux-oracle | conjugation | degree-profile | "
                       "dominance-support | sandwich-support | bar-involution | scopes | finite | properties | all")
        ->required();
    verify->add_option("--e", o.moduli, "Moduli to sweep, comma-separated")->delimiter(',');
    verify->add_option("--max-weight", o.max_weight, "Largest block weight");
    verify->add_option("--max-core-size", o.max_core_size, "Largest core size");
    verify->add_option("--max-size", o.max_size, "Largest |mu| for the mullineux suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& ex) {
        return app.exit(ex);
    } catch (const CLI::ParseError& ex) {
        app.exit(ex);
        return exit_usage;
    }

    try {
        if (*decomp) return cmd_decomp(o);
        if (*bar) return cmd_bar(o);
        if (*block) return cmd_block(o);
        if (*mull) return cmd_mull(o);
        if (*rr) return cmd_remove_runner(o);
        if (*uxc) return cmd_ux(o);
        if (*corec) return cmd_core(o);
        if (*dset) return cmd_dset(o);
        if (*scopes) return cmd_scopes(o);
        if (*verify) return cmd_verify(o);
    } catch (const precondition_error& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return exit_usage;
    } catch (const CLI::ValidationError& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return exit_usage;
    } catch (const std::exception& ex) {
        std::cerr << "internal error: " << ex.what() << '\n';
        return exit_failure;
    }
    return exit_usage;
}
