#pragma once

// JSON encodings (schema version 1). A polynomial is a list of
// [exponent, coefficient] pairs in increasing exponent order; coefficients
// outside the int64 range are written as decimal strings.

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fockcb/abacus.hpp"
#include "fockcb/blocks.hpp"
#include "fockcb/canonical.hpp"
#include "fockcb/laurent.hpp"
#include "fockcb/mullineux.hpp"
#include "fockcb/partition.hpp"
#include "fockcb/verify.hpp"

namespace fockcb::io {

using json = nlohmann::json;

inline constexpr int schema_version = 1;

inline json to_json(const Partition& p) { return p.parts(); }

inline Partition partition_from_json(const json& j) { return Partition(j.get<std::vector<int>>()); }

inline json to_json(const Integer& c) {
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(c);
    return c.str();
}

inline Integer integer_from_json(const json& j) {
    if (j.is_string()) return Integer(j.get<std::string>());
    return Integer(j.get<std::int64_t>());
}

inline json to_json(const LaurentPoly& p) {
    json terms = json::array();
    for (const auto& [x, c] : p.terms()) terms.push_back(json::array({x, to_json(c)}));
    return terms;
}

inline LaurentPoly poly_from_json(const json& j) {
    std::vector<std::pair<int, Integer>> terms;
    for (const auto& t : j) terms.emplace_back(t.at(0).get<int>(), integer_from_json(t.at(1)));
    return LaurentPoly::from_terms(terms);
}

inline json to_json(const BetaSet& b) { return {{"r", b.r}, {"beads", b.entries}}; }

inline BetaSet beta_set_from_json(const json& j) {
    return BetaSet{j.at("r").get<int>(), j.at("beads").get<std::vector<int>>()};
}

inline json to_json(const BlockId& b) { return {{"e", b.e}, {"core", to_json(b.core)}, {"weight", b.weight}}; }

inline BlockId block_from_json(const json& j) {
    return {j.at("e").get<int>(), partition_from_json(j.at("core")), j.at("weight").get<int>()};
}

inline json to_json(const FockVector& v) {
    json out = json::array();
    for (const auto& [la, c] : v) out.push_back({{"partition", to_json(la)}, {"coeff", to_json(c)}});
    return out;
}

inline FockVector fock_vector_from_json(const json& j) {
    FockVector v;
    for (const auto& t : j) v.emplace(partition_from_json(t.at("partition")), poly_from_json(t.at("coeff")));
    return v;
}

/// Rows and columns are indexed by `partitions`.
struct PolyTable {
    BlockId block;
    std::vector<Partition> partitions;
    PolyMatrix entries;

    bool operator==(const PolyTable& o) const {
        return block == o.block && partitions == o.partitions && entries == o.entries;
    }
};

inline json to_json(const PolyTable& t) {
    json rows = json::array();
    for (const auto& row : t.entries) {
        json r = json::array();
        for (const auto& x : row) r.push_back(to_json(x));
        rows.push_back(std::move(r));
    }
    json parts = json::array();
    for (const auto& p : t.partitions) parts.push_back(to_json(p));
    return {{"block", to_json(t.block)}, {"partitions", parts}, {"entries", rows}};
}

inline PolyTable poly_table_from_json(const json& j) {
    PolyTable t;
    t.block = block_from_json(j.at("block"));
    for (const auto& p : j.at("partitions")) t.partitions.push_back(partition_from_json(p));
    for (const auto& row : j.at("entries")) {
        std::vector<LaurentPoly> r;
        for (const auto& x : row) r.push_back(poly_from_json(x));
        t.entries.push_back(std::move(r));
    }
    return t;
}

inline json to_json(const RimStrip& s) {
    json pairs = json::array();
    for (auto [b, c] : s.pairs) pairs.push_back(json::array({b, c}));
    return {{"r", s.r}, {"pairs", pairs}, {"rim", s.rim_length}, {"result", to_json(s.result)}};
}

inline json to_json(const SuiteReport& r) {
    json ranges = json::object();
    for (const auto& [k, v] : r.ranges) ranges[k] = v;
    return {{"suite", r.name},          {"statement", r.statement}, {"ranges", ranges},
            {"cases", r.cases},         {"failure_count", r.failure_count},
            {"failures", r.failures},   {"notes", r.notes},
            {"seconds", r.seconds},     {"passed", r.passed()}};
}

inline SuiteReport suite_report_from_json(const json& j) {
    SuiteReport r;
    r.name = j.at("suite").get<std::string>();
    r.statement = j.at("statement").get<std::string>();
    for (const auto& [k, v] : j.at("ranges").items()) r.ranges.emplace_back(k, v.get<std::string>());
    r.cases = j.at("cases").get<std::uint64_t>();
    r.failure_count = j.at("failure_count").get<std::uint64_t>();
    r.failures = j.at("failures").get<std::vector<std::string>>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    r.seconds = j.at("seconds").get<double>();
    return r;
}

inline json to_json(const DSetResult& d) {
    json reps = json::array();
    for (const auto& b : d.representatives) reps.push_back(to_json(b));
    json values = json::array();
    for (const auto& v : d.values) values.push_back(to_json(v));
    return {{"e", d.e},
            {"weight", d.weight},
            {"max_core_size", d.max_core_size},
            {"strategy", d.strategy},
            {"representatives", reps},
            {"values", values},
            {"seconds", d.seconds}};
}

/// Adds the schema version to a top-level payload.
inline json envelope(std::string kind, json payload) {
    return {{"schema_version", schema_version}, {"kind", std::move(kind)}, {"data", std::move(payload)}};
}

}  // namespace fockcb::io
