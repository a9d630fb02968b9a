#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "fockcb/error.hpp"

namespace fockcb {

/// An integer partition stored as its positive parts, weakly decreasing.
/// Trailing zeros are never stored; the empty vector is the empty partition.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Accepts trailing zeros (they are stripped) but rejects increases and
    /// negative parts.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            detail::require(parts_[i] > 0, "partition parts must be positive");
            detail::require(i == 0 || parts_[i - 1] >= parts_[i],
                            "partition parts must be weakly decreasing");
        }
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    bool empty() const noexcept { return parts_.empty(); }

    /// Number of positive parts, i.e. the first column length.
    int length() const noexcept { return static_cast<int>(parts_.size()); }

    /// |λ|
    int size() const noexcept {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    /// 1-based part access; zero beyond the last positive part.
    int operator()(int i) const noexcept {
        return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    int first() const noexcept { return (*this)(1); }

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;

    /// Comma separated parts, `0` for the empty partition.
    std::string to_string() const {
        if (parts_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    /// Inverse of to_string. Whitespace around tokens is tolerated.
    static Partition parse(std::string_view text) {
        auto trim = [](std::string_view v) {
            while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
            while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
            return v;
        };
        text = trim(text);
        const std::string hint =
            " (expected comma-separated weakly decreasing positive integers, or 0 for the "
            "empty partition)";
        detail::require(!text.empty(), "empty partition string" + hint);
        if (text == "0") return {};
        std::vector<int> parts;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t comma = text.find(',', pos);
            if (comma == std::string_view::npos) comma = text.size();
            std::string_view tok = trim(text.substr(pos, comma - pos));
            detail::require(!tok.empty() && tok.size() <= 9 &&
                                std::all_of(tok.begin(), tok.end(),
                                            [](char c) { return c >= '0' && c <= '9'; }),
                            "malformed partition '" + std::string(text) + "'" + hint);
            int v = std::stoi(std::string(tok));
            detail::require(v > 0, "partition '" + std::string(text) +
                                       "' has a non-positive part" + hint);
            detail::require(parts.empty() || parts.back() >= v,
                            "partition '" + std::string(text) + "' is not weakly decreasing" +
                                hint);
            parts.push_back(v);
            pos = comma + 1;
        }
        return Partition(std::move(parts));
    }

private:
    std::vector<int> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << '(' << p.to_string() << ')';
}

/// A node (row, col) of a Young diagram together with its residue.
struct Node {
    int row = 1;
    int col = 1;
    int residue = 0;

    auto operator<=>(const Node&) const = default;
};

enum class NodeKind { addable, removable };

inline Partition conjugate(const Partition& la) {
    std::vector<int> out(static_cast<std::size_t>(la.first()), 0);
    for (int p : la.parts())
        for (int i = 0; i < p; ++i) ++out[static_cast<std::size_t>(i)];
    return Partition(std::move(out));
}

inline bool is_e_regular(const Partition& la, int e) {
    detail::check_modulus(e);
    for (int i = 1; i + e - 1 <= la.length(); ++i)
        if (la(i) == la(i + e - 1)) return false;
    return true;
}

inline bool is_e_restricted(const Partition& la, int e) {
    detail::check_modulus(e);
    for (int i = 1; i <= la.length(); ++i)
        if (la(i) - la(i + 1) >= e) return false;
    return true;
}

inline int residue(int row, int col, int e) { return detail::mod(col - row, e); }

/// Addable or removable nodes of residue k, ordered top to bottom.
inline std::vector<Node> nodes_by_residue(const Partition& la, int e, int k, NodeKind kind) {
    detail::check_residue(e, k);
    std::vector<Node> out;
    const int rows = la.length();
    if (kind == NodeKind::addable) {
        for (int i = 1; i <= rows + 1; ++i) {
            if (i == 1 || la(i - 1) > la(i)) {
                const int col = la(i) + 1;
                if (residue(i, col, e) == k) out.push_back({i, col, k});
            }
        }
    } else {
        for (int i = 1; i <= rows; ++i) {
            if (la(i) > la(i + 1)) {
                const int col = la(i);
                if (residue(i, col, e) == k) out.push_back({i, col, k});
            }
        }
    }
    return out;
}

/// All addable or removable nodes regardless of residue, top to bottom.
inline std::vector<Node> all_nodes(const Partition& la, int e, NodeKind kind) {
    std::vector<Node> out;
    for (int k = 0; k < e; ++k) {
        auto part = nodes_by_residue(la, e, k, kind);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Adds a set of nodes simultaneously. Each node must be addable to the
/// partition obtained from the previous ones, in some order; in practice the
/// nodes must be pairwise distinct addable nodes of λ.
inline Partition add_nodes(const Partition& la, const std::vector<Node>& nodes) {
    std::vector<int> rows(la.parts());
    std::vector<Node> sorted(nodes);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const Node& n = sorted[i];
        detail::require(n.row >= 1 && n.col >= 1, "node coordinates must be positive");
        detail::require(i == 0 || sorted[i - 1].row != n.row,
                        "two nodes in the same row cannot be added at once");
        detail::require(la(n.row) + 1 == n.col, "node (" + std::to_string(n.row) + "," +
                                                    std::to_string(n.col) +
                                                    ") is not addable");
        detail::require(n.row == 1 || la(n.row - 1) >= n.col,
                        "node (" + std::to_string(n.row) + "," + std::to_string(n.col) +
                            ") is not addable");
    }
    for (const Node& n : sorted) {
        if (static_cast<int>(rows.size()) < n.row) rows.resize(static_cast<std::size_t>(n.row), 0);
        rows[static_cast<std::size_t>(n.row - 1)] = n.col;
    }
    return Partition(std::move(rows));
}

/// Removes a set of removable nodes of λ.
inline Partition remove_nodes(const Partition& la, const std::vector<Node>& nodes) {
    std::vector<int> rows(la.parts());
    for (const Node& n : nodes) {
        detail::require(la(n.row) == n.col && la(n.row + 1) < n.col,
                        "node (" + std::to_string(n.row) + "," + std::to_string(n.col) +
                            ") is not removable");
        rows[static_cast<std::size_t>(n.row - 1)] = n.col - 1;
    }
    return Partition(std::move(rows));
}

/// Calls f on every partition of n, in reverse lexicographic order.
template <class F>
void for_each_partition(int n, F&& f) {
    if (n < 0) return;
    if (n == 0) {
        f(Partition{});
        return;
    }
    std::vector<int> a{n};
    for (;;) {
        f(Partition(a));
        // next partition in reverse lex order
        int rem = 0;
        while (!a.empty() && a.back() == 1) {
            a.pop_back();
            ++rem;
        }
        if (a.empty()) return;
        int v = --a.back();
        ++rem;
        while (rem > v) {
            a.push_back(v);
            rem -= v;
        }
        if (rem > 0) a.push_back(rem);
    }
}

inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

}  // namespace fockcb

template <>
struct std::hash<fockcb::Partition> {
    std::size_t operator()(const fockcb::Partition& p) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (int v : p.parts()) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ULL;
        return h;
    }
};
