#pragma once

#include <stdexcept>
#include <string>

namespace fockcb {

/// Thrown when a caller violates a documented precondition (bad modulus,
/// residue out of range, non-k-empty input, malformed partition text, ...).
class precondition_error : public std::invalid_argument {
public:
    explicit precondition_error(const std::string& what)
        : std::invalid_argument(what) {}
};

/// Thrown when an internal consistency check fails. These indicate a bug in
/// the engine, never bad input.
class engine_error : public std::logic_error {
public:
    explicit engine_error(const std::string& what) : std::logic_error(what) {}
};

namespace detail {

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw precondition_error(msg);
}

inline void check_modulus(int e) {
    require(e >= 2, "modulus e must be at least 2, got " + std::to_string(e));
}

inline void check_residue(int e, int k) {
    check_modulus(e);
    require(k >= 0 && k < e, "residue k must lie in [0, " + std::to_string(e) +
                                 "), got " + std::to_string(k));
}

/// Least non-negative residue of a modulo e.
inline int mod(long long a, int e) {
    long long r = a % e;
    return static_cast<int>(r < 0 ? r + e : r);
}

/// Floor division for a possibly negative numerator and positive divisor.
inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace detail
}  // namespace fockcb
