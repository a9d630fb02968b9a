#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fockcb/error.hpp"

namespace fockcb {

using Integer = boost::multiprecision::cpp_int;

/// Exact Laurent polynomial in q with arbitrary-precision integer
/// coefficients.
///
/// Stored densely from the lowest exponent: `coeffs_[i]` is the coefficient
/// of q^(low_ + i). The first and last stored coefficients are always
/// nonzero, so the zero polynomial is the empty vector and equality is
/// structural.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(int c) : LaurentPoly(Integer(c)) {}  // NOLINT: constants convert implicitly
    LaurentPoly(Integer c) {                          // NOLINT
        if (c != 0) coeffs_.push_back(std::move(c));
    }

    static LaurentPoly monomial(Integer c, int exponent) {
        LaurentPoly p(std::move(c));
        p.low_ = p.coeffs_.empty() ? 0 : exponent;
        return p;
    }
    /// q^exponent
    static LaurentPoly q(int exponent = 1) { return monomial(1, exponent); }

    /// Builds from (exponent, coefficient) terms in any order; repeated
    /// exponents are summed.
    static LaurentPoly from_terms(const std::vector<std::pair<int, Integer>>& terms) {
        LaurentPoly p;
        for (const auto& [x, c] : terms) p += monomial(c, x);
        return p;
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int min_degree() const noexcept { return low_; }
    int max_degree() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }

    Integer coeff(int exponent) const {
        const long idx = static_cast<long>(exponent) - low_;
        if (idx < 0 || idx >= static_cast<long>(coeffs_.size())) return 0;
        return coeffs_[static_cast<std::size_t>(idx)];
    }

    /// Nonzero terms ascending by exponent.
    std::vector<std::pair<int, Integer>> terms() const {
        std::vector<std::pair<int, Integer>> out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
        return out;
    }

    std::size_t term_count() const {
        std::size_t n = 0;
        for (const auto& c : coeffs_) n += (c != 0);
        return n;
    }

    /// ±q^t with a unit coefficient.
    bool is_signed_monomial() const {
        return coeffs_.size() == 1 && (coeffs_[0] == 1 || coeffs_[0] == -1);
    }

    bool operator==(const LaurentPoly& o) const {
        return coeffs_ == o.coeffs_ && (coeffs_.empty() || low_ == o.low_);
    }

    LaurentPoly operator-() const {
        LaurentPoly r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) { return accumulate(o, false); }
    LaurentPoly& operator-=(const LaurentPoly& o) { return accumulate(o, true); }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        if (b.coeffs_.size() == 1) return a.scaled(b.coeffs_[0], b.low_);
        if (a.coeffs_.size() == 1) return b.scaled(a.coeffs_[0], a.low_);
        r.low_ = a.low_ + b.low_;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        r.normalize();
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    /// c * q^shift * this
    LaurentPoly scaled(const Integer& c, int shift) const {
        LaurentPoly r;
        if (c == 0 || is_zero()) return r;
        r.low_ = low_ + shift;
        r.coeffs_.reserve(coeffs_.size());
        for (const auto& x : coeffs_) r.coeffs_.push_back(x * c);
        return r;
    }

    LaurentPoly shifted(int shift) const {
        LaurentPoly r(*this);
        if (!r.is_zero()) r.low_ += shift;
        return r;
    }

    /// q -> q^{-1}
    LaurentPoly bar() const {
        LaurentPoly r;
        if (is_zero()) return r;
        r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
        r.low_ = -max_degree();
        return r;
    }

    /// Terms with exponent >= 1.
    LaurentPoly positive_part() const {
        LaurentPoly r;
        for (int x = std::max(1, low_); x <= max_degree(); ++x) r += monomial(coeff(x), x);
        return r;
    }

    /// Value at q = 1.
    Integer at_one() const {
        Integer s = 0;
        for (const auto& c : coeffs_) s += c;
        return s;
    }

    /// Canonical text form, ascending by exponent: "-q^-2 + 1 + 2q^3".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [x, c] : terms()) {
            Integer mag = c < 0 ? Integer(-c) : c;
            if (first) {
                if (c < 0) s += '-';
            } else {
                s += c < 0 ? " - " : " + ";
            }
            first = false;
            if (x == 0) {
                s += mag.str();
                continue;
            }
            if (mag != 1) s += mag.str();
            s += 'q';
            if (x != 1) s += '^' + std::to_string(x);
        }
        return s;
    }

private:
    LaurentPoly& accumulate(const LaurentPoly& o, bool subtract) {
        if (o.is_zero()) return *this;
        if (is_zero()) {
            *this = subtract ? -o : o;
            return *this;
        }
        const int lo = std::min(low_, o.low_);
        const int hi = std::max(max_degree(), o.max_degree());
        if (lo < low_) {
            coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Integer(0));
            low_ = lo;
        }
        coeffs_.resize(static_cast<std::size_t>(hi - lo + 1), Integer(0));
        const std::size_t off = static_cast<std::size_t>(o.low_ - low_);
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            if (subtract)
                coeffs_[off + i] -= o.coeffs_[i];
            else
                coeffs_[off + i] += o.coeffs_[i];
        }
        normalize();
        return *this;
    }

    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
        std::size_t lead = 0;
        while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
        if (lead == coeffs_.size()) {
            coeffs_.clear();
            low_ = 0;
            return;
        }
        if (lead) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
            low_ += static_cast<int>(lead);
        }
    }

    int low_ = 0;
    std::vector<Integer> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
    return os << p.to_string();
}

inline LaurentPoly bar(const LaurentPoly& p) { return p.bar(); }

/// Exact quotient p / m. Throws engine_error if m does not divide p.
inline LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& m) {
    if (m.is_zero()) throw precondition_error("division by the zero polynomial");
    if (p.is_zero()) return {};
    if (m.term_count() == 1) {
        const Integer c = m.coeff(m.min_degree());
        std::vector<std::pair<int, Integer>> out;
        for (const auto& [x, a] : p.terms()) {
            if (a % c != 0) throw engine_error("non-exact division of " + p.to_string() +
                                               " by " + m.to_string());
            out.emplace_back(x - m.min_degree(), a / c);
        }
        return LaurentPoly::from_terms(out);
    }
    // Schoolbook division from the top degree down.
    LaurentPoly rem = p;
    LaurentPoly quot;
    const int mtop = m.max_degree();
    const Integer lead = m.coeff(mtop);
    while (!rem.is_zero()) {
        const int rtop = rem.max_degree();
        if (rem.max_degree() - rem.min_degree() < mtop - m.min_degree())
            throw engine_error("non-exact division of " + p.to_string() + " by " +
                               m.to_string());
        const Integer c = rem.coeff(rtop);
        if (c % lead != 0)
            throw engine_error("non-exact division of " + p.to_string() + " by " +
                               m.to_string());
        LaurentPoly t = LaurentPoly::monomial(c / lead, rtop - mtop);
        quot += t;
        rem -= t * m;
    }
    return quot;
}

/// The unique f divisible by q with f - bar(f) = g. Requires bar(g) = -g.
inline LaurentPoly solve_bar_difference(const LaurentPoly& g) {
    if (!(g.bar() == -g))
        throw precondition_error("solve_bar_difference: input " + g.to_string() +
                                 " is not bar-antisymmetric");
    return g.positive_part();
}

/// Balanced quantum integer [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}.
inline LaurentPoly quantum_integer(int n) {
    detail::require(n >= 0, "quantum_integer requires n >= 0");
    LaurentPoly p;
    for (int i = 0; i < n; ++i) p += LaurentPoly::q(n - 1 - 2 * i);
    return p;
}

inline LaurentPoly quantum_factorial(int n) {
    detail::require(n >= 0, "quantum_factorial requires n >= 0");
    LaurentPoly p = 1;
    for (int i = 2; i <= n; ++i) p *= quantum_integer(i);
    return p;
}

}  // namespace fockcb
