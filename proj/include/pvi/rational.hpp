/**
 * @file rational.hpp
 * @brief Arbitrary-precision integers and rationals plus the small helpers
 *        (powers, exact square roots, parsing) the rest of the engine needs.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace pvi {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Error raised on violated preconditions of an algebraic operation.
class AlgebraError : public std::runtime_error {
public:
    explicit AlgebraError(const std::string& what) : std::runtime_error(what) {}
};

/// Recoverable signal: a division that was probed turned out to be inexact.
class NotDivisible : public std::runtime_error {
public:
    explicit NotDivisible(const std::string& what) : std::runtime_error(what) {}
};

inline Int int_pow(Int base, unsigned exp) {
    Int result = 1;
    while (exp) {
        if (exp & 1u) result *= base;
        base *= base;
        exp >>= 1u;
    }
    return result;
}

inline Rational rat_pow(const Rational& base, int exp) {
    if (exp < 0) {
        if (base == 0) throw AlgebraError("rat_pow: zero to a negative power");
        Rational inv = Rational(1) / base;
        return rat_pow(inv, -exp);
    }
    Rational result = 1;
    Rational b = base;
    unsigned e = static_cast<unsigned>(exp);
    while (e) {
        if (e & 1u) result *= b;
        b *= b;
        e >>= 1u;
    }
    return result;
}

/// Exact integer square root if the argument is a perfect square.
inline std::optional<Int> int_sqrt_exact(const Int& n) {
    if (n < 0) return std::nullopt;
    Int r = boost::multiprecision::sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

/// Exact rational square root if the argument is a perfect square.
inline std::optional<Rational> rat_sqrt_exact(const Rational& q) {
    if (q < 0) return std::nullopt;
    auto num = int_sqrt_exact(Int(numerator(q)));
    if (!num) return std::nullopt;
    auto den = int_sqrt_exact(Int(denominator(q)));
    if (!den) return std::nullopt;
    return Rational(*num, *den);
}

/// Exact rational n-th root if one exists (n >= 1).
inline std::optional<Rational> rat_nth_root_exact(const Rational& q, unsigned n) {
    if (n == 0) throw AlgebraError("rat_nth_root_exact: zeroth root");
    if (n == 1) return q;
    if (q < 0 && n % 2 == 0) return std::nullopt;
    auto root_int = [n](Int v) -> std::optional<Int> {
        bool neg = v < 0;
        if (neg) v = -v;
        if (v == 0) return Int(0);
        // Newton iteration on integers, then verify.
        Int r = 1;
        Int probe = v;
        while (probe > 1) { probe >>= n; r <<= 1; }
        for (int it = 0; it < 512 && r > 0; ++it) {
            Int rn = int_pow(r, n - 1);
            if (rn == 0) break;
            Int next = ((n - 1) * r + v / rn) / n;
            if (next >= r) break;
            r = next;
        }
        for (Int cand = (r > 2 ? r - 2 : Int(0)); cand <= r + 2; ++cand) {
            if (cand >= 0 && int_pow(cand, n) == v) return neg ? -cand : cand;
        }
        return std::nullopt;
    };
    auto num = root_int(Int(numerator(q)));
    if (!num) return std::nullopt;
    auto den = root_int(Int(denominator(q)));
    if (!den) return std::nullopt;
    return Rational(*num, *den);
}

/// Parse "p" or "p/q" (optional leading '-').
inline Rational parse_rational(const std::string& text) {
    try {
        return Rational(text);
    } catch (const std::exception&) {
        throw AlgebraError("parse_rational: cannot parse '" + text + "'");
    }
}

inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace pvi
