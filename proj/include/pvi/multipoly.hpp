/**
 * @file multipoly.hpp
 * @brief Sparse exact multivariate polynomials over arbitrary-precision
 *        rationals: the universal carrier for every curve, invariant and
 *        operator coefficient in the engine.
 *
 * Representation: an ordered list of variable names (canonical global order)
 * plus a map from exponent vectors to nonzero rational coefficients.  All
 * values are immutable in spirit: every operation returns a fresh polynomial
 * in canonical form (no zero terms, no unused variables), so structural
 * equality is semantic equality.
 */
#pragma once

#include <pvi/rational.hpp>

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace pvi {

/**
 * Canonical variable order: the geometry variables first in a fixed sequence,
 * then everything else alphabetically.  Deterministic serialization and all
 * term-order-dependent normalizations rest on this.
 */
inline int var_rank(const std::string& name) {
    static const char* kFixed[] = {"lambda", "t", "a", "b", "z",
                                   "b0",     "b1", "b2", "b3"};
    for (int i = 0; i < 9; ++i)
        if (name == kFixed[i]) return i;
    return 9;
}

inline bool var_less(const std::string& lhs, const std::string& rhs) {
    int rl = var_rank(lhs), rr = var_rank(rhs);
    if (rl != rr) return rl < rr;
    return lhs < rhs;
}

class MultiPoly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rational>;

    MultiPoly() = default;

    static MultiPoly constant(const Rational& c) {
        MultiPoly p;
        if (c != 0) p.terms_[{}] = c;
        return p;
    }
    static MultiPoly constant(long c) { return constant(Rational(c)); }

    static MultiPoly var(const std::string& name, int exp = 1) {
        assert(exp >= 0);
        if (exp == 0) return constant(1);
        MultiPoly p;
        p.vars_ = {name};
        p.terms_[{exp}] = 1;
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return vars_.empty(); }

    /// Value of a constant polynomial (zero polynomial included).
    Rational constant_value() const {
        if (terms_.empty()) return 0;
        assert(is_constant());
        return terms_.begin()->second;
    }

    size_t term_count() const { return terms_.size(); }

    bool operator==(const MultiPoly& other) const {
        return vars_ == other.vars_ && terms_ == other.terms_;
    }
    bool operator!=(const MultiPoly& other) const { return !(*this == other); }

    /// Deterministic strict order (for use as a map key); not a monomial order.
    bool operator<(const MultiPoly& other) const {
        if (vars_ != other.vars_) return vars_ < other.vars_;
        return terms_ < other.terms_;
    }

    int degree(const std::string& name) const {
        int idx = var_index(name);
        if (idx < 0) return 0;
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
        return d;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    /// Index of a variable in vars_, or -1.
    int var_index(const std::string& name) const {
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return static_cast<int>(i);
        return -1;
    }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    MultiPoly operator+(const MultiPoly& other) const {
        auto [va, ta, tb] = aligned(*this, other);
        MultiPoly r;
        r.vars_ = std::move(va);
        r.terms_ = std::move(ta);
        for (auto& [e, c] : tb) {
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                r.terms_.emplace(e, c);
            } else {
                it->second += c;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
        r.compress();
        return r;
    }

    MultiPoly operator-(const MultiPoly& other) const { return *this + (-other); }

    MultiPoly operator*(const MultiPoly& other) const {
        if (is_zero() || other.is_zero()) return MultiPoly();
        auto [va, ta, tb] = aligned(*this, other);
        MultiPoly r;
        r.vars_ = std::move(va);
        const size_t n = r.vars_.size();
        for (const auto& [ea, ca] : ta) {
            for (const auto& [eb, cb] : tb) {
                Exponents e(n);
                for (size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
                auto [it, fresh] = r.terms_.emplace(std::move(e), ca * cb);
                if (!fresh) {
                    it->second += ca * cb;
                    if (it->second == 0) r.terms_.erase(it);
                }
            }
        }
        r.compress();
        return r;
    }

    MultiPoly operator*(const Rational& c) const {
        if (c == 0) return MultiPoly();
        MultiPoly r = *this;
        for (auto& [e, coeff] : r.terms_) coeff *= c;
        return r;
    }

    MultiPoly operator/(const Rational& c) const {
        if (c == 0) throw AlgebraError("MultiPoly: division by zero constant");
        return *this * (Rational(1) / c);
    }

    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly pow(int e) const {
        if (e < 0) throw AlgebraError("MultiPoly::pow: negative exponent");
        MultiPoly result = constant(1);
        MultiPoly base = *this;
        unsigned n = static_cast<unsigned>(e);
        while (n) {
            if (n & 1u) result = result * base;
            base = base * base;
            n >>= 1u;
        }
        return result;
    }

    MultiPoly derivative(const std::string& name) const {
        int idx = var_index(name);
        if (idx < 0) return MultiPoly();
        MultiPoly r;
        r.vars_ = vars_;
        for (const auto& [e, c] : terms_) {
            if (e[idx] == 0) continue;
            Exponents ne = e;
            Rational nc = c * ne[idx];
            ne[idx] -= 1;
            r.terms_[ne] = nc;
        }
        r.compress();
        return r;
    }

    /// View as univariate in `name`: exponent -> coefficient polynomial.
    std::map<int, MultiPoly> as_univariate(const std::string& name) const {
        std::map<int, MultiPoly> result;
        int idx = var_index(name);
        if (idx < 0) {
            if (!is_zero()) result[0] = *this;
            return result;
        }
        for (const auto& [e, c] : terms_) {
            Exponents rest;
            rest.reserve(e.size() - 1);
            for (size_t i = 0; i < e.size(); ++i)
                if (static_cast<int>(i) != idx) rest.push_back(e[i]);
            MultiPoly& bucket = result[e[idx]];
            if (bucket.vars_.empty() && bucket.terms_.empty()) {
                bucket.vars_.reserve(vars_.size() - 1);
                for (size_t i = 0; i < vars_.size(); ++i)
                    if (static_cast<int>(i) != idx) bucket.vars_.push_back(vars_[i]);
            }
            bucket.terms_[rest] = c;
        }
        for (auto& [k, p] : result) p.compress();
        return result;
    }

    /// Rebuild from a univariate view.
    static MultiPoly from_univariate(const std::string& name,
                                     const std::map<int, MultiPoly>& coeffs) {
        MultiPoly x = var(name);
        MultiPoly r;
        // Horner from the top exponent down.
        int prev = -1;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
            if (prev < 0) {
                r = it->second;
            } else {
                r = r * x.pow(prev - it->first) + it->second;
            }
            prev = it->first;
        }
        if (prev > 0) r = r * x.pow(prev);
        return r;
    }

    /// Coefficient of name^k (a polynomial in the remaining variables).
    MultiPoly coeff_of(const std::string& name, int k) const {
        auto uni = as_univariate(name);
        auto it = uni.find(k);
        return it == uni.end() ? MultiPoly() : it->second;
    }

    /// Leading coefficient with respect to `name`.
    MultiPoly leading_coeff(const std::string& name) const {
        auto uni = as_univariate(name);
        if (uni.empty()) return MultiPoly();
        return uni.rbegin()->second;
    }

    /// Substitute a variable by a polynomial (Horner evaluation).
    MultiPoly substitute(const std::string& name, const MultiPoly& value) const {
        if (var_index(name) < 0) return *this;
        auto uni = as_univariate(name);
        MultiPoly r;
        int prev = -1;
        for (auto it = uni.rbegin(); it != uni.rend(); ++it) {
            if (prev < 0) {
                r = it->second;
            } else {
                r = r * value.pow(prev - it->first) + it->second;
            }
            prev = it->first;
        }
        if (prev > 0) r = r * value.pow(prev);
        return r;
    }

    MultiPoly substitute(const std::string& name, const Rational& value) const {
        return substitute(name, constant(value));
    }

    /**
     * Substitute name := num/den and clear denominators by den^deg(name):
     * returns sum_k coeff_k * num^k * den^(deg-k) along with the power used.
     */
    std::pair<MultiPoly, int> substitute_cleared(const std::string& name,
                                                 const MultiPoly& num,
                                                 const MultiPoly& den) const {
        if (den.is_zero())
            throw AlgebraError("degenerate substitution: denominator is zero");
        int d = degree(name);
        if (d == 0) return {*this, 0};
        auto uni = as_univariate(name);
        MultiPoly r;
        for (const auto& [k, c] : uni)
            r += c * num.pow(k) * den.pow(d - k);
        return {r, d};
    }

    /// All variables that occur (they are exactly vars_ in canonical form).
    std::set<std::string> variable_set() const {
        return std::set<std::string>(vars_.begin(), vars_.end());
    }

    /// Rename a variable (target must not already occur).
    MultiPoly rename(const std::string& from, const std::string& to) const {
        if (var_index(from) < 0) return *this;
        if (var_index(to) >= 0)
            throw AlgebraError("rename: target variable already present");
        return substitute(from, var(to));
    }

    /**
     * Leading term under descending lexicographic order on the canonical
     * variable sequence: (exponents, coefficient).
     */
    std::pair<Exponents, Rational> leading_term() const {
        if (terms_.empty()) throw AlgebraError("leading_term of zero polynomial");
        auto it = std::prev(terms_.end());
        return {it->first, it->second};
    }

    Rational leading_rational() const { return leading_term().second; }

    /**
     * Positive rational c such that (*this)/c has coprime integer
     * coefficients; zero polynomial yields 1.
     */
    Rational rational_content() const {
        if (terms_.empty()) return 1;
        Int num_gcd = 0, den_lcm = 1;
        for (const auto& [e, c] : terms_) {
            num_gcd = boost::multiprecision::gcd(num_gcd,
                                                 Int(numerator(c)));
            Int d(denominator(c));
            den_lcm = den_lcm / boost::multiprecision::gcd(den_lcm, d) * d;
        }
        if (num_gcd == 0) num_gcd = 1;
        return Rational(num_gcd, den_lcm);
    }

    /**
     * Canonical unit normalization: integer-primitive with positive leading
     * coefficient.  "Equal up to unit" is equality of these normal forms.
     */
    MultiPoly unit_normalized() const {
        if (terms_.empty()) return *this;
        Rational c = rational_content();
        if (leading_rational() < 0) c = -c;
        return *this / c;
    }

    /// Canonical text form: `c * v1^e1*v2^e2` terms joined by ` + `,
    /// descending lexicographic on the canonical variable order.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!first) out << " + ";
            first = false;
            out << it->second.str();
            std::string mono = monomial_str(it->first);
            if (!mono.empty()) out << " * " << mono;
        }
        return out.str();
    }

    /// Build from explicit data (vars must be canonically sorted); normalizes.
    static MultiPoly from_terms(std::vector<std::string> vars, TermMap terms) {
        MultiPoly p;
        p.vars_ = std::move(vars);
        p.terms_ = std::move(terms);
        assert(std::is_sorted(p.vars_.begin(), p.vars_.end(), var_less));
        p.compress();
        return p;
    }

    /// Public view of the variable-union alignment used by binary operations.
    static std::tuple<std::vector<std::string>, TermMap, TermMap> align_pair(
        const MultiPoly& p, const MultiPoly& q) {
        return aligned(p, q);
    }

    /// Evaluate at a full rational point (missing vars default to 0).
    Rational evaluate(const std::map<std::string, Rational>& point) const {
        Rational acc = 0;
        for (const auto& [e, c] : terms_) {
            Rational term = c;
            for (size_t i = 0; i < vars_.size(); ++i) {
                if (e[i] == 0) continue;
                auto it = point.find(vars_[i]);
                Rational v = (it == point.end()) ? Rational(0) : it->second;
                term *= rat_pow(v, e[i]);
            }
            acc += term;
        }
        return acc;
    }

private:
    std::vector<std::string> vars_;
    TermMap terms_;

    std::string monomial_str(const Exponents& e) const {
        std::ostringstream out;
        bool first = true;
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            if (!first) out << "*";
            first = false;
            out << vars_[i];
            if (e[i] > 1) out << "^" << e[i];
        }
        return out.str();
    }

    /// Drop zero terms and unused variables; restore canonical form.
    void compress() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->second == 0)
                it = terms_.erase(it);
            else
                ++it;
        }
        if (terms_.empty()) {
            vars_.clear();
            return;
        }
        std::vector<bool> used(vars_.size(), false);
        for (const auto& [e, c] : terms_)
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0) used[i] = true;
        if (std::all_of(used.begin(), used.end(), [](bool u) { return u; }))
            return;
        std::vector<std::string> nv;
        for (size_t i = 0; i < vars_.size(); ++i)
            if (used[i]) nv.push_back(vars_[i]);
        TermMap nt;
        for (const auto& [e, c] : terms_) {
            Exponents ne;
            ne.reserve(nv.size());
            for (size_t i = 0; i < e.size(); ++i)
                if (used[i]) ne.push_back(e[i]);
            nt[std::move(ne)] = c;
        }
        vars_ = std::move(nv);
        terms_ = std::move(nt);
    }

    /// Align two polynomials on the union of their variables.
    static std::tuple<std::vector<std::string>, TermMap, TermMap> aligned(
        const MultiPoly& p, const MultiPoly& q) {
        if (p.vars_ == q.vars_) return {p.vars_, p.terms_, q.terms_};
        std::vector<std::string> merged;
        std::set_union(p.vars_.begin(), p.vars_.end(), q.vars_.begin(),
                       q.vars_.end(), std::back_inserter(merged), var_less);
        return {merged, remap(p, merged), remap(q, merged)};
    }

    static TermMap remap(const MultiPoly& p,
                         const std::vector<std::string>& target) {
        std::vector<int> where(p.vars_.size());
        for (size_t i = 0; i < p.vars_.size(); ++i) {
            auto it = std::lower_bound(target.begin(), target.end(), p.vars_[i],
                                       var_less);
            assert(it != target.end() && *it == p.vars_[i]);
            where[i] = static_cast<int>(it - target.begin());
        }
        TermMap out;
        for (const auto& [e, c] : p.terms_) {
            Exponents ne(target.size(), 0);
            for (size_t i = 0; i < e.size(); ++i) ne[where[i]] = e[i];
            out[std::move(ne)] = c;
        }
        return out;
    }
};

inline MultiPoly operator*(const Rational& c, const MultiPoly& p) { return p * c; }

inline MultiPoly operator+(const MultiPoly& p, const Rational& c) {
    return p + MultiPoly::constant(c);
}
inline MultiPoly operator-(const MultiPoly& p, const Rational& c) {
    return p - MultiPoly::constant(c);
}

/// Equality after unit normalization (projective equality of curves).
inline bool equal_up_to_unit(const MultiPoly& p, const MultiPoly& q) {
    if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
    return p.unit_normalized() == q.unit_normalized();
}

}  // namespace pvi
