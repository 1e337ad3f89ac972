/**
 * @file ratfunc.hpp
 * @brief Reduced rational functions over MultiPoly, simultaneous
 *        substitution of variables by rational functions, and Möbius maps
 *        with denominator-clearing substitution into polynomials.
 *
 * Normal form: gcd(num, den) is constant and den is unit-normalized
 * (integer-primitive with positive leading coefficient in the canonical
 * order); a constant denominator is therefore exactly 1, so `is_polynomial`
 * is a structural test.  All values are immutable; operations are pure.
 */
#pragma once

#include <pvi/polyops.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace pvi {

class RatFunc {
  public:
    RatFunc() : num_(MultiPoly::constant(0)), den_(MultiPoly::constant(1)) {}
    RatFunc(const Rational& c)
        : num_(MultiPoly::constant(c)), den_(MultiPoly::constant(1)) {}
    RatFunc(long c) : RatFunc(Rational(c)) {}
    RatFunc(const MultiPoly& p) : num_(p), den_(MultiPoly::constant(1)) {}
    RatFunc(MultiPoly num, MultiPoly den)
        : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    static RatFunc var(const std::string& name) {
        return RatFunc(MultiPoly::var(name));
    }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const {
        return den_.is_constant();  // normalized constant den is exactly 1
    }
    bool is_constant() const { return num_.is_constant() && is_polynomial(); }

    /// Value of a constant rational function.
    Rational rational_value() const {
        if (!is_constant()) throw AlgebraError("RatFunc: not a constant");
        return num_.constant_value();
    }

    /// Numerator as a polynomial; requires a polynomial value.
    const MultiPoly& as_poly() const {
        if (!is_polynomial()) throw AlgebraError("RatFunc: not a polynomial");
        return num_;
    }

    bool operator==(const RatFunc& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc operator-() const {
        RatFunc r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    RatFunc operator+(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator-(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator*(const RatFunc& o) const {
        return RatFunc(num_ * o.num_, den_ * o.den_);
    }
    RatFunc operator/(const RatFunc& o) const {
        if (o.is_zero()) throw AlgebraError("RatFunc: division by zero");
        return RatFunc(num_ * o.den_, den_ * o.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc pow(int e) const {
        if (e < 0) return RatFunc(Rational(1)) / pow(-e);
        RatFunc acc(Rational(1));
        RatFunc base = *this;
        int k = e;
        while (k > 0) {
            if (k & 1) acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }

    /// d/dvar by the quotient rule, reduced.
    RatFunc derivative(const std::string& var) const {
        return RatFunc(
            num_.derivative(var) * den_ - num_ * den_.derivative(var),
            den_ * den_);
    }

    /// Simultaneous substitution of variables by rational functions.
    RatFunc substitute_many(const std::map<std::string, RatFunc>& repl) const;

    std::string str() const {
        if (is_polynomial()) return num_.str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }

  private:
    MultiPoly num_, den_;

    void normalize() {
        if (den_.is_zero()) throw AlgebraError("RatFunc: zero denominator");
        if (num_.is_zero()) {
            den_ = MultiPoly::constant(1);
            return;
        }
        const MultiPoly g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = exact_divide(num_, g);
            den_ = exact_divide(den_, g);
        }
        Rational unit = den_.rational_content();
        if (den_.leading_rational() < 0) unit = -unit;
        num_ = num_ / unit;
        den_ = den_ / unit;
    }
};

inline RatFunc operator+(const Rational& c, const RatFunc& f) {
    return RatFunc(c) + f;
}
inline RatFunc operator*(const Rational& c, const RatFunc& f) {
    return RatFunc(c) * f;
}

/**
 * Substitute, simultaneously, every variable of `p` that appears in `repl`
 * by its rational-function image; untouched variables stay themselves.
 */
inline RatFunc substitute_all(const MultiPoly& p,
                              const std::map<std::string, RatFunc>& repl) {
    std::string pivot;
    for (const auto& v : p.variable_set())
        if (repl.count(v)) {
            pivot = v;
            break;
        }
    if (pivot.empty()) return RatFunc(p);
    const RatFunc& image = repl.at(pivot);
    auto univ = p.as_univariate(pivot);
    RatFunc acc;
    int last = univ.rbegin()->first;
    for (auto it = univ.rbegin(); it != univ.rend(); ++it) {
        acc = acc * image.pow(last - it->first) + substitute_all(it->second, repl);
        last = it->first;
    }
    return acc * image.pow(last);
}

inline RatFunc RatFunc::substitute_many(
    const std::map<std::string, RatFunc>& repl) const {
    const RatFunc top = substitute_all(num_, repl);
    const RatFunc bottom = substitute_all(den_, repl);
    if (bottom.is_zero())
        throw AlgebraError("degenerate substitution");
    return top / bottom;
}

/**
 * Fractional-linear map  x ↦ (a·x + b) / (c·x + d)  whose coefficients are
 * rational functions in auxiliary parameters (never in the mapped variable).
 */
struct MobiusMap {
    RatFunc a, b, c, d;

    MobiusMap(RatFunc a_, RatFunc b_, RatFunc c_, RatFunc d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
        if ((a * d - b * c).is_zero())
            throw AlgebraError("MobiusMap: degenerate (ad - bc = 0)");
    }

    static MobiusMap identity() {
        return MobiusMap(RatFunc(Rational(1)), RatFunc(), RatFunc(),
                         RatFunc(Rational(1)));
    }

    /// The image of `var` as a rational function.
    RatFunc applied_to(const std::string& var) const {
        const RatFunc x = RatFunc::var(var);
        return (a * x + b) / (c * x + d);
    }

    MobiusMap inverse() const { return MobiusMap(d, -b, -c, a); }
};

/**
 * Substitute var := (a·var + b)/(c·var + d) into p, clear denominators by
 * the minimal power and return the primitive part (unit-normalized).
 */
inline MultiPoly mobius_substitute(const MultiPoly& p, const std::string& var,
                                   const MobiusMap& m) {
    if (p.degree(var) == 0) return p.unit_normalized();
    std::map<std::string, RatFunc> repl{{var, m.applied_to(var)}};
    return substitute_all(p, repl).num().unit_normalized();
}

}  // namespace pvi
