#pragma once
/**
 * Painlevé VI residue oracle.
 *
 * A plane curve P(λ,t) = 0 defines (branches of) an algebraic function λ(t).
 * This header decides, by exact polynomial arithmetic, whether every branch
 * satisfies the Painlevé VI equation with parameter quadruple
 * α = (α₀,α₁,α₂,α₃):
 *
 *   λ″ = ½(1/λ + 1/(λ−1) + 1/(λ−t))·(λ′)²
 *        − (1/t + 1/(t−1) + 1/(λ−t))·λ′
 *        + [λ(λ−1)(λ−t)/(t²(t−1)²)]·
 *          [α₀ − α₁·t/λ² + α₂·(t−1)/(λ−1)² + (½−α₃)·t(t−1)/(λ−t)²]
 *
 * and solves for the full affine subspace of quadruples α that work.
 * Everything is exact; curves may carry rational parameters (a, b) in their
 * coefficients, in which case solving happens over the field ℚ(a,b) and the
 * answer is reported as the rational affine subspace swept by the parameters.
 */

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pvi/linalg.hpp"
#include "pvi/multipoly.hpp"
#include "pvi/polyops.hpp"
#include "pvi/rational.hpp"
#include "pvi/ratfunc.hpp"

namespace pvi {

/// Violation of the structural requirements a curve must satisfy before the
/// residue test is meaningful (squarefree in λ, no trivial component, ...).
class CurvePreconditionError : public AlgebraError {
public:
    explicit CurvePreconditionError(const std::string& what)
        : AlgebraError(what) {}
};

/**
 * An ordered quadruple of rational functions in the parameters (a, b).
 * Used both for equation parameters α and for curve coefficients β; the two
 * roles share all structure (the symmetry group permutes both the same way).
 */
struct Quadruple {
    std::array<RatFunc, 4> v{RatFunc(), RatFunc(), RatFunc(), RatFunc()};

    Quadruple() = default;
    Quadruple(RatFunc q0, RatFunc q1, RatFunc q2, RatFunc q3)
        : v{std::move(q0), std::move(q1), std::move(q2), std::move(q3)} {}

    static Quadruple of_rationals(const Rational& q0, const Rational& q1,
                                  const Rational& q2, const Rational& q3) {
        return Quadruple(RatFunc(q0), RatFunc(q1), RatFunc(q2), RatFunc(q3));
    }

    /// (prefix0, prefix1, prefix2, prefix3) as fresh symbolic variables.
    static Quadruple symbolic(const std::string& prefix) {
        return Quadruple(RatFunc::var(prefix + "0"), RatFunc::var(prefix + "1"),
                         RatFunc::var(prefix + "2"), RatFunc::var(prefix + "3"));
    }

    RatFunc& operator[](std::size_t i) { return v[i]; }
    const RatFunc& operator[](std::size_t i) const { return v[i]; }

    bool operator==(const Quadruple& o) const { return v == o.v; }
    bool operator!=(const Quadruple& o) const { return !(*this == o); }

    bool is_zero() const {
        return v[0].is_zero() && v[1].is_zero() && v[2].is_zero() &&
               v[3].is_zero();
    }

    bool is_rational() const {
        for (const auto& f : v)
            if (!f.is_constant()) return false;
        return true;
    }

    std::array<Rational, 4> rational_values() const {
        return {v[0].rational_value(), v[1].rational_value(),
                v[2].rational_value(), v[3].rational_value()};
    }

    std::string str() const {
        std::string out = "(";
        for (int i = 0; i < 4; ++i) {
            if (i) out += ", ";
            out += v[i].str();
        }
        return out + ")";
    }
};

/// Equation-parameter quadruple α = (α₀,α₁,α₂,α₃).
using AlphaQuadruple = Quadruple;
/// Curve-coefficient quadruple β = (β₀,β₁,β₂,β₃).
using BetaQuadruple = Quadruple;

/// The symbolic quadruple (b0, b1, b2, b3).
inline BetaQuadruple symbolic_beta() { return Quadruple::symbolic("b"); }

/**
 * The polynomial N(λ,t) whose vanishing locus is the candidate curve Γ_β:
 *
 *   N = β₀λ²(λ−1)²(λ−t)² − β₁t(λ−1)²(λ−t)²
 *       + β₂(t−1)λ²(λ−t)² − β₃t(t−1)λ²(λ−1)²
 *
 * Returned exactly as written (no normalization), so the boundary identities
 * N(0,t) = −β₁t³, N(1,t) = β₂(t−1)³, N(t,t) = −β₃t³(t−1)³ hold literally.
 */
inline MultiPoly build_curve_poly(const BetaQuadruple& beta) {
    if (beta.is_zero())
        throw AlgebraError("build_curve_poly: the zero quadruple has no curve");
    const MultiPoly lam = MultiPoly::var("lambda");
    const MultiPoly t = MultiPoly::var("t");
    const MultiPoly one = MultiPoly::constant(1);
    const MultiPoly l1 = lam - one;
    const MultiPoly lt = lam - t;
    const MultiPoly t1 = t - one;
    const RatFunc f0{lam * lam * l1 * l1 * lt * lt};
    const RatFunc f1{t * l1 * l1 * lt * lt};
    const RatFunc f2{t1 * lam * lam * lt * lt};
    const RatFunc f3{t * t1 * lam * lam * l1 * l1};
    const RatFunc n =
        beta[0] * f0 - beta[1] * f1 + beta[2] * f2 - beta[3] * f3;
    if (!n.is_polynomial())
        throw AlgebraError(
            "build_curve_poly: quadruple entries must be polynomial");
    return n.as_poly();
}

/// N(λ,t) with symbolic coefficients (b0, b1, b2, b3).
inline MultiPoly symbolic_curve_poly() {
    return build_curve_poly(symbolic_beta());
}

/**
 * Implicit derivatives of λ(t) along P(λ(t), t) = 0:
 *   λ′ = −P_t / P_λ,   λ″ = ∂λ′/∂t + λ′·∂λ′/∂λ.
 */
inline std::pair<RatFunc, RatFunc> implicit_derivatives(const MultiPoly& P) {
    if (P.degree("lambda") < 1)
        throw CurvePreconditionError(
            "implicit_derivatives: curve is constant in lambda");
    const RatFunc pl{P.derivative("lambda")};
    const RatFunc pt{P.derivative("t")};
    const RatFunc lp = -pt / pl;
    const RatFunc lpp =
        lp.derivative("t") + lp * lp.derivative("lambda");
    return {lp, lpp};
}

/**
 * Structural requirements for the residue test: positive degree in λ,
 * squarefree in λ, and no component on the excluded lines λ ∈ {0, 1, t}.
 */
inline void validate_residue_curve(const MultiPoly& P) {
    if (P.is_zero() || P.degree("lambda") < 1)
        throw CurvePreconditionError(
            "residue oracle: curve must have positive degree in lambda");
    if (P.degree("lambda") >= 2) {
        if (discriminant(P, "lambda").is_zero())
            throw CurvePreconditionError(
                "residue oracle: curve is not squarefree in lambda");
    }
    const MultiPoly lam = MultiPoly::var("lambda");
    const MultiPoly t = MultiPoly::var("t");
    if (divides(lam, P) || divides(lam - MultiPoly::constant(1), P) ||
        divides(lam - t, P))
        throw CurvePreconditionError(
            "residue oracle: curve has a trivial component lambda in {0,1,t}");
}

namespace detail {

/**
 * Left side minus right side of the Painlevé VI equation along P, multiplied
 * by 2·λ(λ−1)(λ−t)·t²(t−1)²·P_λ³ to clear every denominator, with the four
 * equation parameters carried as the fresh variables al0..al3.  Writing
 * A = −P_tt·P_λ² + 2·P_t·P_λt·P_λ − P_t²·P_λλ  (so λ″ = A/P_λ³),
 * S₁ = (λ−1)(λ−t) + λ(λ−t) + λ(λ−1),  S₂ = (t−1)(λ−t) + t(λ−t) + t(t−1),
 * and N_al = N(λ,t) with al-variables in the coefficient slots, this equals
 *
 *   2λ(λ−1)(λ−t)t²(t−1)²·A − S₁·t²(t−1)²·P_t²·P_λ
 *     − 2S₂·λ(λ−1)t(t−1)·P_t·P_λ² − 2P_λ³·N_al − P_λ³·t(t−1)λ²(λ−1)².
 *
 * The result is affine-linear in (al0, al1, al2, al3).
 */
inline MultiPoly cleared_residue_raw(const MultiPoly& P) {
    const MultiPoly lam = MultiPoly::var("lambda");
    const MultiPoly t = MultiPoly::var("t");
    const MultiPoly one = MultiPoly::constant(1);
    const MultiPoly l1 = lam - one;
    const MultiPoly lt = lam - t;
    const MultiPoly t1 = t - one;

    const MultiPoly pl = P.derivative("lambda");
    const MultiPoly pt = P.derivative("t");
    const MultiPoly pll = pl.derivative("lambda");
    const MultiPoly plt = pl.derivative("t");
    const MultiPoly ptt = pt.derivative("t");

    const MultiPoly A =
        -(ptt * pl * pl) + pt * plt * pl * Rational(2) - pt * pt * pll;
    const MultiPoly S1 = l1 * lt + lam * lt + lam * l1;
    const MultiPoly S2 = t1 * lt + t * lt + t * t1;
    const MultiPoly tsq = t * t * t1 * t1;
    const MultiPoly pl3 = pl * pl * pl;
    const MultiPoly n_al = build_curve_poly(Quadruple::symbolic("al"));

    return lam * l1 * lt * tsq * A * Rational(2) - S1 * tsq * pt * pt * pl -
           S2 * lam * l1 * t * t1 * pt * pl * pl * Rational(2) -
           pl3 * n_al * Rational(2) - pl3 * t * t1 * lam * lam * l1 * l1;
}

/**
 * The cleared residue pseudo-reduced modulo P in λ.  The pseudo-division
 * multiplier is a power of lc_λ(P), which is free of al0..al3, so the result
 * stays affine-linear in the al-variables; it is the zero polynomial for
 * exactly those α making every branch of P a Painlevé VI solution.
 */
inline MultiPoly reduced_residue(const MultiPoly& P) {
    return prem(cleared_residue_raw(P), P, "lambda");
}

/// Content of p viewed as a polynomial in (λ, t) over the remaining
/// variables: the gcd of all (λ,t)-bicoefficients.
inline MultiPoly lt_content(const MultiPoly& p) {
    MultiPoly g;
    for (const auto& [i, ci] : p.as_univariate("lambda")) {
        (void)i;
        for (const auto& [j, cij] : ci.as_univariate("t")) {
            (void)j;
            g = g.is_zero() ? cij : poly_gcd(g, cij);
            if (g.is_constant()) return MultiPoly::constant(1);
        }
    }
    return g.is_zero() ? MultiPoly::constant(1) : g;
}

/// Primitive part of p as a polynomial in (λ, t): parameter content and
/// rational content stripped, sign normalized.
inline MultiPoly lt_primitive(const MultiPoly& p) {
    if (p.is_zero()) return p;
    const MultiPoly c = lt_content(p);
    if (c.is_constant()) return p.unit_normalized();
    return exact_divide(p, c).unit_normalized();
}

}  // namespace detail

/**
 * Exact residue of the Painlevé VI equation along P, affine-linear in α:
 * the cleared, pseudo-reduced residue with α substituted, *without* final
 * normalization.  Satisfies, for any quadruples α′, α″ and rational s,
 *   linear(α′ + s(α″−α′)) = linear(α′) + s·(linear(α″) − linear(α′)).
 * Denominators of α entries must be free of λ and t.
 */
inline MultiPoly pvi_residue_linear(const MultiPoly& P,
                                    const AlphaQuadruple& alpha) {
    validate_residue_curve(P);
    const MultiPoly r = detail::reduced_residue(P);
    std::map<std::string, RatFunc> sub;
    const char* names[4] = {"al0", "al1", "al2", "al3"};
    RatFunc den_clear(Rational(1));
    for (int i = 0; i < 4; ++i) {
        const MultiPoly d = alpha[i].den();
        if (d.degree("lambda") > 0 || d.degree("t") > 0)
            throw CurvePreconditionError(
                "pvi_residue: alpha entries must have (lambda,t)-free "
                "denominators");
        sub[names[i]] = alpha[i];
        den_clear = den_clear * RatFunc(d);
    }
    const RatFunc image = substitute_all(r, sub) * den_clear;
    if (!image.is_polynomial())
        throw AlgebraError("pvi_residue: substitution left a denominator");
    return image.as_poly();
}

/**
 * Decides whether every branch of P(λ,t) = 0 solves the Painlevé VI equation
 * with parameters α: returns the primitive part of the pseudo-remainder of
 * the cleared equation modulo P.  The zero polynomial means every branch is
 * a solution; any nonzero value certifies failure.
 */
inline MultiPoly pvi_residue(const MultiPoly& P, const AlphaQuadruple& alpha) {
    return detail::lt_primitive(pvi_residue_linear(P, alpha));
}

namespace detail {

/// One linear condition per (λ,t)-monomial of the reduced residue:
/// coeffs[0..3]·α + coeffs[4] = 0, coefficients polynomial in the parameters.
struct ResidueSystem {
    std::vector<std::array<MultiPoly, 5>> rows;
    bool has_parameters = false;
    std::vector<std::string> parameters;
};

inline ResidueSystem collect_residue_system(const MultiPoly& P) {
    const MultiPoly r = reduced_residue(P);
    ResidueSystem sys;

    std::set<std::string> params;
    for (const auto& v : r.variable_set())
        if (v != "lambda" && v != "t" && v != "al0" && v != "al1" &&
            v != "al2" && v != "al3")
            params.insert(v);
    sys.parameters.assign(params.begin(), params.end());
    sys.has_parameters = !params.empty();

    // key: (λ-degree, t-degree) → [al0-coeff, .., al3-coeff, constant term]
    std::map<std::pair<int, int>, std::array<MultiPoly, 5>> grouped;
    for (const auto& [i, ci] : r.as_univariate("lambda")) {
        for (const auto& [j, cij] : ci.as_univariate("t")) {
            auto& row = grouped[{i, j}];
            const char* names[4] = {"al0", "al1", "al2", "al3"};
            MultiPoly rest = cij;
            for (int k = 0; k < 4; ++k) {
                if (cij.degree(names[k]) > 1)
                    throw AlgebraError(
                        "residue oracle: residue is not affine-linear");
                const MultiPoly ck = cij.coeff_of(names[k], 1);
                for (int m = 0; m < 4; ++m)
                    if (ck.degree(names[m]) > 0)
                        throw AlgebraError(
                            "residue oracle: residue mixes two alpha slots");
                row[k] = row[k] + ck;
                rest = rest - ck * MultiPoly::var(names[k]);
            }
            row[4] = row[4] + rest;
            for (int m = 0; m < 4; ++m)
                if (row[4].degree(names[m]) > 0)
                    throw AlgebraError(
                        "residue oracle: residue is not affine-linear");
        }
    }
    for (auto& [key, row] : grouped) {
        (void)key;
        sys.rows.push_back(row);
    }
    return sys;
}

/// Evaluate a quadruple of rational functions at a parameter point.
/// Returns nullopt when any denominator vanishes there.
inline std::optional<std::array<Rational, 4>> try_eval_vector(
    const std::array<RatFunc, 4>& vec,
    const std::map<std::string, Rational>& point) {
    std::array<Rational, 4> out{};
    for (int i = 0; i < 4; ++i) {
        const Rational den = vec[i].den().evaluate(point);
        if (den == 0) return std::nullopt;
        out[i] = vec[i].num().evaluate(point) / den;
    }
    return out;
}

/// Deterministic pool of rational parameter values used to sample a
/// parameterized solution family; varied signs and denominators avoid
/// small-integer coincidences.
inline const std::vector<Rational>& sample_value_pool() {
    static const std::vector<Rational> pool = [] {
        std::vector<Rational> p;
        p.push_back(Rational(1));
        p.push_back(Rational(2));
        p.push_back(Rational(3));
        p.push_back(Rational(5));
        p.push_back(Rational(7));
        p.push_back(Rational(-2));
        p.push_back(Rational(-3));
        p.push_back(Rational(1, 2));
        p.push_back(Rational(3, 2));
        p.push_back(Rational(-5, 2));
        p.push_back(Rational(11));
        p.push_back(Rational(-7, 3));
        p.push_back(Rational(13));
        p.push_back(Rational(4));
        p.push_back(Rational(-5));
        p.push_back(Rational(9, 2));
        return p;
    }();
    return pool;
}

}  // namespace detail

/**
 * The affine subspace of all quadruples α for which every branch of
 * P(λ,t) = 0 solves the Painlevé VI equation.  Parameter-free curves are
 * solved directly over ℚ.  For a curve with rational parameters the linear
 * system is solved over the rational-function field of the parameters and
 * the reported subspace is the affine hull of the family swept as the
 * parameters range over ℚ, computed by sampling the generic solution at a
 * fixed pool of rational parameter values.  Returns the empty subspace when
 * no α works generically.
 */
inline AffineSubspace solve_alpha_subspace(const MultiPoly& P) {
    validate_residue_curve(P);
    const detail::ResidueSystem sys = detail::collect_residue_system(P);

    if (sys.rows.empty()) {
        // Residue vanished identically: every α works (cannot happen for a
        // genuine curve, but keep the algebra honest).
        return AffineSubspace(
            {0, 0, 0, 0},
            {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    }

    if (!sys.has_parameters) {
        std::vector<std::vector<Rational>> A;
        std::vector<Rational> b;
        for (const auto& row : sys.rows) {
            std::vector<Rational> r(4);
            for (int k = 0; k < 4; ++k) r[k] = row[k].constant_value();
            A.push_back(std::move(r));
            b.push_back(-row[4].constant_value());
        }
        auto sol = solve_linear<Rational>(A, b);
        if (!sol) return AffineSubspace::empty_space();
        std::vector<Rational> base = sol->particular;
        std::vector<std::vector<Rational>> dirs = sol->nullspace;
        return AffineSubspace(std::move(base), std::move(dirs));
    }

    std::vector<std::vector<RatFunc>> A;
    std::vector<RatFunc> b;
    for (const auto& row : sys.rows) {
        std::vector<RatFunc> r;
        r.reserve(4);
        for (int k = 0; k < 4; ++k) r.emplace_back(row[k]);
        A.push_back(std::move(r));
        b.emplace_back(-row[4]);
    }
    auto sol = solve_linear<RatFunc>(A, b);
    if (!sol) return AffineSubspace::empty_space();

    std::array<RatFunc, 4> part{sol->particular[0], sol->particular[1],
                                sol->particular[2], sol->particular[3]};
    std::vector<std::array<RatFunc, 4>> fdirs;
    for (const auto& d : sol->nullspace)
        fdirs.push_back({d[0], d[1], d[2], d[3]});

    // Sample the parameters over a fixed rational pool.  At each usable
    // sample s the points p(s) and p(s) + d_j(s) all solve the specialized
    // linear system exactly, so every collected point certifiably lies in
    // the swept family; their affine span is its hull.
    const auto& pool = detail::sample_value_pool();
    const std::size_t nparams = sys.parameters.size();
    std::vector<std::vector<Rational>> points;
    int usable = 0;
    for (std::size_t s = 0; s < pool.size() && usable < 8; ++s) {
        std::map<std::string, Rational> at;
        for (std::size_t j = 0; j < nparams; ++j)
            at[sys.parameters[j]] = pool[(s + 3 * j) % pool.size()];
        const auto base = detail::try_eval_vector(part, at);
        if (!base) continue;
        std::vector<std::array<Rational, 4>> here{*base};
        bool ok = true;
        for (const auto& dir : fdirs) {
            const auto dv = detail::try_eval_vector(dir, at);
            if (!dv) {
                ok = false;
                break;
            }
            here.push_back({(*base)[0] + (*dv)[0], (*base)[1] + (*dv)[1],
                            (*base)[2] + (*dv)[2], (*base)[3] + (*dv)[3]});
        }
        if (!ok) continue;
        for (const auto& v : here) points.push_back({v[0], v[1], v[2], v[3]});
        ++usable;
    }
    if (usable < 5)
        throw AlgebraError(
            "residue oracle: too few usable parameter samples for the "
            "solution family");
    return affine_span(points);
}

/**
 * The affine subspace denoted by a printed α-pattern such as
 * (4a, 1/8, a, a): base point = pattern at letters 0, one direction per
 * letter.  Pattern entries must be affine-linear in the letters.
 */
inline AffineSubspace pattern_subspace(const AlphaQuadruple& pattern) {
    std::set<std::string> letters;
    for (const auto& f : pattern.v) {
        if (!f.is_polynomial())
            throw AlgebraError("pattern_subspace: entries must be polynomial");
        if (f.num().total_degree() > 1)
            throw AlgebraError(
                "pattern_subspace: entries must be affine-linear");
        for (const auto& v : f.num().variable_set()) letters.insert(v);
    }
    std::vector<Rational> base(4);
    for (int i = 0; i < 4; ++i)
        base[i] = pattern[i].num().evaluate({});
    std::vector<std::vector<Rational>> dirs;
    for (const auto& l : letters) {
        std::vector<Rational> d(4);
        bool nonzero = false;
        for (int i = 0; i < 4; ++i) {
            d[i] = pattern[i].num().coeff_of(l, 1).evaluate({});
            if (d[i] != 0) nonzero = true;
        }
        if (nonzero) dirs.push_back(std::move(d));
    }
    return AffineSubspace(std::move(base), std::move(dirs));
}

/**
 * A curve family from the catalog: a name, a defining polynomial (possibly
 * with parameters a, b in its coefficients), and the printed α-pattern.
 */
struct CurveFamily {
    std::string name;
    MultiPoly P;
    AlphaQuadruple alpha_pattern;

    /// Catalog invariants: positive degree in λ and t, squarefree in λ.
    void validate() const {
        if (P.degree("t") < 1)
            throw CurvePreconditionError("curve family " + name +
                                         ": constant in t");
        validate_residue_curve(P);
    }
};

/**
 * Face factorization identities of N(λ,t).  Each id names a coefficient
 * stratum; returns whether the stated product identity holds exactly with
 * symbolic coefficients.  Known ids, with their identities:
 *
 *   "b0=b2,b1=b3"      N = (λ²−2λ+t)·(b0λ²(λ−t)² − b1t²(λ−1)²)
 *   "all-equal"        N = b0·(λ²−2λ+t)(λ²−2λt+t)(λ²−t)
 *   "b0=b1=b2,b3=9b0"  N = b0·(λ²−2λ+2λt−t)(λ⁴−4λ³t+6λ²t−4λt+t²)
 *   "b3=0"             N = (λ−t)²·(b0λ²(λ−1)² − b1t(λ−1)² + b2(t−1)λ²)
 *   "b2=0,b3=0"        N = (λ−1)²(λ−t)²·(b0λ² − b1t)
 *   "b3=0,b0=4b1=4b2"  N = (λ−t)²·b1·(2λ−1)(2λ³−3λ²+t)
 *   "b3=0,b1=4b0=4b2"  N = (λ−t)²·b0·(λ−2)(λ³−3λt+2t)
 */
inline bool verify_face_factorization(const std::string& face_id) {
    const MultiPoly lam = MultiPoly::var("lambda");
    const MultiPoly t = MultiPoly::var("t");
    const MultiPoly one = MultiPoly::constant(1);
    const MultiPoly l1 = lam - one;
    const MultiPoly lt = lam - t;
    const MultiPoly b0 = MultiPoly::var("b0");
    const MultiPoly b1 = MultiPoly::var("b1");
    const MultiPoly b2 = MultiPoly::var("b2");
    const MultiPoly n = symbolic_curve_poly();

    if (face_id == "b0=b2,b1=b3") {
        const MultiPoly lhs = n.substitute("b2", b0).substitute("b3", b1);
        const MultiPoly rhs =
            (lam * lam - lam * Rational(2) + t) *
            (b0 * lam * lam * lt * lt - b1 * t * t * l1 * l1);
        return lhs == rhs;
    }
    if (face_id == "all-equal") {
        const MultiPoly lhs = n.substitute("b1", b0)
                                  .substitute("b2", b0)
                                  .substitute("b3", b0);
        const MultiPoly rhs = b0 * (lam * lam - lam * Rational(2) + t) *
                              (lam * lam - lam * t * Rational(2) + t) *
                              (lam * lam - t);
        return lhs == rhs;
    }
    if (face_id == "b0=b1=b2,b3=9b0") {
        const MultiPoly lhs = n.substitute("b1", b0)
                                  .substitute("b2", b0)
                                  .substitute("b3", b0 * Rational(9));
        const MultiPoly sextic1 =
            lam * lam - lam * Rational(2) + lam * t * Rational(2) - t;
        const MultiPoly sextic2 = lam.pow(4) - lam.pow(3) * t * Rational(4) +
                                  lam * lam * t * Rational(6) -
                                  lam * t * Rational(4) + t * t;
        return lhs == b0 * sextic1 * sextic2;
    }
    if (face_id == "b3=0") {
        const MultiPoly lhs = n.substitute("b3", MultiPoly::constant(0));
        const MultiPoly n0 = b0 * lam * lam * l1 * l1 - b1 * t * l1 * l1 +
                             b2 * (t - one) * lam * lam;
        return lhs == lt * lt * n0;
    }
    if (face_id == "b2=0,b3=0") {
        const MultiPoly lhs = n.substitute("b2", MultiPoly::constant(0))
                                  .substitute("b3", MultiPoly::constant(0));
        return lhs == l1 * l1 * lt * lt * (b0 * lam * lam - b1 * t);
    }
    if (face_id == "b3=0,b0=4b1=4b2") {
        const MultiPoly lhs = n.substitute("b0", b1 * Rational(4))
                                  .substitute("b2", b1)
                                  .substitute("b3", MultiPoly::constant(0));
        const MultiPoly cubic = lam.pow(3) * Rational(2) -
                                lam * lam * Rational(3) + t;
        return lhs ==
               lt * lt * b1 * (lam * Rational(2) - one) * cubic;
    }
    if (face_id == "b3=0,b1=4b0=4b2") {
        const MultiPoly lhs = n.substitute("b1", b0 * Rational(4))
                                  .substitute("b2", b0)
                                  .substitute("b3", MultiPoly::constant(0));
        const MultiPoly cubic =
            lam.pow(3) - lam * t * Rational(3) + t * Rational(2);
        return lhs ==
               lt * lt * b0 * (lam - MultiPoly::constant(2)) * cubic;
    }
    throw AlgebraError("verify_face_factorization: unknown face id '" +
                       face_id + "'");
}

/// All face ids known to verify_face_factorization.
inline std::vector<std::string> face_catalog() {
    return {"b0=b2,b1=b3",     "all-equal",        "b0=b1=b2,b3=9b0",
            "b3=0",            "b2=0,b3=0",        "b3=0,b0=4b1=4b2",
            "b3=0,b1=4b0=4b2"};
}

}  // namespace pvi
