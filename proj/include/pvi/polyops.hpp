/**
 * @file polyops.hpp
 * @brief Elimination-theory toolkit over MultiPoly: pseudo-division,
 *        exact division, multivariate gcd, resultants (pseudo-remainder
 *        cascade plus an independent fraction-free determinant route),
 *        discriminants, squarefree decomposition and rational root finding.
 *
 * Everything here is exact over the rationals.  No modular arithmetic, no
 * floating point, no probabilistic shortcuts: the callers use these routines
 * as certifying oracles, so each result is either provably correct or an
 * exception.
 */
#pragma once

#include <pvi/multipoly.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pvi {

// ---------------------------------------------------------------------------
// Pseudo-division
// ---------------------------------------------------------------------------

/**
 * Pseudo-remainder of A by B with respect to `var`.
 *
 * Returns R with lc(B)^(degA - degB + 1) * A = Q*B + R and deg_var R < deg_var B.
 * The multiplier is a power of B's leading coefficient only, so R depends
 * affinely on any parameters that enter A affinely.  If deg A < deg B the
 * result is A itself (empty multiplier).
 */
inline MultiPoly prem(const MultiPoly& A, const MultiPoly& B,
                      const std::string& var) {
    if (B.is_zero()) throw AlgebraError("prem: division by zero polynomial");
    const int dA = A.degree(var);
    const int dB = B.degree(var);
    if (A.is_zero() || dA < dB) return A;
    const MultiPoly lcB = B.leading_coeff(var);
    const MultiPoly x = MultiPoly::var(var);
    MultiPoly R = A;
    const int e = dA - dB + 1;
    int steps = 0;
    while (!R.is_zero() && R.degree(var) >= dB) {
        const int dR = R.degree(var);
        R = lcB * R - R.leading_coeff(var) * x.pow(dR - dB) * B;
        ++steps;
        if (!R.is_zero() && R.degree(var) >= dR)
            throw AlgebraError("prem: degree failed to drop");
    }
    for (int i = steps; i < e; ++i) R = R * lcB;
    return R;
}

// ---------------------------------------------------------------------------
// Exact division
// ---------------------------------------------------------------------------

/**
 * Exact polynomial division: returns p / q, throwing NotDivisible when q does
 * not divide p.  Works by cancelling lexicographic leading terms, which both
 * terminates and decides divisibility (if q | p the loop runs to completion;
 * otherwise some partial remainder exposes a non-divisible leading monomial).
 */
inline MultiPoly exact_divide(const MultiPoly& p, const MultiPoly& q) {
    if (q.is_zero()) throw AlgebraError("exact_divide: division by zero");
    if (p.is_zero()) return MultiPoly::constant(0);
    auto [vars, tp, tq] = MultiPoly::align_pair(p, q);
    const auto& ltq = *tq.rbegin();
    MultiPoly::TermMap quot;
    while (!tp.empty()) {
        const auto& ltp = *tp.rbegin();
        MultiPoly::Exponents diff(ltp.first.size());
        for (size_t i = 0; i < diff.size(); ++i) {
            diff[i] = ltp.first[i] - ltq.first[i];
            if (diff[i] < 0)
                throw NotDivisible("exact_divide: leading monomial mismatch");
        }
        const Rational c = ltp.second / ltq.second;
        quot.emplace(diff, c);
        for (const auto& [eq, cq] : tq) {
            MultiPoly::Exponents key(eq.size());
            for (size_t i = 0; i < key.size(); ++i) key[i] = eq[i] + diff[i];
            auto it = tp.find(key);
            Rational nv = (it != tp.end() ? it->second : Rational(0)) - c * cq;
            if (nv == 0) {
                if (it != tp.end()) tp.erase(it);
            } else {
                tp[std::move(key)] = std::move(nv);
            }
        }
    }
    return MultiPoly::from_terms(std::move(vars), std::move(quot));
}

/// Does q divide p exactly?
inline bool divides(const MultiPoly& q, const MultiPoly& p) {
    try {
        exact_divide(p, q);
        return true;
    } catch (const NotDivisible&) {
        return false;
    }
}

/**
 * Peel off as many factors of `f` from `p` as possible.
 * Returns (reduced polynomial, number of factors removed).
 */
inline std::pair<MultiPoly, int> strip_factor(MultiPoly p, const MultiPoly& f) {
    if (f.is_zero() || f.is_constant())
        throw AlgebraError("strip_factor: factor must be non-constant");
    int k = 0;
    while (!p.is_zero()) {
        try {
            p = exact_divide(p, f);
            ++k;
        } catch (const NotDivisible&) {
            break;
        }
    }
    return {p, k};
}

// ---------------------------------------------------------------------------
// Multivariate gcd (content / primitive-part recursion on variables)
// ---------------------------------------------------------------------------

inline MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q);

/**
 * Content of p viewed as a univariate polynomial in `var`: the gcd of its
 * coefficient polynomials, unit-normalized.  Zero polynomial has content 0.
 */
inline MultiPoly content_wrt(const MultiPoly& p, const std::string& var) {
    if (p.is_zero()) return p;
    MultiPoly g = MultiPoly::constant(0);
    for (const auto& [k, coeff] : p.as_univariate(var)) {
        (void)k;
        g = poly_gcd(g, coeff);
        if (g.is_constant()) break;
    }
    return g;
}

/**
 * Primitive part of p with respect to `var`: p divided by its content and
 * unit-normalized (integer-primitive coefficients, positive leading sign).
 */
inline MultiPoly primitive_wrt(const MultiPoly& p, const std::string& var) {
    if (p.is_zero()) return p;
    return exact_divide(p, content_wrt(p, var)).unit_normalized();
}

/**
 * Multivariate gcd, unit-normalized.  Recursion: pick the canonically first
 * variable present, split both inputs into content times primitive part,
 * run a primitive pseudo-remainder cascade in that variable, and recurse on
 * the (variable-poorer) contents.  gcd(p, 0) = unit-normalized p.
 */
inline MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q) {
    if (p.is_zero()) return q.is_zero() ? q : q.unit_normalized();
    if (q.is_zero()) return p.unit_normalized();
    if (p.is_constant() || q.is_constant()) return MultiPoly::constant(1);
    std::string var;
    {
        auto vp = p.variable_set();
        auto vq = q.variable_set();
        vp.insert(vq.begin(), vq.end());
        var = *std::min_element(vp.begin(), vp.end(), var_less);
    }
    if (p.degree(var) == 0) return poly_gcd(content_wrt(q, var), p);
    if (q.degree(var) == 0) return poly_gcd(content_wrt(p, var), q);
    const MultiPoly cp = content_wrt(p, var);
    const MultiPoly cq = content_wrt(q, var);
    const MultiPoly cg = poly_gcd(cp, cq);
    MultiPoly P = exact_divide(p, cp).unit_normalized();
    MultiPoly Q = exact_divide(q, cq).unit_normalized();
    if (P.degree(var) < Q.degree(var)) std::swap(P, Q);
    MultiPoly G = MultiPoly::constant(1);
    while (true) {
        if (Q.is_zero()) {
            G = P;
            break;
        }
        if (Q.degree(var) == 0) break;  // coprime in var: G = 1
        MultiPoly R = prem(P, Q, var);
        P = Q;
        Q = R.is_zero() ? R : primitive_wrt(R, var);
    }
    return (cg * G).unit_normalized();
}

/// Least common multiple, unit-normalized.
inline MultiPoly poly_lcm(const MultiPoly& p, const MultiPoly& q) {
    if (p.is_zero() || q.is_zero()) return MultiPoly::constant(0);
    return exact_divide(p * q, poly_gcd(p, q)).unit_normalized();
}

// ---------------------------------------------------------------------------
// Resultants and discriminants
// ---------------------------------------------------------------------------

namespace detail {

/**
 * Resultant of two nonzero polynomials by a pseudo-remainder cascade with
 * content stripping and exact correction factors.  Invariant used at each
 * step (all identities elementary consequences of the root-product form):
 *
 *   res(A, B) = (-1)^(m n) * lc(B)^(m - r - n(m-n+1)) * theta^n * res(B, R')
 *
 * where R = prem(A, B) = theta * R' with theta the full content of R,
 * m = deg A, n = deg B, r = deg R.  A negative power of lc(B) is an exact
 * division of the accumulated product.
 */
inline MultiPoly resultant_impl(const MultiPoly& A, const MultiPoly& B,
                                const std::string& var) {
    const int m = A.degree(var);
    const int n = B.degree(var);
    if (n == 0) return B.pow(m);
    if (m < n) {
        MultiPoly r = resultant_impl(B, A, var);
        return (m * n) % 2 ? -r : r;
    }
    MultiPoly R = prem(A, B, var);
    if (R.is_zero()) return MultiPoly::constant(0);
    const MultiPoly cpol = content_wrt(R, var);
    MultiPoly R2 = exact_divide(R, cpol);
    const Rational rho = R2.rational_content();
    R2 = R2 / rho;
    const MultiPoly theta = cpol * rho;
    const int r = R2.degree(var);
    const MultiPoly lcB = B.leading_coeff(var);
    MultiPoly result = theta.pow(n) * resultant_impl(B, R2, var);
    const int e = m - r - n * (m - n + 1);
    if (e >= 0)
        result = result * lcB.pow(e);
    else
        result = exact_divide(result, lcB.pow(-e));
    return (m * n) % 2 ? -result : result;
}

}  // namespace detail

/**
 * Resultant of p and q with respect to `var`, in the standard Sylvester
 * determinant convention (res(x^2 - t, 2x, x) = -4t).  Multiplicative in
 * factors of either argument; zero iff p and q share a factor involving var.
 */
inline MultiPoly resultant(const MultiPoly& p, const MultiPoly& q,
                           const std::string& var) {
    if (p.is_zero() || q.is_zero()) return MultiPoly::constant(0);
    if (p.degree(var) == 0 && q.degree(var) == 0)
        throw AlgebraError("resultant: both operands constant in " + var);
    return detail::resultant_impl(p, q, var);
}

/**
 * Independent resultant oracle: Sylvester matrix + Bareiss fraction-free
 * determinant.  Exists so the cascade route above can be cross-checked by a
 * structurally unrelated computation; never merged with it.
 */
inline MultiPoly resultant_sylvester(const MultiPoly& p, const MultiPoly& q,
                                     const std::string& var) {
    if (p.is_zero() || q.is_zero()) return MultiPoly::constant(0);
    const int m = p.degree(var);
    const int n = q.degree(var);
    if (m == 0 && n == 0)
        throw AlgebraError("resultant: both operands constant in " + var);
    const int N = m + n;
    auto pc = p.as_univariate(var);
    auto qc = q.as_univariate(var);
    auto coeff = [](std::map<int, MultiPoly>& c, int k) {
        auto it = c.find(k);
        return it == c.end() ? MultiPoly::constant(0) : it->second;
    };
    std::vector<std::vector<MultiPoly>> M(
        N, std::vector<MultiPoly>(N, MultiPoly::constant(0)));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k) M[i][i + k] = coeff(pc, m - k);
    for (int j = 0; j < m; ++j)
        for (int k = 0; k <= n; ++k) M[n + j][j + k] = coeff(qc, n - k);
    // Bareiss elimination: divisions by the previous pivot are exact.
    int sign = 1;
    MultiPoly prev = MultiPoly::constant(1);
    for (int k = 0; k + 1 < N; ++k) {
        if (M[k][k].is_zero()) {
            int swap_row = -1;
            for (int l = k + 1; l < N; ++l)
                if (!M[l][k].is_zero()) {
                    swap_row = l;
                    break;
                }
            if (swap_row < 0) return MultiPoly::constant(0);
            std::swap(M[k], M[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < N; ++i) {
            for (int j = k + 1; j < N; ++j)
                M[i][j] =
                    exact_divide(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev);
            M[i][k] = MultiPoly::constant(0);
        }
        prev = M[k][k];
    }
    return sign < 0 ? -M[N - 1][N - 1] : M[N - 1][N - 1];
}

/**
 * Discriminant of p with respect to `var`:
 * (-1)^(n(n-1)/2) * resultant(p, dp/dvar, var) / lc_var(p).
 */
inline MultiPoly discriminant(const MultiPoly& p, const std::string& var) {
    const int n = p.degree(var);
    if (n <= 0) throw AlgebraError("discriminant: polynomial constant in " + var);
    MultiPoly res = resultant(p, p.derivative(var), var);
    MultiPoly d = exact_divide(res, p.leading_coeff(var));
    return (n * (n - 1) / 2) % 2 ? -d : d;
}

// ---------------------------------------------------------------------------
// Squarefree structure
// ---------------------------------------------------------------------------

/**
 * Yun squarefree decomposition with respect to `var`.
 * Returns pairs (factor, multiplicity) with each factor squarefree,
 * unit-normalized, pairwise coprime, and of positive degree in var;
 * the var-free content is discarded.  Product of factor^multiplicity
 * equals p up to a var-free unit.
 */
inline std::vector<std::pair<MultiPoly, int>> squarefree_decomposition(
    const MultiPoly& p, const std::string& var) {
    if (p.is_zero())
        throw AlgebraError("squarefree_decomposition: zero polynomial");
    std::vector<std::pair<MultiPoly, int>> out;
    if (p.degree(var) == 0) return out;
    const MultiPoly g = primitive_wrt(p, var);
    const MultiPoly dg = g.derivative(var);
    const MultiPoly u = poly_gcd(g, dg);
    // v and w must stay scaled by the *same* unit throughout (the update
    // z = w - v' is not invariant under rescaling v alone), so factors are
    // normalized only on output.
    MultiPoly v = exact_divide(g, u);
    MultiPoly w = exact_divide(dg, u);
    int i = 1;
    const int guard = p.degree(var) + 1;
    while (v.degree(var) > 0) {
        if (i > guard)
            throw AlgebraError("squarefree_decomposition: failed to terminate");
        const MultiPoly z = w - v.derivative(var);
        if (z.is_zero()) {
            out.emplace_back(v.unit_normalized(), i);
            break;
        }
        const MultiPoly h = poly_gcd(v, z);
        if (h.degree(var) > 0) out.emplace_back(h, i);
        v = exact_divide(v, h);
        w = exact_divide(z, h);
        ++i;
    }
    return out;
}

/// Product of the distinct var-involving irreducible factors of p, normalized.
inline MultiPoly squarefree_part(const MultiPoly& p, const std::string& var) {
    if (p.is_zero()) throw AlgebraError("squarefree_part: zero polynomial");
    if (p.degree(var) == 0) return MultiPoly::constant(1);
    const MultiPoly g = primitive_wrt(p, var);
    return exact_divide(g, poly_gcd(g, g.derivative(var))).unit_normalized();
}

// ---------------------------------------------------------------------------
// Rational roots
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<Int> positive_divisors(Int n) {
    if (n < 0) n = -n;
    std::vector<Int> out;
    long iterations = 0;
    for (Int i = 1; i * i <= n; ++i) {
        if (++iterations > 4000000)
            throw AlgebraError("rational_roots: coefficient too large to factor");
        if (n % i == 0) {
            out.push_back(i);
            if (i * i != n) out.push_back(n / i);
        }
    }
    return out;
}

}  // namespace detail

/**
 * All distinct rational roots of a univariate polynomial (coefficients must
 * be rational constants), via the rational root theorem on the normalized
 * integer form.  Returned sorted ascending.
 */
inline std::vector<Rational> rational_roots(const MultiPoly& f,
                                            const std::string& var) {
    if (f.is_zero()) throw AlgebraError("rational_roots: zero polynomial");
    std::map<int, Rational> c;
    for (const auto& [k, coeff] : f.as_univariate(var)) {
        if (!coeff.is_constant())
            throw AlgebraError("rational_roots: polynomial not univariate in " +
                               var);
        if (!(coeff.constant_value() == 0)) c[k] = coeff.constant_value();
    }
    std::vector<Rational> roots;
    if (c.empty() || c.rbegin()->first == 0) return roots;
    auto eval = [&](const Rational& x) {
        Rational acc = 0;
        int last = c.rbegin()->first;
        for (auto it = c.rbegin(); it != c.rend(); ++it) {
            acc *= rat_pow(x, last - it->first);
            acc += it->second;
            last = it->first;
        }
        acc *= rat_pow(x, last);
        return acc;
    };
    const int low = c.begin()->first;
    if (low > 0) roots.push_back(Rational(0));
    // Integer-normalize: multiply by lcm of denominators, divide by gcd of
    // numerators; root candidates are p/q with p | trailing, q | leading.
    Int den_lcm = 1, num_gcd = 0;
    for (const auto& [k, v] : c) {
        (void)k;
        den_lcm = boost::multiprecision::lcm(
            den_lcm, Int(boost::multiprecision::denominator(v)));
        num_gcd = boost::multiprecision::gcd(
            num_gcd, Int(boost::multiprecision::numerator(v)));
    }
    auto int_coeff = [&](int k) {
        const Rational scaled = c[k] * Rational(den_lcm);
        return Int(boost::multiprecision::numerator(scaled) / num_gcd);
    };
    const Int a0 = int_coeff(low);
    const Int an = int_coeff(c.rbegin()->first);
    for (const Int& pdiv : detail::positive_divisors(a0)) {
        for (const Int& qdiv : detail::positive_divisors(an)) {
            if (boost::multiprecision::gcd(pdiv, qdiv) != 1) continue;
            const Rational cand(pdiv, qdiv);
            if (eval(cand) == 0) roots.push_back(cand);
            if (eval(-cand) == 0) roots.push_back(-cand);
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace pvi
