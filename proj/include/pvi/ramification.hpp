#pragma once

/**
 * Branch analysis of a plane curve P(λ, t) = 0 over the base points
 * t ∈ {0, 1, ∞}: Newton polygons with edge polynomials, leading Puiseux
 * exponents, fiber multiplicity partitions, the discriminant obstruction
 * ("is every critical value of the projection among 0, 1, ∞?"), and
 * deterministic sampling of coefficient quadruples on the faces of the
 * coincidence polyhedron W = ∪_{i≠j}{βᵢ=βⱼ} ∪ₖ {βₖ=0}.
 *
 * Lattice convention: a support point (i, j) records the exponent of the
 * fiber variable λ first and the base variable t second.  Edge slopes are
 * the Puiseux exponents p/q > 0, and the hull is ordered by increasing
 * slope.  An edge from (i₁, j₁) to (i₂, j₂) carries the edge polynomial
 * Σ a_{ij} c^{i−i₁} over the support points on the segment; its nonzero
 * roots c are the leading coefficients of the branches λ ~ c t^{p/q}.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pvi/curve.hpp"
#include "pvi/multipoly.hpp"
#include "pvi/polyops.hpp"
#include "pvi/rational.hpp"
#include "pvi/s4.hpp"

namespace pvi {

// ---------------------------------------------------------------------------
// Newton polygon
// ---------------------------------------------------------------------------

struct NewtonEdge {
    std::pair<int, int> from;  // endpoint with the smaller fiber exponent
    std::pair<int, int> to;    // endpoint with the larger fiber exponent
    int p = 0;                 // slope numerator (lowest terms)
    int q = 1;                 // slope denominator (lowest terms)
    MultiPoly edge_poly;       // polynomial in the variable "c"

    Rational slope() const { return Rational(p) / q; }
    /// Number of branches (with multiplicity) the edge accounts for.
    int length() const { return to.first - from.first; }
};

struct NewtonPolygon {
    std::vector<std::pair<int, int>> support;  // sorted lexicographically
    std::vector<NewtonEdge> lower_hull;        // sorted by increasing slope
};

/// Chart choice for the fiber coordinate of a polygon center.
enum class LambdaCenter { Zero, One, Diagonal, Infinity };
/// Chart choice for the base coordinate of a polygon center.
enum class TCenter { Zero, One, Infinity };

struct CenterSpec {
    LambdaCenter lambda0 = LambdaCenter::Zero;
    TCenter t0 = TCenter::Zero;
};

namespace detail {

/// Rewrite P in local coordinates at the center: the names "lambda" and
/// "t" denote the local variables afterwards (u = 1/λ and s = 1/t reuse
/// the same names in the infinity charts).
inline MultiPoly recenter_curve(const MultiPoly& P, const CenterSpec& c) {
    if (P.is_zero()) throw AlgebraError("newton polygon: zero polynomial");
    const MultiPoly lam = MultiPoly::var("lambda");
    const MultiPoly t = MultiPoly::var("t");
    MultiPoly w = P;
    switch (c.lambda0) {
        case LambdaCenter::Zero: break;
        case LambdaCenter::One:
            w = w.substitute("lambda", lam + MultiPoly::constant(1));
            break;
        case LambdaCenter::Diagonal:
            w = w.substitute("lambda", lam + t);
            break;
        case LambdaCenter::Infinity:
            w = w.substitute_cleared("lambda", MultiPoly::constant(1), lam)
                    .first;
            break;
    }
    switch (c.t0) {
        case TCenter::Zero: break;
        case TCenter::One:
            w = w.substitute("t", t + MultiPoly::constant(1));
            break;
        case TCenter::Infinity:
            w = w.substitute_cleared("t", MultiPoly::constant(1), t).first;
            break;
    }
    if (w.is_zero()) throw AlgebraError("newton polygon: zero after recenter");
    return w;
}

/// Support of P as (fiber exponent, base exponent) → coefficient.
inline std::map<std::pair<int, int>, MultiPoly> support_coeffs(
    const MultiPoly& P) {
    std::map<std::pair<int, int>, MultiPoly> out;
    for (const auto& [i, ci] : P.as_univariate("lambda"))
        for (const auto& [j, cij] : ci.as_univariate("t")) out[{i, j}] = cij;
    return out;
}

inline long long cross(const std::pair<int, int>& o,
                       const std::pair<int, int>& a,
                       const std::pair<int, int>& b) {
    return static_cast<long long>(a.first - o.first) * (b.second - o.second) -
           static_cast<long long>(a.second - o.second) * (b.first - o.first);
}

}  // namespace detail

/**
 * Recenter P at the given chart point and extract its support and the
 * branch-relevant part of the lower convex hull (edges of positive Puiseux
 * slope, ordered by increasing slope, each with its edge polynomial).
 * Throws "component through center" when a coordinate line of the local
 * chart divides the recentered polynomial.
 */
inline NewtonPolygon newton_polygon(const MultiPoly& P, const CenterSpec& c) {
    const MultiPoly w = detail::recenter_curve(P, c);
    const auto coeffs = detail::support_coeffs(w);

    NewtonPolygon np;
    for (const auto& [pt, coeff] : coeffs) {
        (void)coeff;
        np.support.push_back(pt);
    }

    int min_i = np.support.front().first;
    int min_j = np.support.front().second;
    for (const auto& [i, j] : np.support) {
        min_i = std::min(min_i, i);
        min_j = std::min(min_j, j);
    }
    if (min_i > 0 || min_j > 0)
        throw AlgebraError("newton polygon: component through center");

    // Lower convex hull (support is already sorted lexicographically).
    std::vector<std::pair<int, int>> hull;
    for (const auto& pt : np.support) {
        while (hull.size() >= 2 &&
               detail::cross(hull[hull.size() - 2], hull.back(), pt) <= 0)
            hull.pop_back();
        hull.push_back(pt);
    }
    // Keep the strictly descending prefix: edges with positive slope.
    std::vector<NewtonEdge> edges;
    for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
        const auto a = hull[k];
        const auto b = hull[k + 1];
        if (b.second >= a.second) break;
        NewtonEdge e;
        e.from = a;
        e.to = b;
        const int dp = a.second - b.second;
        const int dq = b.first - a.first;
        const int g = std::gcd(dp, dq);
        e.p = dp / g;
        e.q = dq / g;
        MultiPoly poly;
        for (const auto& [pt, coeff] : coeffs) {
            const auto& [i, j] = pt;
            if (i < a.first || i > b.first) continue;
            // On-segment test: (i − i₁)(j₁ − j₂) == (j₁ − j)(i₂ − i₁).
            if (static_cast<long long>(i - a.first) * dp !=
                static_cast<long long>(a.second - j) * dq)
                continue;
            poly += coeff * MultiPoly::var("c").pow(i - a.first);
        }
        e.edge_poly = poly;
        edges.push_back(std::move(e));
    }
    // Order by increasing slope.
    std::reverse(edges.begin(), edges.end());
    np.lower_hull = std::move(edges);
    return np;
}

// ---------------------------------------------------------------------------
// Puiseux leading terms and branch indices
// ---------------------------------------------------------------------------

/**
 * One local branch of the curve at a center: λ ~ c t^{exponent} + …, with
 * `index` the ramification index of the branch over the base.  A branch
 * that is constant in the fiber variable (a vertical component picked up
 * during refinement) is reported with exponent 0 and index 1.
 */
struct PuiseuxBranch {
    Rational exponent;
    int index = 1;
    bool operator==(const PuiseuxBranch&) const = default;
};

namespace detail {

inline void require_numeric_in_geometry(const MultiPoly& P,
                                        const char* what) {
    for (const auto& v : P.variable_set())
        if (v != "lambda" && v != "t")
            throw AlgebraError(std::string(what) +
                               ": coefficients must be numeric rationals");
}

/**
 * Branches of P through the local origin (P in local coordinates, numeric
 * coefficients).  When `allow_vertical` is set, components divisible by the
 * fiber variable are stripped and reported as index-1 branches; otherwise
 * they raise "component through center".
 */
inline std::vector<PuiseuxBranch> branches_at_origin(MultiPoly P, int depth,
                                                     bool allow_vertical) {
    if (depth > 12)
        throw AlgebraError("puiseux: branch refinement failed to terminate");
    if (P.is_zero()) throw AlgebraError("puiseux: zero polynomial");
    const MultiPoly lam = MultiPoly::var("lambda");
    const MultiPoly t = MultiPoly::var("t");

    std::vector<PuiseuxBranch> out;
    const auto [stripped, vertical] = strip_factor(P, lam);
    if (vertical > 0) {
        if (!allow_vertical)
            throw AlgebraError("puiseux: component through center");
        for (int k = 0; k < vertical; ++k)
            out.push_back({Rational(0), 1});
    }
    P = stripped;
    if (divides(t, P))
        throw AlgebraError("puiseux: fiber line through center");
    // No branches when the center is not on the curve.
    if (P.substitute("lambda", Rational(0))
            .substitute("t", Rational(0))
            .is_constant() &&
        !P.substitute("lambda", Rational(0))
             .substitute("t", Rational(0))
             .is_zero())
        ;  // fall through: the polygon below yields no positive-slope edges

    const NewtonPolygon np = newton_polygon(P, CenterSpec{});
    for (const auto& edge : np.lower_hull) {
        // Deflate the edge polynomial: exponents on an edge of slope p/q
        // are multiples of q, so g(c) = h(c^q).
        std::map<int, MultiPoly> uni;
        for (const auto& [k, coeff] : edge.edge_poly.as_univariate("c")) {
            if (k % edge.q != 0)
                throw AlgebraError("puiseux: edge exponent off the lattice");
            uni[k / edge.q] = coeff;
        }
        MultiPoly h;
        for (const auto& [k, coeff] : uni)
            h += coeff * MultiPoly::var("c").pow(k);

        for (const auto& [factor, mult] : squarefree_decomposition(h, "c")) {
            const int nroots = factor.degree("c");
            if (mult == 1) {
                for (int r = 0; r < nroots; ++r)
                    out.push_back({edge.slope(), edge.q});
                continue;
            }
            // Repeated leading coefficients: refine one level down.
            const auto rats = rational_roots(factor, "c");
            if (static_cast<int>(rats.size()) != nroots)
                throw AlgebraError(
                    "puiseux: ambiguous repeated edge root (irrational)");
            if (edge.q != 1)
                throw AlgebraError(
                    "puiseux: ambiguous repeated edge root (fractional "
                    "slope)");
            for (const auto& r : rats) {
                MultiPoly refined = P.substitute(
                    "lambda", t.pow(edge.p) * (MultiPoly::constant(r) + lam));
                refined = exact_divide(refined,
                                       t.pow(refined.degree("t") -
                                             refined.as_univariate("t")
                                                 .rbegin()
                                                 ->first) *
                                           MultiPoly::constant(1));
                // Strip the base-variable content introduced by the shear.
                while (divides(t, refined)) refined = exact_divide(refined, t);
                int cluster = 0;
                for (const auto& b :
                     branches_at_origin(refined, depth + 1, true)) {
                    out.push_back({Rational(edge.p), b.index});
                    cluster += b.index;
                }
                if (cluster != mult)
                    throw AlgebraError(
                        "puiseux: refinement lost track of a branch");
            }
        }
    }
    return out;
}

}  // namespace detail

/**
 * Leading Puiseux data of the branches of P through the given center:
 * one (exponent, ramification index) record per branch.  Coefficients must
 * be numeric rationals.  The sum of the indices equals the local fiber
 * multiplicity of the center.
 */
inline std::vector<PuiseuxBranch> puiseux_leading(const MultiPoly& P,
                                                  const CenterSpec& c) {
    detail::require_numeric_in_geometry(P, "puiseux");
    const MultiPoly w = detail::recenter_curve(P, c);
    auto out = detail::branches_at_origin(w, 0, false);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.exponent < b.exponent ||
               (a.exponent == b.exponent && a.index < b.index);
    });
    return out;
}

// ---------------------------------------------------------------------------
// Fiber partitions
// ---------------------------------------------------------------------------

/// Multiset of ramification multiplicities of a fiber, e.g. (1+1+2+2).
struct Partition {
    std::vector<int> parts;  // sorted ascending

    int sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

    std::string str() const {
        std::string s = "(";
        for (std::size_t k = 0; k < parts.size(); ++k) {
            if (k) s += "+";
            s += std::to_string(parts[k]);
        }
        return s + ")";
    }

    static Partition parse(const std::string& text) {
        Partition out;
        std::string digits;
        for (char ch : text) {
            if (ch >= '0' && ch <= '9') {
                digits += ch;
            } else if (ch == '+' || ch == '(' || ch == ')' || ch == ' ') {
                if (!digits.empty()) {
                    out.parts.push_back(std::stoi(digits));
                    digits.clear();
                }
            } else {
                throw AlgebraError("partition parse: unexpected character");
            }
        }
        if (!digits.empty()) out.parts.push_back(std::stoi(digits));
        if (out.parts.empty())
            throw AlgebraError("partition parse: no parts found");
        for (int p : out.parts)
            if (p <= 0) throw AlgebraError("partition parse: part must be positive");
        std::sort(out.parts.begin(), out.parts.end());
        return out;
    }

    bool operator==(const Partition&) const = default;
};

/**
 * Reduce a curve polynomial to the non-trivial part used for branch
 * analysis: drop factors free of λ, repeated factors, and the coordinate
 * lines λ, λ−1, λ−t (always-present trivial solution components).
 */
inline MultiPoly nontrivial_reduced_curve(const MultiPoly& P) {
    if (P.is_zero()) throw AlgebraError("curve reduction: zero polynomial");
    if (P.degree("lambda") < 1)
        throw AlgebraError("curve reduction: polynomial constant in lambda");
    MultiPoly w = squarefree_part(P, "lambda");
    const MultiPoly lam = MultiPoly::var("lambda");
    const MultiPoly t = MultiPoly::var("t");
    for (const MultiPoly& line :
         {lam, lam - MultiPoly::constant(1), lam - t})
        w = strip_factor(w, line).first;
    if (w.degree("lambda") < 1)
        throw AlgebraError("curve reduction: no non-trivial component");
    return w.unit_normalized();
}

/**
 * Multiplicity partition of the compactified fiber of the non-trivial
 * reduced curve of P over t₀: one part per fiber point (λ = ∞ included),
 * equal to the sum of the ramification indices of the branches there.
 * Parts sum to the degree of the projection.
 */
inline Partition fiber_partition(const MultiPoly& P, TCenter t0) {
    detail::require_numeric_in_geometry(P, "fiber partition");
    const MultiPoly curve = nontrivial_reduced_curve(P);
    const int d = curve.degree("lambda");
    const MultiPoly lam = MultiPoly::var("lambda");
    const MultiPoly t = MultiPoly::var("t");

    MultiPoly chart = curve;
    if (t0 == TCenter::One)
        chart = chart.substitute("t", t + MultiPoly::constant(1));
    else if (t0 == TCenter::Infinity)
        chart = chart.substitute_cleared("t", MultiPoly::constant(1), t).first;

    const MultiPoly fiber = chart.substitute("t", Rational(0));
    if (fiber.is_zero())
        throw AlgebraError("fiber partition: fiber line on the curve");

    std::vector<int> parts;
    if (fiber.degree("lambda") > 0) {
        for (const auto& [factor, mult] :
             squarefree_decomposition(fiber, "lambda")) {
            const auto rats = rational_roots(factor, "lambda");
            const int irrational =
                factor.degree("lambda") - static_cast<int>(rats.size());
            if (mult == 1) {
                for (int k = 0;
                     k < irrational + static_cast<int>(rats.size()); ++k)
                    parts.push_back(1);
                continue;
            }
            if (irrational > 0)
                throw AlgebraError(
                    "fiber partition: repeated irrational fiber point");
            for (const auto& r : rats) {
                const MultiPoly local = chart.substitute(
                    "lambda", lam + MultiPoly::constant(r));
                int total = 0;
                for (const auto& b :
                     detail::branches_at_origin(local, 0, true)) {
                    parts.push_back(b.index);
                    total += b.index;
                }
                if (total != mult)
                    throw AlgebraError(
                        "fiber partition: branch indices disagree with "
                        "multiplicity");
            }
        }
    }

    const int at_infinity = d - fiber.degree("lambda");
    if (at_infinity == 1) {
        parts.push_back(1);
    } else if (at_infinity >= 2) {
        const MultiPoly inf_chart =
            chart.substitute_cleared("lambda", MultiPoly::constant(1), lam)
                .first;
        int total = 0;
        for (const auto& b :
             detail::branches_at_origin(inf_chart, 0, true)) {
            parts.push_back(b.index);
            total += b.index;
        }
        if (total != at_infinity)
            throw AlgebraError(
                "fiber partition: branches at infinity disagree with the "
                "degree drop");
    }

    std::sort(parts.begin(), parts.end());
    Partition out{std::move(parts)};
    if (out.sum() != d)
        throw AlgebraError("fiber partition: parts do not sum to the degree");
    return out;
}

// ---------------------------------------------------------------------------
// Discriminant obstruction
// ---------------------------------------------------------------------------

struct BelyiResult {
    bool belyi = false;
    MultiPoly extra_factor;  // nonconstant only when belyi is false
};

/**
 * Does every critical value of the projection (λ, t) → t lie in {0, 1, ∞}?
 * Computes the discriminant of P in λ (a polynomial in t that also accounts
 * for ramification at λ = ∞, being the binary-form discriminant), strips
 * all factors of t and t−1, and reports whether a nonzero constant remains.
 */
inline BelyiResult belyi_check(const MultiPoly& P) {
    if (P.degree("lambda") < 2)
        throw AlgebraError("belyi check: fiber degree must be at least 2");
    MultiPoly delta = discriminant(P, "lambda");
    if (delta.is_zero())
        throw AlgebraError("belyi check: curve not squarefree in lambda");
    const MultiPoly t = MultiPoly::var("t");
    delta = strip_factor(delta, t).first;
    delta = strip_factor(delta, t - MultiPoly::constant(1)).first;
    if (delta.is_constant()) return {true, MultiPoly::constant(1)};
    return {false, delta.unit_normalized()};
}

// ---------------------------------------------------------------------------
// Faces of the coincidence polyhedron W
// ---------------------------------------------------------------------------

struct FaceSpec {
    std::string id;  // canonical text, e.g. "b0=b2,b3=0" or "generic"
    std::vector<std::pair<int, int>> equalities;
    std::vector<int> vanishings;
};

namespace detail {

/// Classes of indices identified by the face, with a vanishing flag each.
struct FaceClasses {
    std::array<int, 4> cls{};       // class id per index
    std::array<bool, 4> zero{};     // per index: class forced to 0
};

inline FaceClasses face_classes(const FaceSpec& face) {
    FaceClasses fc;
    std::array<int, 4> parent{0, 1, 2, 3};
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [i, j] : face.equalities) {
        if (i < 0 || i > 3 || j < 0 || j > 3)
            throw AlgebraError("face: index out of range");
        parent[find(i)] = find(j);
    }
    std::array<bool, 4> zero_root{};
    for (int k : face.vanishings) {
        if (k < 0 || k > 3) throw AlgebraError("face: index out of range");
        zero_root[find(k)] = true;
    }
    for (int k = 0; k < 4; ++k) {
        fc.cls[k] = find(k);
        fc.zero[k] = zero_root[find(k)];
    }
    return fc;
}

}  // namespace detail

/**
 * Parse a face id such as "generic", "b0=b2", "b0=b1=b2,b3=0",
 * "b2=b3=0,b0=b1" into its relation set.
 */
inline FaceSpec parse_face(const std::string& id) {
    FaceSpec face;
    face.id = id;
    if (id == "generic") return face;
    std::vector<std::string> clauses;
    std::string cur;
    for (char ch : id) {
        if (ch == ',') {
            clauses.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    if (!cur.empty()) clauses.push_back(cur);
    if (clauses.empty()) throw AlgebraError("face parse: empty face id");
    for (const auto& clause : clauses) {
        std::vector<std::string> tokens;
        std::string tok;
        for (char ch : clause) {
            if (ch == '=') {
                tokens.push_back(tok);
                tok.clear();
            } else {
                tok += ch;
            }
        }
        tokens.push_back(tok);
        if (tokens.size() < 2)
            throw AlgebraError("face parse: clause needs an equality");
        bool vanishes = false;
        std::vector<int> indices;
        for (const auto& tkn : tokens) {
            if (tkn == "0") {
                vanishes = true;
            } else if (tkn.size() == 2 && tkn[0] == 'b' && tkn[1] >= '0' &&
                       tkn[1] <= '3') {
                indices.push_back(tkn[1] - '0');
            } else {
                throw AlgebraError("face parse: unexpected token '" + tkn +
                                   "'");
            }
        }
        if (indices.empty())
            throw AlgebraError("face parse: clause without coefficients");
        for (std::size_t k = 0; k + 1 < indices.size(); ++k)
            face.equalities.emplace_back(indices[k], indices[k + 1]);
        if (vanishes)
            for (int ix : indices) face.vanishings.push_back(ix);
    }
    return face;
}

/**
 * Deterministic sample on the open face: satisfies exactly the face's
 * relations and no other relation of W.  Integers in [−50, 50] drawn from
 * a seeded xorshift generator, with rejection of coincidental relations.
 */
inline BetaQuadruple sample_face_beta(const FaceSpec& face,
                                      std::uint64_t seed) {
    const auto fc = detail::face_classes(face);
    std::set<int> free_classes;
    for (int k = 0; k < 4; ++k)
        if (!fc.zero[k]) free_classes.insert(fc.cls[k]);
    if (free_classes.empty())
        throw AlgebraError("face sample: face forces the zero quadruple");

    std::uint64_t state = seed ^ 0x9E3779B97F4A7C15ULL;
    if (state == 0) state = 0x2545F4914F6CDD1DULL;
    auto next = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    auto draw = [&]() {
        return static_cast<long long>(next() % 101) - 50;
    };

    for (int attempt = 0; attempt < 4096; ++attempt) {
        std::map<int, long long> value;
        for (int c : free_classes) value[c] = draw();
        bool ok = true;
        for (const auto& [c, v] : value)
            if (v == 0) ok = false;
        for (auto a = value.begin(); ok && a != value.end(); ++a)
            for (auto b = std::next(a); b != value.end(); ++b)
                if (a->second == b->second) {
                    ok = false;
                    break;
                }
        if (!ok) continue;
        std::array<Rational, 4> beta{};
        for (int k = 0; k < 4; ++k)
            beta[k] = fc.zero[k] ? Rational(0)
                                 : Rational(value.at(fc.cls[k]));
        return Quadruple::of_rationals(beta[0], beta[1], beta[2], beta[3]);
    }
    throw AlgebraError("face sample: rejection sampling failed");
}

/**
 * The image of an open face under a symmetry element: indices i, j are
 * identified in the image exactly when their pull-backs are identified in
 * the source, and vanish when their pull-backs vanish.
 */
inline FaceSpec face_image(const S4Element& g, const FaceSpec& face) {
    const auto fc = detail::face_classes(face);
    // (g·β)_i = β_{perm[i]}, so membership of g·β in the image face reads
    // relations off the permuted indices.
    FaceSpec out;
    std::vector<std::vector<int>> groups;
    std::array<bool, 4> used{};
    for (int i = 0; i < 4; ++i) {
        if (used[i]) continue;
        std::vector<int> grp{i};
        used[i] = true;
        for (int j = i + 1; j < 4; ++j)
            if (!used[j] && fc.cls[g.perm[i]] == fc.cls[g.perm[j]]) {
                grp.push_back(j);
                used[j] = true;
            }
        groups.push_back(std::move(grp));
    }
    std::string id;
    bool any = false;
    for (const auto& grp : groups) {
        const bool zero = fc.zero[g.perm[grp.front()]];
        if (grp.size() < 2 && !zero) continue;
        if (any) id += ",";
        any = true;
        for (std::size_t k = 0; k < grp.size(); ++k) {
            if (k) id += "=";
            id += "b" + std::to_string(grp[k]);
        }
        if (zero) id += "=0";
        for (std::size_t k = 0; k + 1 < grp.size(); ++k)
            out.equalities.emplace_back(grp[k], grp[k + 1]);
        if (zero)
            for (int ix : grp) out.vanishings.push_back(ix);
    }
    out.id = any ? id : "generic";
    return out;
}

/// Elements of the symmetry group preserving the open face setwise.
inline Subgroup face_stabilizer(const FaceSpec& face) {
    const auto fc = detail::face_classes(face);
    std::vector<S4Element> members;
    for (const auto& g : S4Group::instance().elements()) {
        bool ok = true;
        for (int i = 0; i < 4 && ok; ++i) {
            if (fc.zero[i] != fc.zero[g.perm[i]]) ok = false;
            for (int j = i + 1; j < 4 && ok; ++j)
                if ((fc.cls[i] == fc.cls[j]) !=
                    (fc.cls[g.perm[i]] == fc.cls[g.perm[j]]))
                    ok = false;
        }
        if (ok) members.push_back(g);
    }
    return make_subgroup(members);
}

}  // namespace pvi
