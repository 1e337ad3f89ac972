/**
 * Exact-arithmetic foundation tests: rationals, multivariate polynomials,
 * canonical serialization, pseudo-division / gcd / resultants /
 * discriminants / squarefree structure, reduced rational functions,
 * Möbius substitution, and exact linear algebra with canonical affine
 * subspaces.
 */
#include <catch2/catch_amalgamated.hpp>

#include <pvi/linalg.hpp>
#include <pvi/serialize.hpp>

#include <cstdint>

using namespace pvi;

namespace {

MultiPoly P(const std::string& s) { return parse_poly(s); }

/// Deterministic xorshift64 for reproducible "random" structure tests.
struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

MultiPoly random_poly(Rng& rng, int max_deg = 2, int n_terms = 3) {
    MultiPoly p;
    for (int i = 0; i < n_terms; ++i) {
        int c = rng.range(-5, 5);
        if (c == 0) c = 1;
        p += MultiPoly::constant(c) *
             MultiPoly::var("lambda", rng.range(0, max_deg)) *
             MultiPoly::var("t", rng.range(0, max_deg));
    }
    return p;
}

}  // namespace

// ---------------------------------------------------------------------------
// Rationals
// ---------------------------------------------------------------------------

TEST_CASE("rational helpers") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(rat_pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(rat_sqrt_exact(Rational(9, 4)) == Rational(3, 2));
    CHECK(!rat_sqrt_exact(Rational(2)).has_value());
    CHECK(rat_nth_root_exact(Rational(27, 8), 3) == Rational(3, 2));
    CHECK(!rat_nth_root_exact(Rational(2), 3).has_value());
    CHECK(to_string(Rational(-5, 3)) == "-5/3");
}

// ---------------------------------------------------------------------------
// MultiPoly core
// ---------------------------------------------------------------------------

TEST_CASE("polynomial product and canonical string") {
    const MultiPoly q = P("lambda^2 - t");
    const MultiPoly sq = q * q;
    CHECK(sq == P("lambda^4 - 2*lambda^2*t + t^2"));
    CHECK(sq.str() == "1 * lambda^4 + -2 * lambda^2*t + 1 * t^2");
    CHECK(parse_poly(sq.str()) == sq);  // round trip
    CHECK(sq.degree("lambda") == 4);
    CHECK(sq.degree("t") == 2);
    CHECK(sq.total_degree() == 4);
}

TEST_CASE("canonical variable order puts geometry variables first") {
    const MultiPoly p = P("b0*lambda + a*t + z");
    const std::vector<std::string> expect{"lambda", "t", "a", "z", "b0"};
    CHECK(p.vars() == expect);
    CHECK(var_less("t", "a"));
    CHECK(var_less("z", "b3"));
    CHECK(var_less("b3", "alpha"));  // fixed list before alphabetical tail
}

TEST_CASE("substitution with denominator clearing") {
    const MultiPoly q = P("lambda^2 - t");
    auto [cleared, power] =
        q.substitute_cleared("lambda", MultiPoly::constant(1),
                             MultiPoly::var("u"));
    CHECK(power == 2);
    CHECK(cleared == P("1 - t*u^2"));
    CHECK_THROWS_AS(q.substitute_cleared("lambda", MultiPoly::constant(1),
                                         MultiPoly()),
                    AlgebraError);
}

TEST_CASE("ring axioms on deterministic random polynomials") {
    Rng rng(42);
    for (int i = 0; i < 20; ++i) {
        const MultiPoly a = random_poly(rng);
        const MultiPoly b = random_poly(rng);
        const MultiPoly c = random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a - a == MultiPoly());
    }
}

TEST_CASE("derivative obeys Leibniz") {
    Rng rng(7);
    for (int i = 0; i < 10; ++i) {
        const MultiPoly a = random_poly(rng);
        const MultiPoly b = random_poly(rng);
        CHECK((a * b).derivative("lambda") ==
              a.derivative("lambda") * b + a * b.derivative("lambda"));
    }
}

TEST_CASE("unit normalization") {
    const MultiPoly p = P("lambda^2") * Rational(2, 3) - P("t") * Rational(4);
    CHECK(p.unit_normalized() == P("lambda^2 - 6*t"));
    const MultiPoly n = -P("lambda") + P("t");
    CHECK(n.unit_normalized() == P("lambda - t"));  // leading sign positive
    CHECK(equal_up_to_unit(P("2*lambda - 2*t"), P("-lambda + t")));
    CHECK(!equal_up_to_unit(P("lambda"), P("t")));
}

TEST_CASE("tuple splitting for table parsing") {
    auto parts = split_tuple("(a, 1/8, (1+a), b)");
    REQUIRE(parts.size() == 4);
    CHECK(parts[0] == "a");
    CHECK(parts[1] == "1/8");
    CHECK(parts[2] == "(1+a)");
    CHECK(parts[3] == "b");
}

// ---------------------------------------------------------------------------
// Pseudo-division, exact division, gcd
// ---------------------------------------------------------------------------

TEST_CASE("pseudo-remainder basics") {
    CHECK(prem(P("lambda^2 - t"), P("lambda - 1"), "lambda") == P("1 - t"));
    // lc(B)^(dA-dB+1)·A = Q·B + R with B = 2·lambda:
    // 4(lambda^2 - t) = (2 lambda)(2 lambda) - 4t
    CHECK(prem(P("lambda^2 - t"), P("2*lambda"), "lambda") == P("-4*t"));
    CHECK(prem(P("lambda"), P("lambda^3"), "lambda") == P("lambda"));
}

TEST_CASE("exact division goldens") {
    CHECK(exact_divide(P("lambda^4 - t^2"), P("lambda^2 - t")) ==
          P("lambda^2 + t"));
    CHECK_THROWS_AS(exact_divide(P("lambda^2 - t"), P("lambda - 1")),
                    NotDivisible);
    CHECK(divides(P("lambda - t"), P("lambda^2 - t^2")));
    CHECK(!divides(P("lambda + 1"), P("lambda^2 - t^2")));
}

TEST_CASE("exact division of random products recovers the factor") {
    Rng rng(99);
    for (int i = 0; i < 15; ++i) {
        const MultiPoly p = random_poly(rng);
        MultiPoly q = random_poly(rng);
        if (q.is_zero()) q = P("lambda + 1");
        CHECK(exact_divide(p * q, q) == p);
    }
}

TEST_CASE("factor stripping") {
    const MultiPoly p = P("t^3*(t-1)^2*(t^2+1)");
    auto [r1, k1] = strip_factor(p, P("t"));
    CHECK(k1 == 3);
    auto [r2, k2] = strip_factor(r1, P("t - 1"));
    CHECK(k2 == 2);
    CHECK(r2 == P("t^2 + 1"));
}

TEST_CASE("multivariate gcd") {
    const MultiPoly g = P("lambda^2 - t");
    CHECK(poly_gcd(g * P("lambda + t"), g * P("lambda - 1")) == g);
    CHECK(poly_gcd(P("lambda^2 + 1"), P("t^2 + 1")) == P("1"));
    CHECK(poly_gcd(P("2*t"), P("4*t^2")) == P("t"));  // unit-normalized
    CHECK(poly_gcd(MultiPoly(), P("-3*lambda")) == P("lambda"));
    CHECK(content_wrt(P("2*t*lambda^2 + 4*t^2"), "lambda") == P("t"));
    CHECK(primitive_wrt(P("2*t*lambda^2 + 4*t^2"), "lambda") ==
          P("lambda^2 + 2*t"));
    CHECK(poly_lcm(P("lambda^2 - t"), P("lambda - 1")) ==
          P("(lambda^2 - t)*(lambda - 1)").unit_normalized());
}

// ---------------------------------------------------------------------------
// Resultants and discriminants
// ---------------------------------------------------------------------------

TEST_CASE("resultant goldens match the Sylvester determinant") {
    // Quadratic against its derivative: the Sylvester determinant is -4t.
    const MultiPoly r1 = resultant(P("lambda^2 - t"), P("2*lambda"), "lambda");
    CHECK(r1 == P("-4*t"));
    CHECK(r1 == resultant_sylvester(P("lambda^2 - t"), P("2*lambda"), "lambda"));

    const MultiPoly r2 = resultant(P("lambda - t^2"), P("lambda + t"), "lambda");
    CHECK(r2 == P("t^2 + t"));
    CHECK(r2 == resultant_sylvester(P("lambda - t^2"), P("lambda + t"), "lambda"));

    const MultiPoly r3 =
        resultant(P("a*lambda^2 - b*t"), P("2*a*lambda"), "lambda");
    CHECK(r3 == P("-4*a^2*b*t"));
    CHECK(r3 ==
          resultant_sylvester(P("a*lambda^2 - b*t"), P("2*a*lambda"), "lambda"));

    CHECK_THROWS_AS(resultant(P("t"), P("t + 1"), "lambda"), AlgebraError);
}

TEST_CASE("cascade and determinant resultants agree on random inputs") {
    Rng rng(2024);
    for (int i = 0; i < 12; ++i) {
        MultiPoly p = random_poly(rng, 3, 4);
        MultiPoly q = random_poly(rng, 3, 4);
        if (p.degree("lambda") == 0) p += P("lambda^2");
        if (q.degree("lambda") == 0) q += P("lambda");
        CHECK(resultant(p, q, "lambda") == resultant_sylvester(p, q, "lambda"));
    }
}

TEST_CASE("resultant is multiplicative in the first argument") {
    Rng rng(5);
    for (int i = 0; i < 8; ++i) {
        MultiPoly p = random_poly(rng) + P("lambda");
        MultiPoly q = random_poly(rng) + P("lambda^2");
        MultiPoly r = random_poly(rng) + P("lambda^3");
        CHECK(resultant(p * q, r, "lambda") ==
              resultant(p, r, "lambda") * resultant(q, r, "lambda"));
    }
}

TEST_CASE("discriminant goldens") {
    CHECK(discriminant(P("lambda^2 - t"), "lambda") == P("4*t"));
    CHECK(discriminant(P("lambda^2 - 2*lambda + t"), "lambda") == P("4 - 4*t"));
    // Cubic x^3 + p x + q has discriminant -4p^3 - 27q^2.
    CHECK(discriminant(P("lambda^3 + t*lambda + 1"), "lambda") ==
          P("-4*t^3 - 27"));
}

// ---------------------------------------------------------------------------
// Squarefree structure and rational roots
// ---------------------------------------------------------------------------

TEST_CASE("squarefree decomposition") {
    const MultiPoly f = P("(lambda - 1)^2 * (lambda^2 - t)");
    auto dec = squarefree_decomposition(f, "lambda");
    REQUIRE(dec.size() == 2);
    CHECK(dec[0].first == P("lambda^2 - t"));
    CHECK(dec[0].second == 1);
    CHECK(dec[1].first == P("lambda - 1"));
    CHECK(dec[1].second == 2);
    CHECK(squarefree_part(f, "lambda") ==
          P("(lambda - 1)*(lambda^2 - t)").unit_normalized());

    auto dec2 = squarefree_decomposition(P("3*(2*lambda - 1)^3"), "lambda");
    REQUIRE(dec2.size() == 1);
    CHECK(dec2[0].first == P("2*lambda - 1"));
    CHECK(dec2[0].second == 3);
}

TEST_CASE("rational roots") {
    const MultiPoly f = P("lambda*(2*lambda - 1)*(lambda + 3)");
    auto roots = rational_roots(f, "lambda");
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == Rational(-3));
    CHECK(roots[1] == Rational(0));
    CHECK(roots[2] == Rational(1, 2));
    CHECK(rational_roots(P("lambda^2 + 1"), "lambda").empty());
    CHECK(rational_roots(P("lambda^2 - 2"), "lambda").empty());
    auto scaled = rational_roots(P("(3*lambda - 2)^2 * (lambda - 5)"), "lambda");
    REQUIRE(scaled.size() == 2);
    CHECK(scaled[0] == Rational(2, 3));
    CHECK(scaled[1] == Rational(5));
}

// ---------------------------------------------------------------------------
// Rational functions
// ---------------------------------------------------------------------------

TEST_CASE("rational function reduction and sign normalization") {
    const RatFunc f(P("lambda^2 - t"), P("lambda^4 - t^2"));
    CHECK(f.num() == P("1"));
    CHECK(f.den() == P("lambda^2 + t"));

    // Denominator leading sign flips into the numerator.
    const RatFunc g(P("1"), P("t - lambda^2"));
    CHECK(g.num() == P("-1"));
    CHECK(g.den() == P("lambda^2 - t"));

    // Constant denominators normalize to exactly 1.
    const RatFunc h(P("3*lambda"), P("6"));
    CHECK(h.is_polynomial());
    CHECK(h.num() == P("lambda") * Rational(1, 2));
}

TEST_CASE("rational function arithmetic") {
    const RatFunc x = RatFunc::var("lambda");
    const RatFunc one(Rational(1));
    const RatFunc s = one / (x - one) + one / (x + one);
    CHECK(s.num() == P("2*lambda"));
    CHECK(s.den() == P("lambda^2 - 1"));
    CHECK((s - s).is_zero());
    CHECK(s * (one / s) == one);
    CHECK(x.pow(-2) == one / (x * x));
    CHECK_THROWS_AS(one / RatFunc(), AlgebraError);
}

TEST_CASE("rational function derivative") {
    const RatFunc inv = RatFunc(P("1"), P("lambda"));
    const RatFunc d = inv.derivative("lambda");
    CHECK(d.num() == P("-1"));
    CHECK(d.den() == P("lambda^2"));
    Rng rng(12);
    for (int i = 0; i < 6; ++i) {
        const RatFunc u(random_poly(rng) + P("lambda"), P("lambda + 2"));
        const RatFunc v(random_poly(rng) + P("1"), P("t + 3"));
        CHECK((u * v).derivative("t") ==
              u.derivative("t") * v + u * v.derivative("t"));
    }
}

TEST_CASE("simultaneous substitution differs from sequential when maps mix") {
    // (lambda, t) -> ((t - lambda)/(t - 1), t/(t - 1)) applied to lambda^2 - t
    // must produce the curve lambda^2 - 2 lambda t + t (up to units), which a
    // sequential single-variable substitution would get wrong.
    std::map<std::string, RatFunc> repl{
        {"lambda", RatFunc(P("t - lambda"), P("t - 1"))},
        {"t", RatFunc(P("t"), P("t - 1"))}};
    const RatFunc image = substitute_all(P("lambda^2 - t"), repl);
    CHECK(equal_up_to_unit(image.num(), P("lambda^2 - 2*lambda*t + t")));
}

TEST_CASE("mobius substitution") {
    // lambda -> 1 - lambda, then t -> 1 - t (coefficient-free maps commute).
    const MobiusMap neg_l(RatFunc(Rational(-1)), RatFunc(Rational(1)), RatFunc(),
                          RatFunc(Rational(1)));
    MultiPoly p = mobius_substitute(P("lambda^2 - t"), "lambda", neg_l);
    const MobiusMap neg_t = neg_l;
    p = mobius_substitute(p, "t", neg_t);
    CHECK(equal_up_to_unit(p, P("lambda^2 - 2*lambda + t")));

    CHECK(mobius_substitute(P("lambda^2 - t"), "lambda",
                            MobiusMap::identity()) == P("lambda^2 - t"));

    // Inversion chart in both variables: lambda^2 - t -> t - lambda^2.
    const MobiusMap inv(RatFunc(), RatFunc(Rational(1)), RatFunc(Rational(1)),
                        RatFunc());
    MultiPoly q = mobius_substitute(P("lambda^2 - t"), "lambda", inv);
    q = mobius_substitute(q, "t", inv);
    CHECK(equal_up_to_unit(q, P("lambda^2 - t")));

    // Round trip through a generic map returns the input up to a unit.
    const MobiusMap m(RatFunc(Rational(2)), RatFunc(Rational(1)),
                      RatFunc(Rational(1)), RatFunc(Rational(3)));
    MultiPoly r = mobius_substitute(P("lambda^2 - t"), "lambda", m);
    r = mobius_substitute(r, "lambda", m.inverse());
    CHECK(equal_up_to_unit(r, P("lambda^2 - t")));

    CHECK_THROWS_AS(MobiusMap(RatFunc(Rational(1)), RatFunc(Rational(2)),
                              RatFunc(Rational(2)), RatFunc(Rational(4))),
                    AlgebraError);
}

// ---------------------------------------------------------------------------
// Linear algebra and affine subspaces
// ---------------------------------------------------------------------------

TEST_CASE("exact linear solve over the rationals") {
    using Row = std::vector<Rational>;
    // x + y = 3, x - y = 1  ->  (2, 1)
    auto sol = solve_linear<Rational>({Row{1, 1}, Row{1, -1}}, {3, 1});
    REQUIRE(sol.has_value());
    CHECK(sol->particular == Row{2, 1});
    CHECK(sol->nullspace.empty());

    // Inconsistent.
    CHECK(!solve_linear<Rational>({Row{1, 1}, Row{2, 2}}, {1, 3}).has_value());

    // Underdetermined: x + y + z = 1.
    auto under = solve_linear<Rational>({Row{1, 1, 1}}, {1});
    REQUIRE(under.has_value());
    CHECK(under->nullspace.size() == 2);
}

TEST_CASE("linear solve over the rational-function field") {
    const RatFunc a = RatFunc::var("a");
    const RatFunc one(Rational(1));
    // x + a y = a^2 ; x - y = 0  ->  x = y = a^2/(1+a)
    auto sol = solve_linear<RatFunc>(
        {{one, a}, {one, RatFunc(Rational(-1))}}, {a * a, RatFunc()});
    REQUIRE(sol.has_value());
    const RatFunc expect = (a * a) / (one + a);
    CHECK(sol->particular[0] == expect);
    CHECK(sol->particular[1] == expect);
}

TEST_CASE("affine subspace canonical form") {
    using Pt = std::vector<Rational>;
    const Rational e(1, 8);
    const AffineSubspace line =
        affine_span({Pt{0, e, 0, 0}, Pt{e, e, e, e}});
    CHECK(line.dimension() == 1);
    CHECK(line.base() == Pt{0, e, 0, 0});
    REQUIRE(line.directions().size() == 1);
    CHECK(line.directions()[0] == Pt{1, 0, 1, 1});
    CHECK(line.pattern_string() == "(a, 1/8, a, a)");

    // The same line described differently canonicalizes identically.
    const AffineSubspace line2(Pt{e, e, e, e},
                               {Pt{Rational(2), 0, Rational(2), Rational(2)}});
    CHECK(line == line2);

    CHECK(line.contains(Pt{Rational(1, 4), e, Rational(1, 4), Rational(1, 4)}));
    CHECK(!line.contains(Pt{1, 0, 0, 0}));

    const AffineSubspace plane = affine_span(
        {Pt{0, 0, e, e}, Pt{1, 0, e, e}, Pt{0, 1, e, e}});
    CHECK(plane.dimension() == 2);
    CHECK(plane.contains_subspace(AffineSubspace::point(Pt{5, -3, e, e})));
    CHECK(!plane.contains_subspace(line));

    CHECK(AffineSubspace::empty_space().is_empty());
    CHECK(AffineSubspace::empty_space() == AffineSubspace::empty_space());
    CHECK(AffineSubspace::empty_space() != line);
    CHECK(plane.contains_subspace(AffineSubspace::empty_space()));
}
