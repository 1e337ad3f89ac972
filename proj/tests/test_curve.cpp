#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <string>
#include <vector>

#include "pvi/curve.hpp"
#include "pvi/serialize.hpp"

using namespace pvi;

namespace {

MultiPoly P(const std::string& text) { return parse_poly(text); }

AlphaQuadruple quad(const std::string& q0, const std::string& q1,
                    const std::string& q2, const std::string& q3) {
    return AlphaQuadruple(RatFunc(P(q0)), RatFunc(P(q1)), RatFunc(P(q2)),
                          RatFunc(P(q3)));
}

AlphaQuadruple rquad(const Rational& q0, const Rational& q1, const Rational& q2,
                     const Rational& q3) {
    return Quadruple::of_rationals(q0, q1, q2, q3);
}

}  // namespace

TEST_CASE("curve polynomial from a coefficient quadruple") {
    SECTION("single surviving term") {
        const MultiPoly n = build_curve_poly(rquad(1, 0, 0, 0));
        CHECK(n == P("lambda^2*(lambda-1)^2*(lambda-t)^2"));
    }
    SECTION("degree bounds, symbolically") {
        const MultiPoly n = symbolic_curve_poly();
        CHECK(n.degree("lambda") == 6);
        CHECK(n.degree("t") == 3);
    }
    SECTION("boundary values, symbolically") {
        const MultiPoly n = symbolic_curve_poly();
        CHECK(n.substitute("lambda", Rational(0)) == P("-b1*t^3"));
        CHECK(n.substitute("lambda", Rational(1)) == P("b2*(t-1)^3"));
        CHECK(n.substitute("lambda", MultiPoly::var("t")) ==
              P("-b3*t^3*(t-1)^3"));
    }
    SECTION("zero quadruple is rejected") {
        CHECK_THROWS_AS(build_curve_poly(rquad(0, 0, 0, 0)), AlgebraError);
    }
}

TEST_CASE("implicit differentiation along a curve") {
    SECTION("square root") {
        const auto [lp, lpp] = implicit_derivatives(P("lambda^2 - t"));
        CHECK(lp == RatFunc(P("1"), P("2*lambda")));
        CHECK(lpp == RatFunc(P("-1"), P("4*lambda^3")));
    }
    SECTION("linear curve") {
        const auto [lp, lpp] = implicit_derivatives(P("lambda - t"));
        CHECK(lp == RatFunc(Rational(1)));
        CHECK(lpp.is_zero());
    }
    SECTION("shifted square root") {
        const auto [lp, lpp] = implicit_derivatives(P("lambda^2 - 2*lambda + t"));
        CHECK(lp == RatFunc(P("1"), P("2 - 2*lambda")));
        CHECK(lpp == RatFunc(P("1"), P("4*(1-lambda)^3")));
    }
    SECTION("constant in lambda is rejected") {
        CHECK_THROWS_AS(implicit_derivatives(P("t^2 - t")),
                        CurvePreconditionError);
    }
}

TEST_CASE("residue decides whether a curve solves the equation") {
    SECTION("square-root curve solves its printed plane") {
        CHECK(pvi_residue(P("lambda^2 - t"), quad("a", "a", "b", "b")).is_zero());
        CHECK(pvi_residue(P("lambda^2 - t"),
                          rquad(Rational(1, 8), Rational(1, 8), Rational(1, 18),
                                Rational(1, 18)))
                  .is_zero());
    }
    SECTION("square-root curve rejects a quadruple off the plane") {
        CHECK_FALSE(pvi_residue(P("lambda^2 - t"), rquad(1, 0, 0, 0)).is_zero());
    }
    SECTION("cubic catalog curve solves its printed line") {
        CHECK(pvi_residue(P("2*lambda^3 - 3*t*lambda^2 + t^2"),
                          quad("4*a", "a", "1/18", "a"))
                  .is_zero());
    }
    SECTION("precondition violations are typed errors") {
        CHECK_THROWS_AS(pvi_residue(P("lambda*(lambda-1)"), rquad(0, 0, 0, 0)),
                        CurvePreconditionError);
        CHECK_THROWS_AS(
            pvi_residue(P("(lambda-t)*(lambda+t)"), rquad(0, 0, 0, 0)),
            CurvePreconditionError);
        CHECK_THROWS_AS(pvi_residue(P("(lambda+1)^2"), rquad(0, 0, 0, 0)),
                        CurvePreconditionError);
    }
}

TEST_CASE("solving for the full parameter subspace") {
    SECTION("square-root curve: the (a,a,b,b) plane") {
        const AffineSubspace s = solve_alpha_subspace(P("lambda^2 - t"));
        CHECK(s.dimension() == 2);
        CHECK(s == pattern_subspace(quad("a", "a", "b", "b")));
        CHECK(s.pattern_string() == "(a, a, b, b)");
    }
    SECTION("quartic catalog curve: the (a,1/8,a,a) line") {
        const MultiPoly p = P(
            "lambda^4 - 2*t*lambda^3 - 2*lambda^3 + 6*t*lambda^2 "
            "- 2*t^2*lambda - 2*t*lambda + t^3 - t^2 + t");
        const AffineSubspace s = solve_alpha_subspace(p);
        CHECK(s.dimension() == 1);
        CHECK(s == pattern_subspace(quad("a", "1/8", "a", "a")));
    }
    SECTION("cubic catalog curve: the (4a,a,1/18,a) line") {
        const AffineSubspace s =
            solve_alpha_subspace(P("2*lambda^3 - 3*t*lambda^2 + t^2"));
        CHECK(s.dimension() == 1);
        CHECK(s == pattern_subspace(quad("4*a", "a", "1/18", "a")));
    }
    SECTION("a parabola in t pins a single alpha point") {
        // Hand check: lambda = t^2 gives lambda' = 2t, lambda'' = 2, and the
        // right-hand side collapses to 2 exactly at (0, 0, 2, 1/2).
        const AffineSubspace s = solve_alpha_subspace(P("lambda - t^2"));
        CHECK(s.dimension() == 0);
        CHECK(s == pattern_subspace(quad("0", "0", "2", "1/2")));
    }
}

TEST_CASE("membership in the solved subspace matches the residue test") {
    const MultiPoly p = P(
        "lambda^4 - 2*t*lambda^3 - 2*lambda^3 + 6*t*lambda^2 "
        "- 2*t^2*lambda - 2*t*lambda + t^3 - t^2 + t");
    const AffineSubspace s = solve_alpha_subspace(p);
    // Walk the line (a, 1/8, a, a) and a few off-line perturbations.
    const Rational eighth(1, 8);
    for (long k = -2; k <= 2; ++k) {
        const Rational a(k, 3);
        const AlphaQuadruple on = rquad(a, eighth, a, a);
        CHECK(s.contains({a, eighth, a, a}));
        CHECK(pvi_residue(p, on).is_zero());
        const AlphaQuadruple off = rquad(a, eighth + Rational(1, 7), a, a);
        CHECK_FALSE(s.contains({a, eighth + Rational(1, 7), a, a}));
        CHECK_FALSE(pvi_residue(p, off).is_zero());
    }
}

TEST_CASE("residue is affine-linear in the equation parameters") {
    const MultiPoly p = P("2*lambda^3 - 3*t*lambda^2 + t^2");
    const AlphaQuadruple a1 =
        rquad(Rational(1, 2), Rational(-3), Rational(7, 5), Rational(0));
    const AlphaQuadruple a2 =
        rquad(Rational(2), Rational(1, 3), Rational(-1), Rational(5, 4));
    const Rational s(3, 7);
    AlphaQuadruple mix;
    for (int i = 0; i < 4; ++i)
        mix[i] = a1[i] + RatFunc(s) * (a2[i] - a1[i]);
    const MultiPoly r1 = pvi_residue_linear(p, a1);
    const MultiPoly r2 = pvi_residue_linear(p, a2);
    const MultiPoly rm = pvi_residue_linear(p, mix);
    CHECK(rm == r1 + (r2 - r1) * s);
}

TEST_CASE("two solved equations force the curve to divide its quadric") {
    SECTION("plane directions of the square-root curve") {
        // Differences of solved quadruples lie along (u,u,0,0) and (0,0,v,v).
        const MultiPoly n =
            build_curve_poly(quad("u", "u", "v", "v"));
        CHECK(divides(P("lambda^2 - t"), n));
    }
    SECTION("line direction of the quartic") {
        const MultiPoly p = P(
            "lambda^4 - 2*t*lambda^3 - 2*lambda^3 + 6*t*lambda^2 "
            "- 2*t^2*lambda - 2*t*lambda + t^3 - t^2 + t");
        const MultiPoly n = build_curve_poly(rquad(1, 0, 1, 1));
        CHECK(divides(p, n));
    }
    SECTION("line direction of the corrected cubic") {
        const MultiPoly n = build_curve_poly(rquad(4, 1, 1, 0));
        CHECK(divides(P("2*lambda^3 - 3*lambda^2 + t"), n));
        CHECK_FALSE(divides(P("lambda^3 - 3*lambda^2 + t"), n));
    }
}

TEST_CASE("parameterized curves solve over the parameter field") {
    SECTION("a*lambda^2 - b*t sweeps the (a,b,1/8,1/8) plane") {
        const AffineSubspace s =
            solve_alpha_subspace(P("a*lambda^2 - b*t"));
        CHECK(s.dimension() == 2);
        CHECK(s == pattern_subspace(quad("a", "b", "1/8", "1/8")));
    }
    SECTION("a*(lambda-t)^2 - b*t*(lambda-1)^2 sweeps (1/8,1/8,a,b)") {
        const AffineSubspace s = solve_alpha_subspace(
            P("a*(lambda-t)^2 - b*t*(lambda-1)^2"));
        CHECK(s.dimension() == 2);
        CHECK(s == pattern_subspace(quad("1/8", "1/8", "a", "b")));
    }
    SECTION("specializing the parameters keeps the pattern point solvable") {
        const std::vector<std::pair<Rational, Rational>> samples = {
            {2, 3}, {5, 7}, {-3, 11}, {1, 1}};
        for (const auto& [av, bv] : samples) {
            const MultiPoly special = P("a*lambda^2 - b*t")
                                          .substitute("a", av)
                                          .substitute("b", bv);
            const AffineSubspace s = solve_alpha_subspace(special);
            CHECK(s.contains({av, bv, Rational(1, 8), Rational(1, 8)}));
            CHECK(pvi_residue(special,
                              rquad(av, bv, Rational(1, 8), Rational(1, 8)))
                      .is_zero());
        }
    }
}

TEST_CASE("pattern subspaces") {
    SECTION("line pattern") {
        const AffineSubspace s = pattern_subspace(quad("4*a", "a", "1/18", "a"));
        CHECK(s.dimension() == 1);
        CHECK(s.contains({Rational(4), Rational(1), Rational(1, 18), Rational(1)}));
        CHECK(s.contains({Rational(0), Rational(0), Rational(1, 18), Rational(0)}));
    }
    SECTION("constant pattern is a point") {
        const AffineSubspace s =
            pattern_subspace(quad("1/8", "1/8", "1/8", "1/8"));
        CHECK(s.dimension() == 0);
    }
    SECTION("non-linear pattern is rejected") {
        CHECK_THROWS_AS(pattern_subspace(quad("a^2", "0", "0", "0")),
                        AlgebraError);
    }
}

TEST_CASE("face factorization identities") {
    for (const auto& id : face_catalog()) {
        INFO(id);
        CHECK(verify_face_factorization(id));
    }
    CHECK_THROWS_AS(verify_face_factorization("no-such-face"), AlgebraError);
}

TEST_CASE("curve family validation") {
    CurveFamily good{"2A", P("lambda^2 - t"), quad("a", "a", "b", "b")};
    CHECK_NOTHROW(good.validate());
    CurveFamily constant_t{"bad", P("lambda^2 - 2"), quad("0", "0", "0", "0")};
    CHECK_THROWS_AS(constant_t.validate(), CurvePreconditionError);
}
