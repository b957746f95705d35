#include <gtest/gtest.h>

#include <random>

#include "ninepoint/poly.hpp"
#include "ninepoint/upoly.hpp"

using namespace ninepoint;

namespace {

Poly P(const char* s) { return Poly::parse(s); }

UPoly up(std::initializer_list<long> coeffs_low_to_high) {
    std::vector<Rational> v;
    for (long c : coeffs_low_to_high) v.emplace_back(c);
    return UPoly(std::move(v));
}

TEST(PolyGrammar, ParseAndPrint) {
    Poly p = P("3/2*x^2*y - z^3");
    EXPECT_EQ(p.str(), "3/2*x^2*y - z^3");
    EXPECT_EQ(P("x^2+y^2-z^2").str(), "x^2 + y^2 - z^2");
    EXPECT_EQ(P(" - x + 2y "), P("2*y-x"));
    EXPECT_EQ(P("3x^2"), P("3*x^2"));
    EXPECT_EQ(P("(x+y)^2"), P("x^2+2*x*y+y^2"));
    EXPECT_THROW(P("x y"), Error);   // implicit var*var multiplication forbidden
    EXPECT_THROW(P("2*"), Error);
    EXPECT_THROW(P("w"), Error);
    // parse(print(p)) round-trips
    Poly q = P("7*x^3 - 2/5*x*y*z + z^2 - 1");
    EXPECT_EQ(Poly::parse(q.str()), q);
}

TEST(PolyGrammar, Homogeneity) {
    EXPECT_TRUE(P("x^2+y^2-z^2").is_homogeneous());
    EXPECT_FALSE(P("x^2+y").is_homogeneous());
    EXPECT_EQ(P("x*y*z").total_degree(), 3);
    EXPECT_EQ(P("x^2+y^2-z^2").num_vars(), 3);
}

TEST(PolyGcd, SpecExamples) {
    // gcd(x^2-y^2, x-y) = x-y
    EXPECT_EQ(gcd(P("x^2-y^2"), P("x-y")), P("x-y"));
    // gcd(x^2+y^2, x+y) = 1
    EXPECT_EQ(gcd(P("x^2+y^2"), P("x+y")), P("1"));
    // gcd(xyz(x+y+z), xy) = xy, confirmed by the division oracle
    Poly a = P("x*y*z*(x+y+z)");
    Poly b = P("x*y");
    Poly g = gcd(a, b);
    EXPECT_EQ(g, P("x*y"));
    EXPECT_TRUE(try_exact_div(a, g).has_value());
    EXPECT_TRUE(try_exact_div(b, g).has_value());
    // gcd of zeros is zero
    EXPECT_TRUE(gcd(Poly(), Poly()).is_zero());
}

TEST(PolyGcd, RandomDivisionOracle) {
    std::mt19937_64 rng(42);
    auto rand_poly = [&](int deg) {
        Poly p;
        for (int i = 0; i < 4; ++i) {
            Mono m;
            unsigned left = static_cast<unsigned>(deg);
            for (int v = 0; v < 3; ++v) {
                m.e[static_cast<size_t>(v)] = rng() % (left + 1);
                left -= m.e[static_cast<size_t>(v)];
            }
            long c = static_cast<long>(rng() % 11) - 5;
            p += Poly::monomial(m, Rational(c));
        }
        return p;
    };
    for (int trial = 0; trial < 40; ++trial) {
        Poly f = rand_poly(2), g = rand_poly(2), h = rand_poly(1);
        if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
        Poly gg = gcd(f * h, g * h);
        // h divides the gcd, and the gcd divides both products
        ASSERT_FALSE(gg.is_zero());
        EXPECT_TRUE(try_exact_div(gg, gcd(h, gg)).has_value());
        EXPECT_TRUE(try_exact_div(f * h, gg).has_value());
        EXPECT_TRUE(try_exact_div(g * h, gg).has_value());
        EXPECT_TRUE(try_exact_div(gg, h.canonical()).has_value());
    }
}

TEST(Resultant, SpecExamples) {
    // res(x^2 - t^2, x - t, t) = 0 since x - t divides x^2 - t^2   (t = z here)
    // use z as the eliminated variable
    EXPECT_TRUE(resultant(P("x^2-z^2"), P("x-z"), 2).is_zero());
    // res(t^2 - x, t - y, t) = y^2 - x
    EXPECT_EQ(resultant(P("z^2-x"), P("z-y"), 2).canonical(), P("y^2-x").canonical());
    // res(t^2 + 1, t - x, t) = x^2 + 1
    EXPECT_EQ(resultant(P("z^2+1"), P("z-x"), 2).canonical(), P("x^2+1").canonical());
    EXPECT_THROW(resultant(Poly(), P("x"), 0), Error);
}

TEST(Resultant, Multiplicativity) {
    // resultant(p*r, q, v) = resultant(p,q,v) * resultant(r,q,v) exactly
    // (Sylvester convention; no extra sign with this orientation)
    std::mt19937_64 rng(7);
    auto rand_in_z = [&](int deg) {
        Poly p;
        for (int k = 0; k <= deg; ++k) {
            long c = static_cast<long>(rng() % 9) - 4;
            Mono m;
            m.e[2] = static_cast<unsigned>(k);
            m.e[0] = rng() % 2;
            p += Poly::monomial(m, Rational(c));
        }
        return p;
    };
    int done = 0;
    for (int trial = 0; trial < 60 && done < 25; ++trial) {
        Poly p = rand_in_z(2), r = rand_in_z(2), q = rand_in_z(2);
        if (p.degree_in(2) < 1 || r.degree_in(2) < 1 || q.degree_in(2) < 1) continue;
        Poly lhs = resultant(p * r, q, 2);
        Poly rhs = resultant(p, q, 2) * resultant(r, q, 2);
        EXPECT_EQ(lhs, rhs);
        ++done;
    }
    EXPECT_GE(done, 20);
}

TEST(Squarefree, SpecExamples) {
    // (x-1)^2 (x+2) -> (x-1)(x+2)
    Poly p = P("(x-1)^2*(x+2)");
    EXPECT_EQ(squarefree_part(p).canonical(), P("(x-1)*(x+2)").canonical());
    EXPECT_EQ(squarefree_part(P("x^2+1")), P("x^2+1"));
    // multivariate: x^2 y^3 -> x y
    EXPECT_EQ(squarefree_part(P("x^2*y^3")), P("x*y"));
}

TEST(Squarefree, TangentCirclePencilDegreeDrop) {
    // Two internally tangent circles: unit circle and radius-3 circle at
    // (2,0) through (-1,0)... take x^2+y^2-1 and (x-2)^2+y^2-9: tangent at
    // (-1,0). The pencil determinant cubic must acquire a repeated root.
    UPoly det_cubic;
    {
        // det(l*M1 + M2) with M1 = diag-ish unit circle, M2 = circle c=(2,0), r=3
        // computed symbolically below via 3x3 determinant expansion
        // M1 = [[1,0,0],[0,1,0],[0,0,-1]]
        // M2 = [[1,0,-2],[0,1,0],[-2,0,-5]]
        // det(l M1 + M2) = (l+1)^2(-l-5) - 4(l+1)
        UPoly l = UPoly::variable();
        UPoly a = l + UPoly(1);
        UPoly b = -l - UPoly(5);
        det_cubic = a * a * b - UPoly(4) * a;
    }
    UPoly sf = squarefree_part(det_cubic);
    EXPECT_LT(sf.deg(), det_cubic.deg());
    UPoly g = gcd(det_cubic, det_cubic.derivative());
    EXPECT_EQ(g.deg(), 1);  // a single double root
}

TEST(Sturm, SpecExamples) {
    // x^2 - 2 on (0, 2): one interval containing sqrt(2)
    UPoly p = up({-2, 0, 1});
    auto iv = isolate_roots(p, Rational(0), Rational(2));
    ASSERT_EQ(iv.size(), 1u);
    EXPECT_LT(iv[0].lo, Rational(15, 10));
    EXPECT_GT(iv[0].hi, Rational(14, 10));
    // x^2 + 1: no real roots
    EXPECT_TRUE(isolate_roots(up({1, 0, 1}), Rational(-10), Rational(10)).empty());
    // x^3 - x on (-2, 2): three intervals around -1, 0, 1
    auto iv3 = isolate_roots(up({0, -1, 0, 1}), Rational(-2), Rational(2));
    ASSERT_EQ(iv3.size(), 3u);
    for (int k = 0; k < 3; ++k) {
        Rational root(k - 1);
        EXPECT_LE(iv3[static_cast<size_t>(k)].lo, root);
        EXPECT_GE(iv3[static_cast<size_t>(k)].hi, root);
    }
    EXPECT_THROW(isolate_roots(UPoly(), Rational(0), Rational(1)), Error);
}

TEST(Sturm, IntervalCountMatchesVariationDifference) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rational> c;
        int deg = 2 + static_cast<int>(rng() % 4);
        for (int i = 0; i <= deg; ++i) c.emplace_back(static_cast<long>(rng() % 21) - 10);
        UPoly p(std::move(c));
        if (p.deg() < 1) continue;
        UPoly sf = squarefree_part(p);
        if (sf.deg() < 1) continue;
        Rational lo(-20), hi(20);
        if (sf.eval(lo) == 0 || sf.eval(hi) == 0) continue;
        auto chain = sturm_chain(sf);
        int expected = count_roots_halfopen(chain, lo, hi);
        auto iv = isolate_roots(sf, lo, hi);
        EXPECT_EQ(static_cast<int>(iv.size()), expected);
    }
}

TEST(Sturm, EndpointRoots) {
    // roots at interval endpoints come back as exact point intervals
    UPoly p = up({0, -1, 0, 1});  // x(x-1)(x+1)
    auto iv = isolate_roots(p, Rational(-1), Rational(1));
    ASSERT_EQ(iv.size(), 3u);
    EXPECT_TRUE(iv.front().exact());
    EXPECT_TRUE(iv.back().exact());
}

TEST(RootTools, RationalRootsAndRefinement) {
    // (2x-3)(x+5)(x^2+1)
    UPoly p = up({3, -2}) * up({5, 1}) * up({1, 0, 1});
    p = -p;
    auto roots = rational_roots(p);
    ASSERT_EQ(roots.size(), 2u);
    EXPECT_EQ(roots[0], Rational(-5));
    EXPECT_EQ(roots[1], Rational(3, 2));
    // refined interval of sqrt(2) contains it with tiny width
    UPoly q = up({-2, 0, 1});
    auto iv = isolate_roots(q, Rational(0), Rational(2));
    auto r = refine_interval(q, iv[0], Rational(Int(1), Int(1) << 80));
    EXPECT_LE(r.hi - r.lo, Rational(Int(1), Int(1) << 80));
    BigFloat bf = root_to_bigfloat(q, iv[0], 128);
    BigFloat resid = bf * bf - BigFloat::from_long(2, 128);
    EXPECT_TRUE(resid.contains_zero());
}

TEST(RootTools, SignAtAlgebraicNumber) {
    UPoly p = up({-2, 0, 1});  // sqrt(2)
    auto iv = isolate_roots(p, Rational(0), Rational(2))[0];
    // sign of (x^2 - 2) at sqrt2 is 0
    EXPECT_EQ(sign_at_root(p, p, iv), 0);
    // sign of (x - 1) at sqrt2 is +
    EXPECT_EQ(sign_at_root(up({-1, 1}), p, iv), 1);
    // sign of (x - 3/2) at sqrt2 is -
    EXPECT_EQ(sign_at_root(UPoly(std::vector<Rational>{Rational(-3, 2), 1}), p, iv), -1);
    // sign of 3(x^2-2) at sqrt2 is 0 via gcd path
    EXPECT_EQ(sign_at_root(p * Rational(3), p, iv), 0);
}

TEST(RootTools, QuadraticRootsOverQuadExt) {
    auto [r1, r2] = quadratic_roots(Rational(1), Rational(-2), Rational(-1));
    // x^2 - 2x - 1: roots 1 +- sqrt2
    EXPECT_EQ(r1, QuadExt(Rational(1), Rational(-1), Int(2)));
    EXPECT_EQ(r2, QuadExt(Rational(1), Rational(1), Int(2)));
    auto [c1, c2] = quadratic_roots(Rational(1), Rational(0), Rational(1));
    EXPECT_FALSE(c1.is_real());
    EXPECT_EQ(c1 * c2, QuadExt(1));
}

TEST(RootTools, QuarticSplit) {
    // (x^2 - 2)(x^2 - 3): biquadratic split
    UPoly p = up({-2, 0, 1}) * up({-3, 0, 1});
    auto s = split_quartic(p);
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(s->first * s->second, p);
    // (x^2+x+1)(x^2-x+3): general split via the resolvent
    UPoly q = up({1, 1, 1}) * up({3, -1, 1});
    auto s2 = split_quartic(q);
    ASSERT_TRUE(s2.has_value());
    EXPECT_EQ(s2->first * s2->second, q);
    // irreducible quartic x^4 + x + 1 has no rational quadratic split
    EXPECT_FALSE(split_quartic(up({1, 1, 0, 0, 1})).has_value());
}

TEST(UPolyBasics, Algebra) {
    UPoly p = up({1, 2, 1});  // (x+1)^2
    EXPECT_EQ(gcd(p, p.derivative()).deg(), 1);
    EXPECT_EQ(squarefree_part(p), up({1, 1}));
    auto [q, r] = divmod(up({-1, 0, 0, 1}), up({-1, 1}));
    EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(q, up({1, 1, 1}));
    EXPECT_EQ(p.shift(Rational(1)), up({4, 4, 1}));
    EXPECT_EQ(resultant(up({-2, 0, 1}), up({-3, 0, 1})), Rational(1));
    EXPECT_EQ(discriminant(up({-2, 0, 1})), Rational(8));
    EXPECT_EQ(discriminant(up({1, 2, 1})), Rational(0));
}

TEST(PolyOps, SubstituteAndDerive) {
    Poly p = P("x^2+y^2-z^2");
    std::array<Poly, 3> recip = {P("y*z"), P("x*z"), P("x*y")};
    Poly img = p.substitute(recip);
    EXPECT_EQ(img.canonical(), P("y^2*z^2 + x^2*z^2 - x^2*y^2").canonical());
    EXPECT_EQ(p.derivative(0), P("2*x"));
    EXPECT_EQ(P("x*y*z").eval_var(2, Rational(5)), P("5*x*y"));
}

TEST(PolyOps, DetAndHomogeneous) {
    std::vector<std::vector<Poly>> m = {
        {P("x"), P("y")},
        {P("z"), P("x")},
    };
    EXPECT_EQ(poly_det(m), P("x^2 - y*z"));
}

}  // namespace
