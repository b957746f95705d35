#include <gtest/gtest.h>

#include <random>

#include "ninepoint/ninepoint_conic.hpp"
#include "ninepoint/pencil.hpp"
#include "ninepoint/quadrangle.hpp"
#include "ninepoint/triangle.hpp"

using namespace ninepoint;

namespace {

HPoint pt(long x, long y) { return HPoint(Rational(x), Rational(y), Rational(1)); }
Conic C(const char* s) { return conic_from_poly(Poly::parse(s)); }

// Square ordered so that E = AD^BC = (1:0:0), F = (0:1:0), G = (0:0:1).
Quadrangle unit_square_efg() {
    return make_quadrangle(pt(1, 1), pt(1, -1), pt(-1, -1), pt(-1, 1));
}
// Square ordered so the pencil generators are x^2-z^2 and y^2-z^2.
Quadrangle unit_square_sides() {
    return make_quadrangle(pt(1, 1), pt(1, -1), pt(-1, 1), pt(-1, -1));
}
Quadrangle convex_example() {
    return make_quadrangle(pt(0, 0), pt(4, 0), pt(5, 3), pt(1, 4));
}

TEST(Quadrangle, MakeAndFundamentalTriangle) {
    Quadrangle q = unit_square_efg();
    EXPECT_EQ(q.e, HPoint(Rational(1), Rational(0), Rational(0)));
    EXPECT_EQ(q.f, HPoint(Rational(0), Rational(1), Rational(0)));
    EXPECT_EQ(q.g, HPoint(Rational(0), Rational(0), Rational(1)));
    EXPECT_THROW(make_quadrangle(pt(0, 0), pt(1, 0), pt(2, 0), pt(0, 1)), Error);
    EXPECT_THROW(make_quadrangle(pt(0, 0), pt(0, 0), pt(2, 1), pt(0, 1)), Error);
    // right triangle plus its orthocenter duplicates the right-angle vertex
    Triangle rt(pt(0, 0), pt(4, 0), pt(0, 3));
    EXPECT_EQ(orthocenter(rt), pt(0, 0));
    EXPECT_THROW(make_quadrangle(pt(0, 0), pt(4, 0), pt(0, 3), orthocenter(rt)), Error);
    // acute triangle: valid orthogonal quadrangle
    Triangle ac(pt(0, 0), pt(4, 0), pt(1, 3));
    HPoint h = orthocenter(ac);
    Quadrangle oq = make_quadrangle(pt(0, 0), pt(4, 0), pt(1, 3), h);
    EXPECT_TRUE(species(oq).orthogonal);
}

TEST(Quadrangle, GaussLine) {
    Quadrangle q = convex_example();
    auto gl = gauss_line(q);
    EXPECT_FALSE(gl.degenerate);
    EXPECT_EQ(gl.midpoints.size(), 3u);
    for (const auto& m : gl.midpoints) EXPECT_TRUE(incident(m, gl.line));
    // affine equivariance: x -> 2x + 1, y -> y - x
    Mat3<Rational> t;
    t(0, 0) = 2;
    t(0, 2) = 1;
    t(1, 0) = -1;
    t(1, 1) = 1;
    t(2, 2) = 1;
    auto img = [&](const HPoint& p) { return HPoint(t * p.v); };
    Quadrangle q2 = make_quadrangle(img(q.a()), img(q.b()), img(q.c()), img(q.d()));
    auto gl2 = gauss_line(q2);
    // the image of the Gauss line is the Gauss line of the image
    HLine expected(t.adjugate().transpose() * gl.line.v);
    EXPECT_EQ(gl2.line, expected);
    // square: two midpoints remain, flagged
    auto gs = gauss_line(unit_square_efg());
    EXPECT_TRUE(gs.degenerate);
}

TEST(Quadrangle, Species) {
    EXPECT_EQ(species(convex_example()).species, Species::First);
    auto s2 = species(make_quadrangle(pt(0, 0), pt(4, 0), pt(0, 4), pt(1, 1)));
    EXPECT_EQ(s2.species, Species::Second);
    Triangle ac(pt(0, 0), pt(4, 0), pt(1, 3));
    auto so = species(make_quadrangle(pt(0, 0), pt(4, 0), pt(1, 3), orthocenter(ac)));
    EXPECT_EQ(so.species, Species::Second);
    EXPECT_TRUE(so.orthogonal);
    // concyclic: four rational points of the unit circle
    auto cyc = species(make_quadrangle(pt(1, 0), pt(0, 1),
                                       HPoint(Rational(3, 5), Rational(4, 5), Rational(1)),
                                       HPoint(Rational(4, 5), Rational(-3, 5), Rational(1))));
    EXPECT_TRUE(cyc.cyclic);
}

TEST(Pencil, SquareGeneratorsAndNormalForm) {
    Quadrangle q = unit_square_sides();
    Pencil p = pencil_of_quadrangle(q);
    EXPECT_EQ(p.c1, C("x^2-z^2"));
    EXPECT_EQ(p.c2, C("y^2-z^2"));
    // members are p x^2 + q y^2 + r z^2 with p + q + r = 0
    for (long l = -3; l <= 3; ++l)
        for (long m = -3; m <= 3; ++m) {
            if (l == 0 && m == 0) continue;
            Conic member = p.member(Rational(l), Rational(m));
            EXPECT_EQ(member.m(0, 1), Rational(0));
            EXPECT_EQ(member.m(0, 2), Rational(0));
            EXPECT_EQ(member.m(1, 2), Rational(0));
            EXPECT_EQ(member.m(0, 0) + member.m(1, 1) + member.m(2, 2), Rational(0));
            for (const auto& v : q.vertex) EXPECT_TRUE(member.contains(v));
        }
    auto dm = degenerate_members(p);
    EXPECT_EQ(dm.member[2], C("x^2-y^2"));
    // singular points are the fundamental triangle
    std::array<HPoint, 3> fund = q.fundamental_triangle();
    for (const auto& s : dm.singular_point) {
        EXPECT_TRUE(s == fund[0] || s == fund[1] || s == fund[2]);
    }
}

TEST(Pencil, MemberThrough) {
    Pencil p = pencil_of_quadrangle(unit_square_sides());
    EXPECT_EQ(member_through(p, pt(2, 1)), C("y^2-z^2"));
    EXPECT_EQ(member_through(p, pt(0, 0)), C("x^2-y^2"));
    EXPECT_THROW(member_through(p, pt(1, 1)), Error);
}

TEST(Pencil, BasePointPropertyRandom) {
    std::mt19937_64 rng(61);
    int done = 0;
    for (int trial = 0; trial < 300 && done < 60; ++trial) {
        auto rp = [&]() {
            return pt(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 19) - 9);
        };
        HPoint a = rp(), b = rp(), c = rp(), d = rp();
        Quadrangle q;
        try {
            q = make_quadrangle(a, b, c, d);
        } catch (const Error&) {
            continue;
        }
        Pencil p = pencil_of_quadrangle(q);
        for (long k = 0; k < 10; ++k) {
            Conic member = p.member(Rational(static_cast<long>(rng() % 9) - 4),
                                    Rational(static_cast<long>(rng() % 9) + 1));
            for (const auto& v : q.vertex) EXPECT_TRUE(member.contains(v));
        }
        ++done;
    }
    EXPECT_EQ(done, 60);
}

TEST(Pencil, TangentMembersAndDoublePoints) {
    Quadrangle q = unit_square_sides();
    Pencil p = pencil_of_quadrangle(q);
    HLine r(Rational(1), Rational(0), Rational(-3));  // x = 3z
    auto outcome = members_tangent_to(p, r);
    auto* tm = std::get_if<TangentMembers>(&outcome);
    ASSERT_NE(tm, nullptr);
    // both members restricted to r have zero discriminant: contact points on r
    for (int k = 0; k < 2; ++k) {
        EXPECT_TRUE(tm->member[static_cast<size_t>(k)].contains(tm->contact[static_cast<size_t>(k)]));
        QuadExt inc = tm->contact[static_cast<size_t>(k)].v[0] * QuadExt(1) +
                      tm->contact[static_cast<size_t>(k)].v[2] * QuadExt(-3);
        EXPECT_TRUE(inc.is_zero());
    }
    // contact points coincide with the involution double points
    Involution inv = involution_on_line(p, r);
    EXPECT_TRUE(inv.matrix_square_is_identity());
    auto dp = double_points(inv);
    EXPECT_TRUE((dp.point[0] == tm->contact[0] && dp.point[1] == tm->contact[1]) ||
                (dp.point[0] == tm->contact[1] && dp.point[1] == tm->contact[0]));
    // vertex case: r through (1,1)
    HLine rv = join(pt(1, 1), pt(3, 0));
    auto vres = members_tangent_to(p, rv);
    auto* vt = std::get_if<VertexTangency>(&vres);
    ASSERT_NE(vt, nullptr);
    EXPECT_EQ(vt->vertex, pt(1, 1));
    auto lt = line_tangency(vt->member, rv);
    EXPECT_EQ(lt.kind, LineTangency::Tangent);
    EXPECT_EQ(lt.contact.value(), pt(1, 1));
}

TEST(Pencil, InvolutionExamples) {
    // involution t -> -t has fixed points 0 and inf
    Involution neg;
    neg.a = 1;
    neg.b = 0;
    neg.c = 0;
    neg.d = -1;
    neg.basis0 = pt(0, 0);
    neg.basis1 = HPoint(Rational(1), Rational(0), Rational(0));
    EXPECT_TRUE(neg.matrix_square_is_identity());
    UPoly fq = neg.fixed_quadratic();
    // -2t = 0: root t = 0; infinity root from the degree drop
    EXPECT_EQ(fq.deg(), 1);
    // involution t -> 1/t: fixed t = +-1
    Involution rec;
    rec.a = 0;
    rec.b = 1;
    rec.c = 1;
    rec.d = 0;
    rec.basis0 = neg.basis0;
    rec.basis1 = neg.basis1;
    auto r1 = rec.apply(ExtScalar{false, Rational(2)});
    EXPECT_EQ(r1.value, Rational(1, 2));
    UPoly f2 = rec.fixed_quadratic();
    EXPECT_EQ(f2, UPoly(std::vector<Rational>{-1, 0, 1}));
}

TEST(Pencil, DoublePointQuadraticMatchesGammaRestriction) {
    // standard quadrangle, r: x+y+z = 0: fixed-point quadratic proportional
    // to x^2+xy+y^2 after z = -x-y
    Quadrangle q = unit_square_efg();
    Pencil p = pencil_of_quadrangle(q);
    HLine r(Rational(1), Rational(1), Rational(1));
    Involution inv = involution_on_line(p, r);
    auto dp = double_points(inv);
    EXPECT_FALSE(dp.real);
    // restriction of Gamma = yz+zx+xy to r in the same basis
    Conic gamma = C("y*z+z*x+x*y");
    LineRestriction<Rational> lr = restrict_to_line(gamma, r);
    ASSERT_TRUE(lr.p0 == inv.basis0 && lr.p1 == inv.basis1);
    UPoly restr(std::vector<Rational>{lr.a, 2 * lr.b, lr.c});
    // proportional as polynomials
    const UPoly& fq = dp.quadratic;
    ASSERT_EQ(restr.deg(), 2);
    ASSERT_EQ(fq.deg(), 2);
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j)
            EXPECT_EQ(restr.coeff(static_cast<size_t>(i)) * fq.coeff(static_cast<size_t>(j)),
                      restr.coeff(static_cast<size_t>(j)) * fq.coeff(static_cast<size_t>(i)));
}

TEST(Pencil, ParabolaCount) {
    auto pc = parabola_count(pencil_of_quadrangle(convex_example()));
    EXPECT_EQ(pc.count, 2);
    EXPECT_FALSE(pc.degenerate_roots);
    auto pc2 = parabola_count(pencil_of_quadrangle(make_quadrangle(pt(0, 0), pt(4, 0), pt(0, 4), pt(1, 1))));
    EXPECT_EQ(pc2.count, 0);
    // the square's two parabolic parameters are its parallel line pairs:
    // genuinely degenerate members, flagged
    auto pcs = parabola_count(pencil_of_quadrangle(unit_square_sides()));
    EXPECT_EQ(pcs.count, 2);
    EXPECT_TRUE(pcs.degenerate_roots);
}

TEST(Pencil, OrthogonalQuadrangleAllMembersEquilateral) {
    Triangle ac(pt(0, 0), pt(4, 0), pt(1, 3));
    Quadrangle q = make_quadrangle(pt(0, 0), pt(4, 0), pt(1, 3), orthocenter(ac));
    Pencil p = pencil_of_quadrangle(q);
    // trace of the affine part vanishes on both generators, hence everywhere
    EXPECT_EQ(p.c1.m(0, 0) + p.c1.m(1, 1), Rational(0));
    EXPECT_EQ(p.c2.m(0, 0) + p.c2.m(1, 1), Rational(0));
    for (long k = -3; k <= 3; ++k) {
        Conic m = p.member(Rational(k), Rational(1));
        EXPECT_EQ(m.m(0, 0) + m.m(1, 1), Rational(0));
    }
}

TEST(NinePointConic, FormulaOnStandardQuadrangle) {
    Quadrangle q = unit_square_efg();
    for (auto [u, v, w] : {std::array<long, 3>{1, 1, 1}, std::array<long, 3>{1, 2, 5},
                           std::array<long, 3>{2, -3, 7}}) {
        HLine r{Rational(u), Rational(v), Rational(w)};
        Conic expected = conic_from_poly(Rational(u) * Poly::parse("y*z") +
                                         Rational(v) * Poly::parse("x*z") +
                                         Rational(w) * Poly::parse("x*y"));
        EXPECT_EQ(npc_pole_locus(q, r).conic, expected);
        EXPECT_EQ(npc_harmonic_six(q, r).conic, expected);
        EXPECT_EQ(npc_cremona(make_map(q), r).conic, expected);
    }
}

TEST(NinePointConic, ThreeRoutesAgreeRandom) {
    std::mt19937_64 rng(71);
    int done = 0;
    for (int trial = 0; trial < 400 && done < 50; ++trial) {
        auto rp = [&]() {
            return pt(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 19) - 9);
        };
        Quadrangle q;
        try {
            q = make_quadrangle(rp(), rp(), rp(), rp());
        } catch (const Error&) {
            continue;
        }
        HLine r(Rational(static_cast<long>(rng() % 9) - 4), Rational(static_cast<long>(rng() % 9) - 4),
                Rational(static_cast<long>(rng() % 9) + 1));
        bool skip = false;
        for (const auto& v : q.vertex) skip = skip || incident(v, r);
        for (const auto& s : q.fundamental_sides()) skip = skip || s == r;
        for (const auto& s : q.sides()) skip = skip || s == r;
        if (skip) continue;
        NinePointConic n1, n2, n3;
        try {
            n1 = npc_pole_locus(q, r);
            n2 = npc_harmonic_six(q, r);
            n3 = npc_cremona(make_map(q), r);
        } catch (const Error&) {
            continue;
        }
        EXPECT_EQ(n1.conic, n2.conic);
        EXPECT_EQ(n2.conic, n3.conic);
        // nine incidences, exactly
        EXPECT_TRUE(n1.conic.contains(q.e));
        EXPECT_TRUE(n1.conic.contains(q.f));
        EXPECT_TRUE(n1.conic.contains(q.g));
        EXPECT_EQ(n2.harmonic_points.size(), 6u);
        for (const auto& h : n2.harmonic_points) EXPECT_TRUE(n1.conic.contains(h));
        ++done;
    }
    EXPECT_EQ(done, 50);
}

TEST(NinePointConic, DegenerateSquareCase) {
    // square with transversal at infinity: Gamma = xy (the axes), flagged.
    // For the square the infinity line is itself a fundamental side (E and
    // F are directions), so the pole-locus route needs the blow-down flag.
    Quadrangle q = unit_square_efg();
    HLine inf(Rational(0), Rational(0), Rational(1));
    EXPECT_THROW(npc_pole_locus(q, inf), Error);
    auto n = npc_pole_locus(q, inf, true);
    EXPECT_TRUE(n.degenerate);
    EXPECT_EQ(n.conic, C("x*y"));
    auto n2 = npc_harmonic_six(q, inf);
    EXPECT_TRUE(n2.degenerate);
    EXPECT_EQ(n2.conic, C("x*y"));
    // a non-square quadrangle with the infinity transversal goes through the
    // regular sampling path even when Gamma is fine
    Quadrangle qc = convex_example();
    EXPECT_FALSE(npc_pole_locus(qc, inf).degenerate);
}

TEST(NinePointConic, SteinerSpecialization) {
    // orthogonal quadrangle -> circle
    Triangle ac(pt(0, 0), pt(4, 0), pt(1, 3));
    Quadrangle oq = make_quadrangle(pt(0, 0), pt(4, 0), pt(1, 3), orthocenter(ac));
    auto st = npc_steiner(oq);
    EXPECT_FALSE(st.npc.degenerate);
    EXPECT_TRUE(classify(st.npc.conic).is_circle);
    EXPECT_EQ(st.conic_center.value(), centroid({oq.a(), oq.b(), oq.c(), oq.d()}));
    // cyclic quadrangle -> equilateral hyperbola (unit-circle points from the
    // half-angle parameterization at t = 0, 1, 1/2, -1/3)
    Quadrangle cq = make_quadrangle(pt(1, 0), pt(0, 1),
                                    HPoint(Rational(3, 5), Rational(4, 5), Rational(1)),
                                    HPoint(Rational(4, 5), Rational(-3, 5), Rational(1)));
    auto st2 = npc_steiner(cq);
    EXPECT_TRUE(classify(st2.npc.conic).is_equilateral_hyperbola);
    // first species -> hyperbola
    auto st3 = npc_steiner(convex_example());
    EXPECT_EQ(classify(st3.npc.conic).kind, ConicKind::Hyperbola);
    // midpoints are the harmonic points of the infinity transversal
    EXPECT_EQ(st3.midpoints.size(), 6u);
    Quadrangle q = convex_example();
    std::vector<HPoint> expected = {midpoint(q.a(), q.b()), midpoint(q.a(), q.c()),
                                    midpoint(q.a(), q.d()), midpoint(q.b(), q.c()),
                                    midpoint(q.b(), q.d()), midpoint(q.c(), q.d())};
    for (const auto& m : expected) {
        bool found = false;
        for (const auto& h : st3.midpoints) found |= (h == m);
        EXPECT_TRUE(found);
    }
}

TEST(NinePointConic, TrudiSpeciesKindCorrespondence) {
    std::mt19937_64 rng(81);
    int done = 0;
    while (done < 40) {
        auto rp = [&]() {
            return pt(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 19) - 9);
        };
        Quadrangle q;
        try {
            q = make_quadrangle(rp(), rp(), rp(), rp());
        } catch (const Error&) {
            continue;
        }
        SteinerConic st;
        try {
            st = npc_steiner(q);
        } catch (const Error&) {
            continue;
        }
        if (st.npc.degenerate) continue;
        auto cls = classify(st.npc.conic);
        if (cls.kind == ConicKind::Parabola) continue;  // boundary case, flagged out
        auto sp = species(q);
        if (sp.species == Species::First)
            EXPECT_EQ(cls.kind, ConicKind::Hyperbola);
        else
            EXPECT_EQ(cls.kind, ConicKind::Ellipse);
        if (sp.orthogonal) EXPECT_TRUE(cls.is_circle);
        if (sp.cyclic) EXPECT_TRUE(cls.is_equilateral_hyperbola);
        ++done;
    }
}

TEST(NinePointConic, SteinerLine) {
    Quadrangle q = unit_square_efg();
    QuadraticMap f = make_map(q);
    // Omega = yz+zx+xy corresponds to x+y+z = 0
    EXPECT_EQ(steiner_line(f, C("y*z+z*x+x*y")), HLine(Rational(1), Rational(1), Rational(1)));
    // round trip on random transversals
    std::mt19937_64 rng(91);
    int done = 0;
    Quadrangle qc = convex_example();
    QuadraticMap fc = make_map(qc);
    while (done < 100) {
        HLine r(Rational(static_cast<long>(rng() % 9) - 4), Rational(static_cast<long>(rng() % 9) - 4),
                Rational(static_cast<long>(rng() % 9) + 1));
        bool skip = false;
        for (const auto& s : qc.fundamental_sides()) skip = skip || s == r;
        if (skip) continue;
        Conic omega;
        try {
            omega = apply_line(fc, r);
        } catch (const Error&) {
            continue;
        }
        if (omega.rank() < 3) continue;
        EXPECT_EQ(steiner_line(fc, omega), r);
        ++done;
    }
    EXPECT_THROW(steiner_line(f, C("x^2+y^2-z^2")), Error);
}

TEST(Quadrangle, SelfPolarFundamentalTriangle) {
    Quadrangle q = convex_example();
    Pencil p = pencil_of_quadrangle(q);
    auto fsides = q.fundamental_sides();  // opposite e, f, g
    for (long k = -3; k <= 3; ++k) {
        Conic m = p.member(Rational(k), Rational(1));
        if (m.rank() < 3) continue;
        EXPECT_EQ(polar(m, q.e), fsides[0]);
        EXPECT_EQ(polar(m, q.f), fsides[1]);
        EXPECT_EQ(polar(m, q.g), fsides[2]);
    }
}

TEST(Quadrangle, TrudiMidpointTheorem) {
    Quadrangle q = convex_example();
    HPoint cent = centroid({q.a(), q.b(), q.c(), q.d()});
    // midpoints of the three opposite side pairs
    struct Pair {
        HPoint m1, m2;
    };
    std::array<Pair, 3> pairs = {Pair{midpoint(q.a(), q.d()), midpoint(q.b(), q.c())},
                                 Pair{midpoint(q.a(), q.b()), midpoint(q.c(), q.d())},
                                 Pair{midpoint(q.a(), q.c()), midpoint(q.b(), q.d())}};
    for (const auto& pr : pairs) {
        HLine l = join(pr.m1, pr.m2);
        EXPECT_TRUE(incident(cent, l));
        // the centroid bisects the segment
        EXPECT_EQ(midpoint(pr.m1, pr.m2), cent);
    }
    // the joins pass through the midpoints of the fundamental triangle's
    // sides whenever those midpoints are affine
    Chart chart;
    std::array<std::pair<HPoint, HPoint>, 3> fund_sides = {
        std::make_pair(q.f, q.g), std::make_pair(q.e, q.g), std::make_pair(q.e, q.f)};
    for (int k = 0; k < 3; ++k) {
        const auto& [f1, f2] = fund_sides[static_cast<size_t>(k)];
        if (!chart.is_affine(f1) || !chart.is_affine(f2)) continue;
        HPoint fm = midpoint(f1, f2);
        HLine l = join(pairs[static_cast<size_t>(k)].m1, pairs[static_cast<size_t>(k)].m2);
        EXPECT_TRUE(incident(fm, l));
    }
}

}  // namespace
