#pragma once

#include <optional>
#include <vector>

#include "ninepoint/cremona.hpp"
#include "ninepoint/pencil.hpp"
#include "ninepoint/quadrangle.hpp"

namespace ninepoint {

enum class NpcProvenance { PoleLocus, HarmonicSix, CremonaImage };

// The nine-point conic of a quadrangle and transversal: passes through the
// fundamental triangle and the six harmonic conjugates of the transversal
// traces on the sides.
struct NinePointConic {
    Conic conic;
    HLine transversal;
    NpcProvenance provenance = NpcProvenance::PoleLocus;
    bool degenerate = false;                 // rank <= 2
    std::optional<HPoint> tangent_vertex;    // set when r runs through a vertex
    std::vector<HPoint> harmonic_points;     // the conjugate points that exist
};

// Locus of the poles of r with respect to the pencil members: sampled
// through five parameters and then verified as an exact identity in the
// pencil parameter.
inline NinePointConic npc_pole_locus(const Quadrangle& q, const HLine& r,
                                     bool allow_degenerate_transversal = false) {
    for (const auto& s : q.fundamental_sides()) {
        if (s == r) {
            if (!allow_degenerate_transversal)
                throw Error("npc_pole_locus: transversal is a fundamental side");
            // blow-down case: the formula conic degenerates into the pair of
            // the other two fundamental sides
            QuadraticMap f = make_map(q);
            HLine rn = f.line_to_standard(r);
            Mat3<Rational> mn;
            mn(0, 1) = mn(1, 0) = rn.v[2];
            mn(0, 2) = mn(2, 0) = rn.v[1];
            mn(1, 2) = mn(2, 1) = rn.v[0];
            NinePointConic out;
            out.conic = Conic(f.to_std.transpose() * mn * f.to_std);
            out.transversal = r;
            out.degenerate = true;
            return out;
        }
    }
    Pencil p = pencil_of_quadrangle(q);
    std::vector<HPoint> poles;
    for (long k = -6; k <= 6 && poles.size() < 5; ++k) {
        // parameters (1 : k) plus (0 : 1) at the start
        Mat3<Rational> m = (k == -6) ? p.c2.m : p.c1.m + p.c2.m * Rational(k);
        Vec3<Rational> pv = m.adjugate() * r.v;
        if (pv.is_zero()) continue;
        HPoint pole_pt{pv};
        bool dup = false;
        for (const auto& x : poles) dup = dup || x == pole_pt;
        if (!dup) poles.push_back(pole_pt);
    }
    if (poles.size() < 5) {
        // symmetric configurations collapse the pole locus onto fewer
        // points; the scheme-theoretic conic still exists and comes out of
        // the quadratic transformation, with every pole on it
        Conic gamma = apply_line(make_map(q), r);
        for (const auto& x : poles)
            if (!gamma.contains(x)) throw Error("npc_pole_locus: pole off the formula conic");
        NinePointConic out;
        out.conic = gamma;
        out.transversal = r;
        out.provenance = NpcProvenance::PoleLocus;
        out.degenerate = gamma.rank() <= 2;
        for (const auto& v : q.vertex)
            if (incident(v, r)) out.tangent_vertex = v;
        return out;
    }
    auto fit = conic_through_five({poles[0], poles[1], poles[2], poles[3], poles[4]});
    // exact identity: adj(l*M1 + u*M2) * r lies on the conic for all (l, u)
    Mat3<Poly> mp;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            mp(i, j) = p.c1.m(i, j) * Poly::variable(0) + p.c2.m(i, j) * Poly::variable(1);
    Vec3<Poly> pol = mp.adjugate() * Vec3<Poly>{Poly(r.v[0]), Poly(r.v[1]), Poly(r.v[2])};
    Poly val;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) val += pol[static_cast<size_t>(i)] * fit.conic.m(i, j) * pol[static_cast<size_t>(j)];
    if (!val.is_zero()) throw Error("npc_pole_locus: identity verification failed");
    NinePointConic out;
    out.conic = fit.conic;
    out.transversal = r;
    out.provenance = NpcProvenance::PoleLocus;
    out.degenerate = fit.degenerate;
    for (const auto& v : q.vertex)
        if (incident(v, r)) out.tangent_vertex = v;
    return out;
}

// Direct construction from the six harmonic conjugate points.
inline NinePointConic npc_harmonic_six(const Quadrangle& q, const HLine& r) {
    struct Side {
        HLine line;
        HPoint end1, end2;
    };
    std::array<Side, 6> sides = {Side{q.ab, q.a(), q.b()}, Side{q.ac, q.a(), q.c()},
                                 Side{q.ad, q.a(), q.d()}, Side{q.bc, q.b(), q.c()},
                                 Side{q.bd, q.b(), q.d()}, Side{q.cd, q.c(), q.d()}};
    NinePointConic out;
    out.transversal = r;
    out.provenance = NpcProvenance::HarmonicSix;
    std::vector<HPoint> conjugates;
    for (const auto& s : sides) {
        if (s.line == r) throw Error("npc_harmonic_six: transversal is a side");
        HPoint trace = meet(r, s.line);
        if (trace == s.end1 || trace == s.end2) {
            // transversal through a vertex: the conjugate is undefined there
            // and the conic is tangent to r at that vertex instead
            out.tangent_vertex = trace;
            continue;
        }
        conjugates.push_back(harmonic_conjugate(trace, s.end1, s.end2));
    }
    if (conjugates.size() < 2)
        throw Error("npc_harmonic_six: harmonic conjugate undefined (transversal not generic)");
    auto fit = conic_through_five({q.e, q.f, q.g, conjugates[0], conjugates[1]});
    for (size_t k = 2; k < conjugates.size(); ++k)
        if (!fit.conic.contains(conjugates[k]))
            throw Error("npc_harmonic_six: conjugate point off the conic");
    out.conic = fit.conic;
    out.degenerate = fit.degenerate;
    out.harmonic_points = conjugates;
    if (out.tangent_vertex && !out.degenerate) {
        auto t = line_tangency(out.conic, r);
        if (t.kind != LineTangency::Tangent || !(t.contact.value() == *out.tangent_vertex))
            throw Error("npc_harmonic_six: vertex tangency verification failed");
    }
    return out;
}

// Cremona route: the image of the transversal under the quadratic map.
inline NinePointConic npc_cremona(const QuadraticMap& f, const HLine& r) {
    NinePointConic out;
    out.conic = apply_line(f, r);
    out.transversal = r;
    out.provenance = NpcProvenance::CremonaImage;
    out.degenerate = out.conic.rank() <= 2;
    for (const auto& v : f.base.vertex)
        if (incident(v, r)) out.tangent_vertex = v;
    return out;
}

// Steiner's specialization: the transversal at infinity. The harmonic
// points become the side midpoints and the center of the conic is the
// vertex centroid.
struct SteinerConic {
    NinePointConic npc;
    std::vector<HPoint> midpoints;
    std::optional<HPoint> conic_center;  // absent when degenerate
};

inline SteinerConic npc_steiner(const Quadrangle& q, const Chart& chart = {}) {
    for (const auto& v : q.vertex)
        if (!chart.is_affine(v)) throw Error("npc_steiner: vertex at infinity");
    SteinerConic out;
    out.npc = npc_harmonic_six(q, chart.infinity_line);
    out.midpoints = out.npc.harmonic_points;
    if (!out.npc.degenerate) {
        CenterResult c = center(out.npc.conic, chart);
        if (c.at_infinity) throw Error("npc_steiner: unexpected parabolic locus");
        HPoint cent = centroid({q.a(), q.b(), q.c(), q.d()}, chart);
        if (!(c.point == cent)) throw Error("npc_steiner: center differs from the centroid");
        out.conic_center = c.point;
    }
    return out;
}

// Inverse problem: the line whose nine-point conic is a given circumscribed
// conic of the fundamental triangle. Verified through the six harmonic
// conjugates of the conic's side traces.
inline HLine steiner_line(const QuadraticMap& f, const Conic& omega) {
    const Quadrangle& q = f.base;
    for (const auto& v : q.fundamental_triangle())
        if (!omega.contains(v)) throw Error("steiner_line: conic not through fundamental triangle");
    HLine r = apply_conic_to_line(f, omega);
    // verification: on each side, the second trace of omega (beyond the
    // fundamental vertex) has its harmonic conjugate on r
    struct Side {
        HLine line;
        HPoint fund;
        HPoint end1, end2;
    };
    std::array<Side, 6> sides = {
        Side{q.ab, q.f, q.a(), q.b()}, Side{q.cd, q.f, q.c(), q.d()},
        Side{q.ac, q.g, q.a(), q.c()}, Side{q.bd, q.g, q.b(), q.d()},
        Side{q.ad, q.e, q.a(), q.d()}, Side{q.bc, q.e, q.b(), q.c()}};
    for (const auto& s : sides) {
        auto [p0, p1] = span_points(s.line);
        HPoint other = (p0 == s.fund) ? p1 : p0;
        HPoint trace = second_intersection(omega, s.fund, other);
        if (trace == s.fund) continue;        // side tangent to omega there
        if (trace == s.end1 || trace == s.end2) continue;  // conjugate undefined
        HPoint conj = harmonic_conjugate(trace, s.end1, s.end2);
        if (!incident(conj, r)) throw Error("steiner_line: harmonic trace off the line");
    }
    return r;
}

inline HLine steiner_line(const Quadrangle& q, const Conic& omega) {
    return steiner_line(make_map(q), omega);
}

}  // namespace ninepoint
