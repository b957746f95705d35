#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ninepoint/conic.hpp"
#include "ninepoint/plane.hpp"

namespace ninepoint {

// Complete quadrangle: four vertices in general position, its six sides,
// and the fundamental (diagonal) triangle of opposite-side intersections.
struct Quadrangle {
    std::array<HPoint, 4> vertex;  // A, B, C, D

    // opposite side pairs: (AD, BC), (AB, CD), (AC, BD)
    HLine ad, bc, ab, cd, ac, bd;
    HPoint e;  // AD ^ BC
    HPoint f;  // AB ^ CD
    HPoint g;  // AC ^ BD

    const HPoint& a() const { return vertex[0]; }
    const HPoint& b() const { return vertex[1]; }
    const HPoint& c() const { return vertex[2]; }
    const HPoint& d() const { return vertex[3]; }

    std::array<HLine, 6> sides() const { return {ab, ac, ad, bc, bd, cd}; }
    std::array<HPoint, 3> fundamental_triangle() const { return {e, f, g}; }
    std::array<HLine, 3> fundamental_sides() const {
        return {join(f, g), join(e, g), join(e, f)};  // opposite e, f, g
    }
    bool is_fundamental_vertex(const HPoint& p) const { return p == e || p == f || p == g; }
    bool is_vertex(const HPoint& p) const {
        return p == vertex[0] || p == vertex[1] || p == vertex[2] || p == vertex[3];
    }
};

inline Quadrangle make_quadrangle(const HPoint& a, const HPoint& b, const HPoint& c,
                                  const HPoint& d) {
    std::array<HPoint, 4> v = {a, b, c, d};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (v[static_cast<size_t>(i)] == v[static_cast<size_t>(j)])
                throw Error("make_quadrangle: duplicate vertex");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = j + 1; k < 4; ++k)
                if (collinear(v[static_cast<size_t>(i)], v[static_cast<size_t>(j)],
                              v[static_cast<size_t>(k)]))
                    throw Error("make_quadrangle: three collinear vertices");
    Quadrangle q;
    q.vertex = v;
    q.ab = join(a, b);
    q.ac = join(a, c);
    q.ad = join(a, d);
    q.bc = join(b, c);
    q.bd = join(b, d);
    q.cd = join(c, d);
    q.e = meet(q.ad, q.bc);
    q.f = meet(q.ab, q.cd);
    q.g = meet(q.ac, q.bd);
    return q;
}

// The Gauss line: midpoints of the "diagonals" AD and BC together with the
// midpoint of the segment joining the other two opposite-side intersections
// are collinear. Degenerate data (a midpoint at infinity, coincident
// midpoints) is reported in the flags rather than rejected outright, as
// long as two usable points remain.
struct GaussLineResult {
    HLine line;
    std::vector<HPoint> midpoints;     // the midpoints that exist
    bool degenerate = false;           // fewer than three usable midpoints
};

inline GaussLineResult gauss_line(const Quadrangle& q, const Chart& chart = {}) {
    std::vector<HPoint> mids;
    auto push_mid = [&](const HPoint& p1, const HPoint& p2) {
        if (chart.is_affine(p1) && chart.is_affine(p2) && !(p1 == p2))
            mids.push_back(midpoint(p1, p2, chart));
    };
    push_mid(q.a(), q.d());
    push_mid(q.b(), q.c());
    push_mid(q.f, q.g);
    GaussLineResult res;
    res.midpoints = mids;
    res.degenerate = mids.size() < 3;
    // find two distinct midpoints to span the line
    for (size_t i = 0; i < mids.size(); ++i)
        for (size_t j = i + 1; j < mids.size(); ++j) {
            if (mids[i] == mids[j]) continue;
            res.line = join(mids[i], mids[j]);
            for (const auto& m : mids)
                if (!incident(m, res.line))
                    throw Error("gauss_line: midpoints not collinear");
            if (mids.size() < 3) res.degenerate = true;
            return res;
        }
    throw Error("gauss_line: midpoint at infinity");
}

enum class Species { First, Second };

struct SpeciesResult {
    Species species;
    bool orthogonal = false;
    bool cyclic = false;
};

namespace detail {

inline Rational orient(const HPoint& a, const HPoint& b, const HPoint& c, const Chart& chart) {
    Vec3<Rational> pa = affine_rep(a, chart), pb = affine_rep(b, chart), pc = affine_rep(c, chart);
    return (pb[0] - pa[0]) * (pc[1] - pa[1]) - (pb[1] - pa[1]) * (pc[0] - pa[0]);
}

}  // namespace detail

// First species: every vertex outside the triangle of the other three
// (equivalently, the four points are in convex position). Second species:
// one vertex strictly inside. Orthogonality and concyclicity are detected
// exactly.
inline SpeciesResult species(const Quadrangle& q, const Chart& chart = {}) {
    for (const auto& p : q.vertex)
        if (!chart.is_affine(p)) throw Error("species: vertex at infinity");
    SpeciesResult res{Species::First, false, false};
    // inside test for each vertex against the other three
    for (int i = 0; i < 4 && res.species == Species::First; ++i) {
        std::array<HPoint, 3> tri;
        int k = 0;
        for (int j = 0; j < 4; ++j)
            if (j != i) tri[static_cast<size_t>(k++)] = q.vertex[static_cast<size_t>(j)];
        Rational o1 = detail::orient(tri[0], tri[1], q.vertex[static_cast<size_t>(i)], chart);
        Rational o2 = detail::orient(tri[1], tri[2], q.vertex[static_cast<size_t>(i)], chart);
        Rational o3 = detail::orient(tri[2], tri[0], q.vertex[static_cast<size_t>(i)], chart);
        if ((o1 > 0 && o2 > 0 && o3 > 0) || (o1 < 0 && o2 < 0 && o3 < 0))
            res.species = Species::Second;
    }
    // orthogonal: two pairs of opposite sides perpendicular forces the third
    if (!chart.is_standard()) return res;
    auto perp = [&](const HLine& l, const HLine& m) {
        return l.v[0] * m.v[0] + l.v[1] * m.v[1] == 0;
    };
    res.orthogonal = perp(q.ad, q.bc) && perp(q.ab, q.cd);
    // cyclic: 4x4 determinant |x^2+y^2, x, y, 1|
    {
        std::array<std::array<Rational, 4>, 4> m;
        for (int i = 0; i < 4; ++i) {
            Vec3<Rational> p = affine_rep(q.vertex[static_cast<size_t>(i)], chart);
            m[static_cast<size_t>(i)] = {p[0] * p[0] + p[1] * p[1], p[0], p[1], Rational(1)};
        }
        // Laplace expansion along the first column
        auto det3 = [](std::array<std::array<Rational, 3>, 3> a) {
            return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                   a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                   a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
        };
        Rational det = 0;
        for (int i = 0; i < 4; ++i) {
            std::array<std::array<Rational, 3>, 3> minor;
            int r = 0;
            for (int j = 0; j < 4; ++j) {
                if (j == i) continue;
                for (int c2 = 1; c2 < 4; ++c2)
                    minor[static_cast<size_t>(r)][static_cast<size_t>(c2 - 1)] =
                        m[static_cast<size_t>(j)][static_cast<size_t>(c2)];
                ++r;
            }
            Rational term = m[static_cast<size_t>(i)][0] * det3(minor);
            det += (i % 2 == 0) ? term : -term;
        }
        res.cyclic = (det == 0);
    }
    return res;
}

}  // namespace ninepoint
