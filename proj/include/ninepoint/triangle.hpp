#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "ninepoint/bigfloat.hpp"
#include "ninepoint/conic.hpp"
#include "ninepoint/plane.hpp"
#include "ninepoint/quadext.hpp"

namespace ninepoint {

// Affine triangle with positive orientation (vertices reordered on
// construction when needed).
struct Triangle {
    std::array<HPoint, 3> vertex;

    Triangle(const HPoint& a, const HPoint& b, const HPoint& c, const Chart& chart = {}) {
        for (const auto& p : {a, b, c})
            if (!chart.is_affine(p)) throw Error("Triangle: vertex at infinity");
        if (collinear(a, b, c)) throw Error("Triangle: collinear vertices");
        vertex = {a, b, c};
        Vec3<Rational> pa = affine_rep(a, chart), pb = affine_rep(b, chart),
                       pc = affine_rep(c, chart);
        Rational orient = (pb[0] - pa[0]) * (pc[1] - pa[1]) - (pb[1] - pa[1]) * (pc[0] - pa[0]);
        if (orient < 0) std::swap(vertex[1], vertex[2]);
    }

    const HPoint& a() const { return vertex[0]; }
    const HPoint& b() const { return vertex[1]; }
    const HPoint& c() const { return vertex[2]; }

    // twice the signed area (positive by construction)
    Rational double_area(const Chart& chart = {}) const {
        Vec3<Rational> pa = affine_rep(a(), chart), pb = affine_rep(b(), chart),
                       pc = affine_rep(c(), chart);
        return (pb[0] - pa[0]) * (pc[1] - pa[1]) - (pb[1] - pa[1]) * (pc[0] - pa[0]);
    }

    // squared side lengths: opposite a, b, c
    std::array<Rational, 3> side_lengths_squared() const {
        return {dist2(b(), c()), dist2(a(), c()), dist2(a(), b())};
    }
};

inline HPoint orthocenter(const Triangle& t) {
    HLine alt_a = perpendicular_through(t.a(), join(t.b(), t.c()));
    HLine alt_b = perpendicular_through(t.b(), join(t.a(), t.c()));
    HPoint h = meet(alt_a, alt_b);
    HLine alt_c = perpendicular_through(t.c(), join(t.a(), t.b()));
    if (!incident(h, alt_c)) throw Error("orthocenter: altitudes not concurrent");
    return h;
}

inline HPoint circumcenter(const Triangle& t) {
    HLine pa = perpendicular_through(midpoint(t.a(), t.b()), join(t.a(), t.b()));
    HLine pb = perpendicular_through(midpoint(t.b(), t.c()), join(t.b(), t.c()));
    HPoint o = meet(pa, pb);
    HLine pc = perpendicular_through(midpoint(t.a(), t.c()), join(t.a(), t.c()));
    if (!incident(o, pc)) throw Error("circumcenter: bisectors not concurrent");
    return o;
}

// Circle through three affine points as a conic.
inline Conic circle_through(const HPoint& p1, const HPoint& p2, const HPoint& p3) {
    // x^2 + y^2 + D x z + E y z + F z^2 = 0
    std::vector<std::vector<Rational>> rows;
    for (const auto& p : {p1, p2, p3}) {
        Vec3<Rational> v = affine_rep(p, Chart{});
        rows.push_back({v[0], v[1], Rational(1), v[0] * v[0] + v[1] * v[1]});
    }
    // solve 3x3 for (D, E, F) with rhs -(x^2+y^2)
    Mat3<Rational> m;
    Vec3<Rational> rhs;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) m(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
        rhs[static_cast<size_t>(i)] = -rows[static_cast<size_t>(i)][3];
    }
    auto sol = solve3(m, rhs);
    if (!sol) throw Error("circle_through: collinear points");
    return Conic::from_coeffs(1, 1, (*sol)[2], 0, (*sol)[0], (*sol)[1]);
}

struct CircleData {
    HPoint center;
    Rational radius2;
};

inline CircleData circle_data(const Conic& c) {
    auto cls = classify(c);
    if (!cls.is_circle) throw Error("circle_data: not a circle");
    // normalize x^2 + y^2 + Dxz + Eyz + F z^2
    Rational s = Rational(1) / c.m(0, 0);
    Rational d = 2 * c.m(0, 2) * s, e = 2 * c.m(1, 2) * s, ff = c.m(2, 2) * s;
    Rational cx = -d / 2, cy = -e / 2;
    return {HPoint(cx, cy, Rational(1)), cx * cx + cy * cy - ff};
}

// Nine distinguished points and the circle through them.
struct NinePointCircleResult {
    Conic circle;
    std::array<HPoint, 3> side_midpoints;
    std::array<HPoint, 3> altitude_feet;
    std::array<HPoint, 3> euler_midpoints;  // vertex-to-orthocenter midpoints
    HPoint orthocenter;
    bool coincident_points = false;  // right triangles collapse some of the nine
};

inline NinePointCircleResult nine_point_circle(const Triangle& t) {
    NinePointCircleResult out;
    out.orthocenter = ninepoint::orthocenter(t);
    const HPoint &a = t.a(), &b = t.b(), &c = t.c();
    out.side_midpoints = {midpoint(b, c), midpoint(a, c), midpoint(a, b)};
    auto foot = [&](const HPoint& v, const HPoint& s1, const HPoint& s2) {
        HLine side = join(s1, s2);
        return meet(side, perpendicular_through(v, side));
    };
    out.altitude_feet = {foot(a, b, c), foot(b, a, c), foot(c, a, b)};
    auto euler_mid = [&](const HPoint& v) -> HPoint {
        if (v == out.orthocenter) return v;  // degenerate segment at a right angle
        return midpoint(v, out.orthocenter);
    };
    out.euler_midpoints = {euler_mid(a), euler_mid(b), euler_mid(c)};
    out.circle = circle_through(out.side_midpoints[0], out.side_midpoints[1],
                                out.side_midpoints[2]);
    for (const auto& p : out.altitude_feet)
        if (!out.circle.contains(p)) throw Error("nine_point_circle: foot off the circle");
    for (const auto& p : out.euler_midpoints)
        if (!out.circle.contains(p)) throw Error("nine_point_circle: Euler midpoint off the circle");
    // coincidences happen exactly when some vertex is the orthocenter
    for (const auto& v : t.vertex) out.coincident_points |= (v == out.orthocenter);
    return out;
}

// --------------------------------------------------------------------------
// Tritangent circles (incircle and the three excircles) and Feuerbach.

enum class Exactness { RationalExact, QuadExtExact, Certified };

// center and squared radius over a quadratic extension (covers the rational
// case with d = 1)
struct QCircle {
    std::array<QuadExt, 2> center;
    QuadExt radius2;
    bool rational() const {
        return center[0].is_rational() && center[1].is_rational() && radius2.is_rational();
    }
    Conic to_conic() const {
        if (!rational()) throw Error("QCircle: not rational");
        Rational cx = *center[0].as_rational(), cy = *center[1].as_rational();
        return Conic::from_coeffs(1, 1, cx * cx + cy * cy - *radius2.as_rational(), 0, -2 * cx,
                                  -2 * cy);
    }
};

struct TritangentCircles {
    Exactness exactness;
    // incircle first, then the excircles opposite a, b, c
    std::array<QCircle, 4> circle;      // valid for the two exact modes
    std::array<std::array<BigFloat, 3>, 4> certified;  // (cx, cy, r2) per circle
    unsigned precision_bits = 0;
};

namespace detail {

template <class K>
std::array<std::array<K, 3>, 4> tritangent_in_field(const std::array<std::array<K, 2>, 3>& v,
                                                    const std::array<K, 3>& len,
                                                    const K& double_area) {
    const K &la = len[0], &lb = len[1], &lc = len[2];
    std::array<std::array<K, 3>, 4> out;
    std::array<std::array<K, 3>, 4> weights = {
        std::array<K, 3>{la, lb, lc}, std::array<K, 3>{-la, lb, lc},
        std::array<K, 3>{la, -lb, lc}, std::array<K, 3>{la, lb, -lc}};
    for (int k = 0; k < 4; ++k) {
        const auto& w = weights[static_cast<size_t>(k)];
        K denom = w[0] + w[1] + w[2];
        K cx = (w[0] * v[0][0] + w[1] * v[1][0] + w[2] * v[2][0]) / denom;
        K cy = (w[0] * v[0][1] + w[1] * v[1][1] + w[2] * v[2][1]) / denom;
        // r = 2*area / denom  (denom = 2s, 2(s-a), ...)
        K r = double_area / denom;
        out[static_cast<size_t>(k)] = {cx, cy, r * r};
    }
    return out;
}

}  // namespace detail

inline TritangentCircles incircle_excircles(const Triangle& t, unsigned precision_bits = 256) {
    auto q2 = t.side_lengths_squared();
    Rational darea = t.double_area();
    // try the quadratic-extension route: all three lengths in one field
    bool quad_ok = true;
    std::array<QuadExt, 3> len;
    for (int i = 0; i < 3; ++i) len[static_cast<size_t>(i)] = QuadExt::sqrt_of(q2[static_cast<size_t>(i)]);
    try {
        QuadExt probe = len[0] + len[1] + len[2];
        (void)probe;
    } catch (const Error&) {
        quad_ok = false;
    }
    TritangentCircles out;
    if (quad_ok) {
        std::array<std::array<QuadExt, 2>, 3> verts;
        for (int i = 0; i < 3; ++i) {
            Vec3<Rational> p = affine_rep(t.vertex[static_cast<size_t>(i)], Chart{});
            verts[static_cast<size_t>(i)] = {QuadExt(p[0]), QuadExt(p[1])};
        }
        auto data = detail::tritangent_in_field<QuadExt>(verts, len, QuadExt(darea));
        bool all_rational = true;
        for (int k = 0; k < 4; ++k) {
            out.circle[static_cast<size_t>(k)] = {
                {data[static_cast<size_t>(k)][0], data[static_cast<size_t>(k)][1]},
                data[static_cast<size_t>(k)][2]};
            all_rational &= out.circle[static_cast<size_t>(k)].rational();
        }
        out.exactness = all_rational ? Exactness::RationalExact : Exactness::QuadExtExact;
        return out;
    }
    // certified route
    out.exactness = Exactness::Certified;
    out.precision_bits = precision_bits;
    std::array<std::array<BigFloat, 2>, 3> verts;
    std::array<BigFloat, 3> blen;
    for (int i = 0; i < 3; ++i) {
        Vec3<Rational> p = affine_rep(t.vertex[static_cast<size_t>(i)], Chart{});
        verts[static_cast<size_t>(i)][0] = BigFloat::from_rational(p[0], precision_bits);
        verts[static_cast<size_t>(i)][1] = BigFloat::from_rational(p[1], precision_bits);
        blen[static_cast<size_t>(i)] =
            sqrt(BigFloat::from_rational(q2[static_cast<size_t>(i)], precision_bits));
    }
    out.certified = detail::tritangent_in_field<BigFloat>(
        verts, blen, BigFloat::from_rational(darea, precision_bits));
    return out;
}

// Tangency test for two circles given centers and squared radii, avoiding
// square roots: (d^2 - r1^2 - r2^2)^2 = 4 r1^2 r2^2 covers internal and
// external tangency.
template <class K>
K circle_tangency_residual(const std::array<K, 2>& c1, const K& r1sq, const std::array<K, 2>& c2,
                           const K& r2sq) {
    K dx = c1[0] - c2[0], dy = c1[1] - c2[1];
    K d2 = dx * dx + dy * dy;
    K lhs = d2 - r1sq - r2sq;
    K four = make_scalar(4, r1sq);
    return lhs * lhs - four * r1sq * r2sq;
}

struct FeuerbachResult {
    Exactness exactness;
    bool all_tangent;
    unsigned precision_bits = 0;
    double residual_bound = 0;  // certified mode: max |residual| bound
};

inline FeuerbachResult feuerbach(const Triangle& t, unsigned precision_bits = 256) {
    NinePointCircleResult npc = nine_point_circle(t);
    CircleData nd = circle_data(npc.circle);
    Vec3<Rational> nc = affine_rep(nd.center, Chart{});
    TritangentCircles tr = incircle_excircles(t, precision_bits);
    FeuerbachResult out{tr.exactness, true, 0, 0};
    if (tr.exactness != Exactness::Certified) {
        std::array<QuadExt, 2> ncq = {QuadExt(nc[0]), QuadExt(nc[1])};
        for (const auto& circ : tr.circle) {
            QuadExt res = circle_tangency_residual<QuadExt>(ncq, QuadExt(nd.radius2),
                                                            circ.center, circ.radius2);
            out.all_tangent &= res.is_zero();
        }
        return out;
    }
    out.precision_bits = precision_bits;
    std::array<BigFloat, 2> ncb = {BigFloat::from_rational(nc[0], precision_bits),
                                   BigFloat::from_rational(nc[1], precision_bits)};
    BigFloat nr = BigFloat::from_rational(nd.radius2, precision_bits);
    for (const auto& circ : tr.certified) {
        BigFloat res = circle_tangency_residual<BigFloat>(ncb, nr, {circ[0], circ[1]}, circ[2]);
        if (!res.contains_zero()) out.all_tangent = false;
        out.residual_bound = std::max(out.residual_bound, res.abs_upper());
    }
    return out;
}

// Loria theorem I: the circumcenter is the centroid of the four tritangent
// centers.
struct LoriaIResult {
    Exactness exactness;
    bool holds;
    HPoint circumcenter;
    double residual_bound = 0;
    unsigned precision_bits = 0;
};

inline LoriaIResult loria_i(const Triangle& t, unsigned precision_bits = 256) {
    HPoint o = circumcenter(t);
    Vec3<Rational> oc = affine_rep(o, Chart{});
    TritangentCircles tr = incircle_excircles(t, precision_bits);
    LoriaIResult out{tr.exactness, true, o, 0, 0};
    if (tr.exactness != Exactness::Certified) {
        QuadExt sx(0), sy(0);
        for (const auto& c : tr.circle) {
            sx += c.center[0];
            sy += c.center[1];
        }
        QuadExt four(Rational(4));
        out.holds = (sx / four == QuadExt(oc[0])) && (sy / four == QuadExt(oc[1]));
        return out;
    }
    out.precision_bits = precision_bits;
    BigFloat sx = BigFloat::from_long(0, precision_bits), sy = sx;
    for (const auto& c : tr.certified) {
        sx += c[0];
        sy += c[1];
    }
    BigFloat four = BigFloat::from_long(4, precision_bits);
    BigFloat rx = sx / four - BigFloat::from_rational(oc[0], precision_bits);
    BigFloat ry = sy / four - BigFloat::from_rational(oc[1], precision_bits);
    out.holds = rx.contains_zero() && ry.contains_zero();
    out.residual_bound = std::max(rx.abs_upper(), ry.abs_upper());
    return out;
}

// Loria theorem II: reflecting three parallel lines through the vertices in
// the corresponding angle bisectors yields three concurrent lines.
struct LoriaIIResult {
    Exactness exactness;
    bool holds;
    std::optional<HPoint> common_point;  // exact modes only
    double residual_bound = 0;
    unsigned precision_bits = 0;
};

namespace detail {

// Reflection of direction dir across the axis with direction w.
template <class K>
std::array<K, 2> reflect_direction(const std::array<K, 2>& dir, const std::array<K, 2>& w) {
    K wn = w[0] * w[0] + w[1] * w[1];
    K two = make_scalar(2, wn);
    K pr = (dir[0] * w[0] + dir[1] * w[1]) / wn;
    return {two * pr * w[0] - dir[0], two * pr * w[1] - dir[1]};
}

template <class K>
std::array<std::array<K, 3>, 3> loria_lines(const std::array<std::array<K, 2>, 3>& v,
                                            const std::array<K, 3>& len,
                                            const std::array<K, 2>& dir, bool external) {
    // len[i] is the length of the side opposite vertex i
    std::array<std::array<K, 3>, 3> lines;
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        size_t si = static_cast<size_t>(i), sj = static_cast<size_t>(j), sk = static_cast<size_t>(k);
        // unit vectors from vertex i toward the two others: edge i->j has
        // length opposite k
        std::array<K, 2> uj = {(v[sj][0] - v[si][0]) / len[sk], (v[sj][1] - v[si][1]) / len[sk]};
        std::array<K, 2> uk = {(v[sk][0] - v[si][0]) / len[sj], (v[sk][1] - v[si][1]) / len[sj]};
        std::array<K, 2> w = external ? std::array<K, 2>{uj[0] - uk[0], uj[1] - uk[1]}
                                      : std::array<K, 2>{uj[0] + uk[0], uj[1] + uk[1]};
        std::array<K, 2> rd = reflect_direction<K>(dir, w);
        // line through v[i] with direction rd: -rd_y x + rd_x y + c z = 0
        lines[si] = {-rd[1], rd[0], rd[1] * v[si][0] - rd[0] * v[si][1]};
    }
    return lines;
}

template <class K>
K det3_lines(const std::array<std::array<K, 3>, 3>& l) {
    return l[0][0] * (l[1][1] * l[2][2] - l[1][2] * l[2][1]) -
           l[0][1] * (l[1][0] * l[2][2] - l[1][2] * l[2][0]) +
           l[0][2] * (l[1][0] * l[2][1] - l[1][1] * l[2][0]);
}

}  // namespace detail

inline LoriaIIResult loria_ii(const Triangle& t, const std::array<Rational, 2>& direction,
                              bool external_bisector = false, unsigned precision_bits = 256) {
    if (direction[0] == 0 && direction[1] == 0) throw Error("loria_ii: zero direction");
    auto q2 = t.side_lengths_squared();
    std::array<QuadExt, 3> len;
    bool quad_ok = true;
    for (int i = 0; i < 3; ++i) len[static_cast<size_t>(i)] = QuadExt::sqrt_of(q2[static_cast<size_t>(i)]);
    try {
        QuadExt probe = len[0] + len[1] + len[2];
        (void)probe;
    } catch (const Error&) {
        quad_ok = false;
    }
    if (quad_ok) {
        std::array<std::array<QuadExt, 2>, 3> verts;
        for (int i = 0; i < 3; ++i) {
            Vec3<Rational> p = affine_rep(t.vertex[static_cast<size_t>(i)], Chart{});
            verts[static_cast<size_t>(i)] = {QuadExt(p[0]), QuadExt(p[1])};
        }
        auto lines = detail::loria_lines<QuadExt>(verts, len,
                                                  {QuadExt(direction[0]), QuadExt(direction[1])},
                                                  external_bisector);
        QuadExt det = detail::det3_lines<QuadExt>(lines);
        LoriaIIResult out{len[0].is_rational() && len[1].is_rational() && len[2].is_rational()
                              ? Exactness::RationalExact
                              : Exactness::QuadExtExact,
                          det.is_zero(), std::nullopt, 0, 0};
        if (out.holds) {
            // common point from the first two lines (cross product)
            std::array<QuadExt, 3> p = {
                lines[0][1] * lines[1][2] - lines[0][2] * lines[1][1],
                lines[0][2] * lines[1][0] - lines[0][0] * lines[1][2],
                lines[0][0] * lines[1][1] - lines[0][1] * lines[1][0]};
            if (p[0].is_rational() && p[1].is_rational() && p[2].is_rational())
                out.common_point = HPoint(*p[0].as_rational(), *p[1].as_rational(),
                                          *p[2].as_rational());
        }
        return out;
    }
    std::array<std::array<BigFloat, 2>, 3> verts = {
        std::array<BigFloat, 2>{BigFloat(precision_bits), BigFloat(precision_bits)},
        std::array<BigFloat, 2>{BigFloat(precision_bits), BigFloat(precision_bits)},
        std::array<BigFloat, 2>{BigFloat(precision_bits), BigFloat(precision_bits)}};
    std::array<BigFloat, 3> blen = {BigFloat(precision_bits), BigFloat(precision_bits),
                                    BigFloat(precision_bits)};
    for (int i = 0; i < 3; ++i) {
        Vec3<Rational> p = affine_rep(t.vertex[static_cast<size_t>(i)], Chart{});
        verts[static_cast<size_t>(i)][0] = BigFloat::from_rational(p[0], precision_bits);
        verts[static_cast<size_t>(i)][1] = BigFloat::from_rational(p[1], precision_bits);
        blen[static_cast<size_t>(i)] =
            sqrt(BigFloat::from_rational(q2[static_cast<size_t>(i)], precision_bits));
    }
    auto lines = detail::loria_lines<BigFloat>(
        verts, blen,
        {BigFloat::from_rational(direction[0], precision_bits),
         BigFloat::from_rational(direction[1], precision_bits)},
        external_bisector);
    BigFloat det = detail::det3_lines<BigFloat>(lines);
    LoriaIIResult out{Exactness::Certified, det.contains_zero(), std::nullopt, det.abs_upper(),
                      precision_bits};
    return out;
}

}  // namespace ninepoint
