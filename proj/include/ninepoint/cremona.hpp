#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ninepoint/pencil.hpp"
#include "ninepoint/poly.hpp"
#include "ninepoint/quadrangle.hpp"

namespace ninepoint {

// Homogeneous plane curve with rational coefficients, stored canonically.
struct PlaneCurve {
    Poly poly;

    PlaneCurve() = default;
    explicit PlaneCurve(const Poly& p) : poly(p.canonical()) {
        if (poly.is_zero()) throw Error("PlaneCurve: zero polynomial");
        if (!poly.is_homogeneous()) throw Error("PlaneCurve: not homogeneous");
    }
    static PlaneCurve parse(std::string_view text) { return PlaneCurve(Poly::parse(text)); }

    int degree() const { return poly.total_degree(); }
    bool contains(const HPoint& p) const {
        return poly.eval<Rational>({p.v[0], p.v[1], p.v[2]}) == 0;
    }
    friend bool operator==(const PlaneCurve& a, const PlaneCurve& b) {
        return a.poly == b.poly;
    }
};

// Multiplicity of the curve at a point: order of the lowest form after
// moving the point to (0:0:1).
inline int multiplicity_at(const PlaneCurve& c, const HPoint& p) {
    // invertible frame with third column p: complete with two axis vectors
    Mat3<Rational> u;
    bool found = false;
    for (int i = 0; i < 3 && !found; ++i)
        for (int j = i + 1; j < 3 && !found; ++j) {
            Mat3<Rational> trial;
            trial(i, 0) = 1;
            trial(j, 1) = 1;
            for (int k = 0; k < 3; ++k) trial(k, 2) = p.v[static_cast<size_t>(k)];
            if (trial.det() != 0) {
                u = trial;
                found = true;
            }
        }
    if (!found) throw Error("multiplicity_at: could not build frame");
    // c'(Y) = c(U Y); multiplicity at e3 = min over terms of ex + ey
    std::array<Poly, 3> sub;
    for (int i = 0; i < 3; ++i) {
        Poly s;
        for (int j = 0; j < 3; ++j) s += u(i, j) * Poly::variable(j);
        sub[static_cast<size_t>(i)] = s;
    }
    Poly moved = c.poly.substitute(sub);
    int best = moved.total_degree() + 1;
    for (const auto& [m, coef] : moved.terms())
        best = std::min(best, static_cast<int>(m.e[0] + m.e[1]));
    return best;
}

// Beltrami's quadratic transformation attached to a quadrangle: the map
// sending H to the common point of its polars with respect to the pencil.
// to_std carries the fundamental triangle to the coordinate triangle and
// the vertices to (+-1, +-1, 1); there the map is the coordinatewise
// reciprocal.
struct QuadraticMap {
    Quadrangle base;
    Pencil pencil;
    Mat3<Rational> to_std;
    Mat3<Rational> from_std;  // inverse up to scale

    HPoint to_standard(const HPoint& p) const { return HPoint(to_std * p.v); }
    HPoint from_standard(const HPoint& p) const { return HPoint(from_std * p.v); }
    HLine line_to_standard(const HLine& l) const { return HLine(from_std.transpose() * l.v); }
    HLine line_from_standard(const HLine& l) const { return HLine(to_std.transpose() * l.v); }
};

namespace detail {

// Projectivity sending (p1, p2, p3, p4) in general position to
// (q1, q2, q3, q4) in general position, unique up to scale.
inline Mat3<Rational> four_point_projectivity(const std::array<HPoint, 4>& src,
                                              const std::array<HPoint, 4>& dst) {
    auto half = [](const std::array<HPoint, 4>& pts) {
        Mat3<Rational> m = Mat3<Rational>::from_cols(pts[0].v, pts[1].v, pts[2].v);
        auto coeff = solve3(m, pts[3].v);
        if (!coeff) throw Error("four_point_projectivity: degenerate frame");
        for (int i = 0; i < 3; ++i)
            if ((*coeff)[static_cast<size_t>(i)] == 0)
                throw Error("four_point_projectivity: three collinear points");
        Mat3<Rational> scaled;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                scaled(i, j) = m(i, j) * (*coeff)[static_cast<size_t>(j)];
        return scaled;
    };
    Mat3<Rational> ms = half(src), md = half(dst);
    // T = md * ms^{-1}, adjugate stands in for the inverse up to scale
    return md * ms.adjugate();
}

}  // namespace detail

inline QuadraticMap make_map(const Quadrangle& q) {
    QuadraticMap f;
    f.base = q;
    f.pencil = pencil_of_quadrangle(q);
    std::array<HPoint, 4> targets = {
        HPoint(Rational(1), Rational(1), Rational(1)), HPoint(Rational(1), Rational(-1), Rational(1)),
        HPoint(Rational(-1), Rational(-1), Rational(1)), HPoint(Rational(-1), Rational(1), Rational(1))};
    f.to_std = detail::four_point_projectivity(q.vertex, targets);
    f.from_std = f.to_std.adjugate();
    // fundamental triangle must land on the coordinate triangle
    if (!(f.to_standard(q.e) == HPoint(Rational(1), Rational(0), Rational(0))) ||
        !(f.to_standard(q.f) == HPoint(Rational(0), Rational(1), Rational(0))) ||
        !(f.to_standard(q.g) == HPoint(Rational(0), Rational(0), Rational(1))))
        throw Error("make_map: normalizer image check failed");
    return f;
}

// Point image: coordinatewise reciprocal in the standard frame. Points on a
// fundamental side (off the vertices) blow down to the opposite vertex; the
// fundamental vertices themselves are indeterminate.
inline HPoint apply_point(const QuadraticMap& f, const HPoint& h) {
    Vec3<Rational> y = f.to_std * h.v;
    Vec3<Rational> w{y[1] * y[2], y[0] * y[2], y[0] * y[1]};
    if (w.is_zero()) throw Error("apply_point: indeterminate at fundamental vertex");
    return HPoint(f.from_std * w);
}

// Route (i): meet of the polars with respect to the two degenerate members.
inline HPoint apply_point_via_polars(const QuadraticMap& f, const HPoint& h) {
    HLine l1 = polar(f.pencil.c1, h);
    HLine l2 = polar(f.pencil.c2, h);
    if (l1 == l2) {
        // h on a fundamental side: both polars run through the opposite
        // vertex; fall back to a third member's polar
        HLine l3 = polar(Conic::from_line_pair(f.base.ad, f.base.bc), h);
        return meet(l1, l3);
    }
    return meet(l1, l2);
}

// Route (ii): harmonic conjugate lines through the fundamental vertices.
inline HPoint apply_point_via_harmonic(const QuadraticMap& f, const HPoint& h) {
    const Quadrangle& q = f.base;
    struct VertexSides {
        HPoint v;
        HLine s1, s2;
    };
    std::array<VertexSides, 3> cfg = {VertexSides{q.e, q.ad, q.bc},
                                      VertexSides{q.f, q.ab, q.cd},
                                      VertexSides{q.g, q.ac, q.bd}};
    std::vector<HLine> images;
    for (const auto& vs : cfg) {
        if (h == vs.v) throw Error("apply_point_via_harmonic: point is a fundamental vertex");
        HLine l = join(vs.v, h);
        if (l == vs.s1 || l == vs.s2) continue;  // line through V along a side: skip
        images.push_back(harmonic_conjugate_line(l, vs.s1, vs.s2));
    }
    if (images.size() < 2)
        throw Error("apply_point_via_harmonic: not enough harmonic lines (special position)");
    HPoint p = meet(images[0], images[1]);
    for (size_t k = 2; k < images.size(); ++k)
        if (!incident(p, images[k]))
            throw Error("apply_point_via_harmonic: lines not concurrent");
    return p;
}

// Line image: the conic u yz + v xz + w xy in the standard frame, pulled
// back; equals the nine-point conic of the transversal.
inline Conic apply_line(const QuadraticMap& f, const HLine& r) {
    for (const auto& s : f.base.fundamental_sides())
        if (s == r) throw Error("apply_line: fundamental side blows down to a point");
    HLine rn = f.line_to_standard(r);
    Mat3<Rational> mn;
    mn(0, 1) = mn(1, 0) = rn.v[2];
    mn(0, 2) = mn(2, 0) = rn.v[1];
    mn(1, 2) = mn(2, 1) = rn.v[0];
    Mat3<Rational> m = f.to_std.transpose() * mn * f.to_std;
    return Conic(m);
}

// Inverse of apply_line: a conic through the fundamental triangle has zero
// diagonal in the standard frame, and its off-diagonal entries are the
// line coordinates.
inline HLine apply_conic_to_line(const QuadraticMap& f, const Conic& omega) {
    if (omega.rank() < 3) throw Error("apply_conic_to_line: degenerate conic");
    Mat3<Rational> mn = f.from_std.transpose() * omega.m * f.from_std;
    if (!(mn(0, 0) == 0 && mn(1, 1) == 0 && mn(2, 2) == 0))
        throw Error("apply_conic_to_line: conic not through fundamental triangle");
    HLine rn(mn(1, 2), mn(0, 2), mn(0, 1));
    return f.line_from_standard(rn);
}

// Curve transform: substitute the reciprocal map in standard coordinates and
// strip the exceptional-line monomial x^a y^b z^c, with the multiplicities
// recomputed from the input.
struct CurveTransformResult {
    PlaneCurve curve;
    int mult_e = 0, mult_f = 0, mult_g = 0;  // multiplicities at the vertices
    int input_degree = 0;
};

inline CurveTransformResult transform_curve(const QuadraticMap& f, const PlaneCurve& c) {
    // move to standard coordinates: c_n(Y) = c(from_std * Y)
    std::array<Poly, 3> lin;
    for (int i = 0; i < 3; ++i) {
        Poly s;
        for (int j = 0; j < 3; ++j) s += f.from_std(i, j) * Poly::variable(j);
        lin[static_cast<size_t>(i)] = s;
    }
    Poly cn = c.poly.substitute(lin).canonical();
    // fundamental side as a component <=> cn divisible by a coordinate
    for (int v = 0; v < 3; ++v)
        if (cn.min_degree_in(v) > 0)
            throw Error("transform_curve: fundamental side is a component");
    // multiplicities at the coordinate vertices
    auto mult_at_vertex = [&](int v) {
        int best = cn.total_degree() + 1;
        for (const auto& [m, coef] : cn.terms()) {
            int s = 0;
            for (int w = 0; w < 3; ++w)
                if (w != v) s += static_cast<int>(m.e[static_cast<size_t>(w)]);
            best = std::min(best, s);
        }
        return best;
    };
    int a = mult_at_vertex(0), b = mult_at_vertex(1), cc = mult_at_vertex(2);
    std::array<Poly, 3> recip = {Poly::parse("y*z"), Poly::parse("x*z"), Poly::parse("x*y")};
    Poly img = cn.substitute(recip);
    // strip x^a y^b z^c
    Mono strip;
    strip.e = {static_cast<unsigned>(a), static_cast<unsigned>(b), static_cast<unsigned>(cc)};
    Poly stripped = exact_div(img, Poly::monomial(strip, 1));
    int n = c.degree();
    if (stripped.total_degree() != 2 * n - (a + b + cc))
        throw Error("transform_curve: degree law violated after stripping");
    // back to original coordinates: result(X) = stripped(to_std * X)
    std::array<Poly, 3> lin2;
    for (int i = 0; i < 3; ++i) {
        Poly s;
        for (int j = 0; j < 3; ++j) s += f.to_std(i, j) * Poly::variable(j);
        lin2[static_cast<size_t>(i)] = s;
    }
    CurveTransformResult out;
    out.curve = PlaneCurve(stripped.substitute(lin2));
    out.mult_e = a;
    out.mult_f = b;
    out.mult_g = cc;
    out.input_degree = n;
    return out;
}

// --------------------------------------------------------------------------
// Moebius map from three parameter correspondences; used for the vertex
// involutions.

inline std::array<Rational, 4> mobius_from_three_pairs(
    const std::array<std::pair<ExtScalar, ExtScalar>, 3>& pairs) {
    // unknowns (a, b, c, d): a t + b - c t t' - d t' = 0
    std::vector<std::vector<Rational>> rows;
    for (const auto& [t, tp] : pairs) {
        if (!t.infinite && !tp.infinite)
            rows.push_back({t.value, 1, -t.value * tp.value, -tp.value});
        else if (t.infinite && !tp.infinite)
            rows.push_back({1, 0, -tp.value, 0});
        else if (!t.infinite && tp.infinite)
            rows.push_back({0, 0, t.value, 1});
        else
            rows.push_back({0, 0, 1, 0});  // inf -> inf forces c = 0
    }
    auto basis = nullspace(rows, 4);
    if (basis.size() != 1) throw Error("mobius_from_three_pairs: degenerate correspondences");
    return {basis[0][0], basis[0][1], basis[0][2], basis[0][3]};
}

// Involution induced on the line pencil at a fundamental vertex: the line
// V-H corresponds to V-f(H). Its double lines are the two quadrangle sides
// through the vertex.
struct VertexInvolutionResult {
    LinePencilInvolution involution;
    std::array<HLine, 2> double_lines;
};

inline VertexInvolutionResult vertex_involution(const QuadraticMap& f, const HPoint& v) {
    const Quadrangle& q = f.base;
    HLine s1, s2;
    if (v == q.e) {
        s1 = q.ad;
        s2 = q.bc;
    } else if (v == q.f) {
        s1 = q.ab;
        s2 = q.cd;
    } else if (v == q.g) {
        s1 = q.ac;
        s2 = q.bd;
    } else {
        throw Error("vertex_involution: not a fundamental vertex");
    }
    // basis lines for the pencil at v: two sides through v would make the
    // fixed points 0 and inf; use generic basis to exercise the machinery
    LinePencilInvolution inv;
    inv.basis0 = s1;
    inv.basis1 = s2;
    // parameter of a line l = basis0 + t basis1 through v
    auto param_of = [&](const HLine& l) -> ExtScalar {
        auto [alpha, beta] = line_coordinates(HPoint(l.v), HPoint(s1.v), HPoint(s2.v));
        if (alpha == 0) return ExtScalar::inf();
        return {false, beta / alpha};
    };
    // images of three sample pencil lines
    std::array<std::pair<ExtScalar, ExtScalar>, 3> pairs;
    int filled = 0;
    for (long k = 1; filled < 3 && k < 40; ++k) {
        Rational t(k, 1);
        HLine l(s1.v + s2.v * t);
        // a point on l other than v
        auto [p0, p1] = span_points(l);
        HPoint h = (p0 == v) ? p1 : p0;
        if (h == v) continue;
        HPoint himg;
        try {
            himg = apply_point(f, h);
        } catch (const Error&) {
            continue;
        }
        if (himg == v) continue;  // blown-down sample
        HLine limg = join(v, himg);
        pairs[static_cast<size_t>(filled++)] = {ExtScalar{false, t}, param_of(limg)};
    }
    if (filled < 3) throw Error("vertex_involution: could not sample pencil");
    auto m = mobius_from_three_pairs(pairs);
    inv.a = m[0];
    inv.b = m[1];
    inv.c = m[2];
    inv.d = m[3];
    if (inv.a + inv.d != 0) throw Error("vertex_involution: map is not an involution");
    VertexInvolutionResult out{inv, {s1, s2}};
    return out;
}

}  // namespace ninepoint
