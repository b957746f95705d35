#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ninepoint/linalg.hpp"
#include "ninepoint/quadext.hpp"
#include "ninepoint/rational.hpp"

namespace ninepoint {

namespace detail {

// Canonical representative of a projective triple. Over Q: coprime integer
// coordinates, first nonzero one positive. Over other fields: first nonzero
// coordinate scaled to 1.
inline Vec3<Rational> canonical_triple(const Vec3<Rational>& v) {
    Int l = 1;
    for (int i = 0; i < 3; ++i) l = lcm_int(l, den(v[i]));
    Int g = 0;
    for (int i = 0; i < 3; ++i) g = gcd_int(g, num(v[i]) * (l / den(v[i])));
    if (g == 0) throw Error("canonical_triple: zero vector");
    Rational s(l, g);
    for (int i = 0; i < 3; ++i)
        if (v[i] != 0) {
            if (v[i] < 0) s = -s;
            break;
        }
    return v * s;
}

inline Vec3<QuadExt> canonical_triple(const Vec3<QuadExt>& v) {
    for (int i = 0; i < 3; ++i)
        if (!v[i].is_zero()) {
            QuadExt inv = QuadExt(1) / v[i];
            return v * inv;
        }
    throw Error("canonical_triple: zero vector");
}

}  // namespace detail

// Homogeneous point (x : y : z), stored canonically so == is projective
// equality.
template <class K>
struct TPoint {
    Vec3<K> v;
    TPoint() : v(K(1), K(0), K(0)) {}
    explicit TPoint(Vec3<K> raw) : v(detail::canonical_triple(raw)) {}
    TPoint(K x, K y, K z) : TPoint(Vec3<K>{std::move(x), std::move(y), std::move(z)}) {}

    const K& x() const { return v[0]; }
    const K& y() const { return v[1]; }
    const K& z() const { return v[2]; }

    friend bool operator==(const TPoint& a, const TPoint& b) { return a.v == b.v; }
    friend bool operator!=(const TPoint& a, const TPoint& b) { return !(a.v == b.v); }
};

// Homogeneous line u*x + v*y + w*z = 0, same canonical storage.
template <class K>
struct TLine {
    Vec3<K> v;
    TLine() : v(K(0), K(0), K(1)) {}
    explicit TLine(Vec3<K> raw) : v(detail::canonical_triple(raw)) {}
    TLine(K u, K vv, K w) : TLine(Vec3<K>{std::move(u), std::move(vv), std::move(w)}) {}

    const K& u() const { return v[0]; }
    const K& w() const { return v[2]; }

    friend bool operator==(const TLine& a, const TLine& b) { return a.v == b.v; }
    friend bool operator!=(const TLine& a, const TLine& b) { return !(a.v == b.v); }
};

using HPoint = TPoint<Rational>;
using HLine = TLine<Rational>;
using QPoint = TPoint<QuadExt>;
using QLine = TLine<QuadExt>;

template <class K>
K incidence(const TPoint<K>& p, const TLine<K>& l) {
    return dot(p.v, l.v);
}
template <class K>
bool incident(const TPoint<K>& p, const TLine<K>& l) {
    using ninepoint::is_zero;
    return is_zero(incidence(p, l));
}

template <class K>
TLine<K> join(const TPoint<K>& p, const TPoint<K>& q) {
    Vec3<K> c = cross(p.v, q.v);
    if (c.is_zero()) throw Error("join: coincident elements");
    return TLine<K>(c);
}

template <class K>
TPoint<K> meet(const TLine<K>& l, const TLine<K>& m) {
    Vec3<K> c = cross(l.v, m.v);
    if (c.is_zero()) throw Error("meet: coincident elements");
    return TPoint<K>(c);
}

template <class K>
bool collinear(const TPoint<K>& a, const TPoint<K>& b, const TPoint<K>& c) {
    using ninepoint::is_zero;
    return is_zero(dot(cross(a.v, b.v), c.v));
}
template <class K>
bool concurrent(const TLine<K>& a, const TLine<K>& b, const TLine<K>& c) {
    using ninepoint::is_zero;
    return is_zero(dot(cross(a.v, b.v), c.v));
}

// Coordinates of p in the basis (a, b) on their common line; requires
// collinearity. Returns (alpha, beta) with p ~ alpha*a + beta*b.
template <class K>
std::pair<K, K> line_coordinates(const TPoint<K>& p, const TPoint<K>& a, const TPoint<K>& b) {
    using ninepoint::is_zero;
    if (!collinear(p, a, b)) throw Error("line_coordinates: not collinear");
    // p x b = alpha (a x b); p x a = -beta (a x b)
    Vec3<K> ab = cross(a.v, b.v);
    Vec3<K> pb = cross(p.v, b.v);
    Vec3<K> pa = cross(p.v, a.v);
    for (int i = 0; i < 3; ++i) {
        if (!is_zero(ab[i])) return {pb[i] / ab[i], -(pa[i] / ab[i])};
    }
    throw Error("line_coordinates: coincident basis points");
}

// Extended scalar for cross-ratios: a rational value or the infinity mark.
struct ExtScalar {
    bool infinite = false;
    Rational value = 0;
    static ExtScalar inf() { return {true, 0}; }
    friend bool operator==(const ExtScalar& a, const ExtScalar& b) {
        if (a.infinite != b.infinite) return false;
        return a.infinite || a.value == b.value;
    }
    std::string str() const { return infinite ? "inf" : to_string(value); }
};

// Cross-ratio (A,B; C,D) of four collinear points. A, B, C must be pairwise
// positioned so the ratio is defined; coincidences among {C,D} and {A,B}
// yield the extended values 0, 1, or infinity.
inline ExtScalar cross_ratio(const HPoint& a, const HPoint& b, const HPoint& c,
                             const HPoint& d) {
    if (a == b) throw Error("cross_ratio: coincident base points");
    if (!collinear(a, b, c) || !collinear(a, b, d)) throw Error("cross_ratio: not collinear");
    auto [ca, cb] = line_coordinates(c, a, b);
    auto [da, db] = line_coordinates(d, a, b);
    // (A,B;C,D) = (cb/ca) / (db/da) = (cb*da) / (ca*db)
    Rational nume = cb * da;
    Rational deno = ca * db;
    if (deno == 0) {
        if (nume == 0) throw Error("cross_ratio: undefined (two coincident pairs)");
        return ExtScalar::inf();
    }
    return {false, nume / deno};
}

// Fourth harmonic point: Q with (A,B; P,Q) = -1.
template <class K>
TPoint<K> harmonic_conjugate(const TPoint<K>& p, const TPoint<K>& a, const TPoint<K>& b) {
    if (p == a || p == b) throw Error("harmonic_conjugate: conjugate undefined");
    auto [pa, pb] = line_coordinates(p, a, b);
    return TPoint<K>(a.v * pa - b.v * pb);
}

// Fourth harmonic line through the common point of m and n.
template <class K>
TLine<K> harmonic_conjugate_line(const TLine<K>& l, const TLine<K>& m, const TLine<K>& n) {
    using ninepoint::is_zero;
    if (!is_zero(dot(cross(l.v, m.v), n.v))) throw Error("harmonic_conjugate_line: not concurrent");
    if (l == m || l == n) throw Error("harmonic_conjugate_line: conjugate undefined");
    TPoint<K> lp{l.v[0], l.v[1], l.v[2]};
    TPoint<K> mp{m.v[0], m.v[1], m.v[2]};
    TPoint<K> np{n.v[0], n.v[1], n.v[2]};
    TPoint<K> q = harmonic_conjugate(lp, mp, np);
    return TLine<K>(q.v);
}

// Affine chart. The infinity line defaults to z = 0; metric predicates
// (orthogonality, circles) are tied to that standard chart.
struct Chart {
    HLine infinity_line = HLine(Rational(0), Rational(0), Rational(1));

    bool is_standard() const {
        return infinity_line == HLine(Rational(0), Rational(0), Rational(1));
    }
    bool is_affine(const HPoint& p) const { return !incident(p, infinity_line); }
};

// Affine representative with <p, infinity> = 1; the usual (x/z, y/z, 1)
// in the standard chart.
inline Vec3<Rational> affine_rep(const HPoint& p, const Chart& chart) {
    Rational s = incidence(p, chart.infinity_line);
    if (s == 0) throw Error("affine_rep: point at infinity");
    return p.v * (Rational(1) / s);
}

inline HPoint midpoint(const HPoint& a, const HPoint& b, const Chart& chart = {}) {
    if (a == b) throw Error("midpoint: coincident elements");
    if (!chart.is_affine(a) || !chart.is_affine(b)) throw Error("midpoint: point at infinity");
    return HPoint(affine_rep(a, chart) + affine_rep(b, chart));
}

inline HPoint centroid(const std::vector<HPoint>& pts, const Chart& chart = {}) {
    if (pts.empty()) throw Error("centroid: empty point list");
    Vec3<Rational> s{0, 0, 0};
    for (const auto& p : pts) {
        if (!chart.is_affine(p)) throw Error("centroid: point at infinity");
        s = s + affine_rep(p, chart);
    }
    return HPoint(s);
}

// Direction of an affine line as a point at infinity.
inline HPoint direction_of(const HLine& l, const Chart& chart = {}) {
    if (l == chart.infinity_line) throw Error("direction_of: infinity line has no direction");
    return meet(l, chart.infinity_line);
}

inline bool orthogonal(const HLine& l, const HLine& m, const Chart& chart = {}) {
    if (!chart.is_standard()) throw Error("orthogonal: metric requires the standard chart");
    if (l == chart.infinity_line || m == chart.infinity_line)
        throw Error("orthogonal: infinity line has no direction");
    return l.v[0] * m.v[0] + l.v[1] * m.v[1] == 0;
}

// Squared Euclidean distance between affine points (standard chart).
inline Rational dist2(const HPoint& a, const HPoint& b, const Chart& chart = {}) {
    if (!chart.is_standard()) throw Error("dist2: metric requires the standard chart");
    Vec3<Rational> pa = affine_rep(a, chart), pb = affine_rep(b, chart);
    Rational dx = pa[0] - pb[0], dy = pa[1] - pb[1];
    return dx * dx + dy * dy;
}

// Line through p perpendicular to l (standard chart).
inline HLine perpendicular_through(const HPoint& p, const HLine& l, const Chart& chart = {}) {
    if (!chart.is_standard()) throw Error("perpendicular_through: metric requires the standard chart");
    // direction of l is (-l_v, l_u); the perpendicular has normal ~ (-l_v, l_u)
    if (p.z() == 0) throw Error("perpendicular_through: point at infinity");
    Rational a = -l.v[1], b = l.v[0];
    Rational c = -(a * p.x() + b * p.y()) / p.z();
    return HLine(a, b, c);
}

inline HPoint affine_point(const Rational& x, const Rational& y) {
    return HPoint(x, y, Rational(1));
}

inline std::string to_string(const HPoint& p) {
    return "(" + to_string(p.x()) + " : " + to_string(p.y()) + " : " + to_string(p.z()) + ")";
}
inline std::string to_string(const HLine& l) {
    return "[" + to_string(l.v[0]) + " : " + to_string(l.v[1]) + " : " + to_string(l.v[2]) + "]";
}

}  // namespace ninepoint
