#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ninepoint/plane.hpp"
#include "ninepoint/poly.hpp"
#include "ninepoint/upoly.hpp"

namespace ninepoint {

namespace detail {

template <class K>
Mat3<K> canonical_sym(const Mat3<K>& m);

inline Mat3<Rational> canonical_sym(const Mat3<Rational>& m) {
    Int l = 1;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) l = lcm_int(l, den(m(i, j)));
    Int g = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) g = gcd_int(g, num(m(i, j)) * (l / den(m(i, j))));
    if (g == 0) throw Error("Conic: zero matrix");
    Rational s(l, g);
    for (int i = 0; i < 3; ++i) {
        for (int j = i; j < 3; ++j)
            if (m(i, j) != 0) {
                if (m(i, j) < 0) s = -s;
                i = 3;
                break;
            }
    }
    return m * s;
}

inline Mat3<QuadExt> canonical_sym(const Mat3<QuadExt>& m) {
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j)
            if (!m(i, j).is_zero()) {
                QuadExt inv = QuadExt(1) / m(i, j);
                return m * inv;
            }
    throw Error("Conic: zero matrix");
}

}  // namespace detail

// Conic as a symmetric 3x3 matrix up to scale; P on the conic iff
// P^T M P = 0 exactly. Canonical storage makes equality decidable.
template <class K>
struct TConic {
    Mat3<K> m;

    TConic() = default;
    explicit TConic(const Mat3<K>& raw) : m(detail::canonical_sym(raw)) {
        if (!m.is_symmetric()) throw Error("Conic: matrix not symmetric");
    }

    static TConic from_coeffs(K xx, K yy, K zz, K xy, K xz, K yz) {
        // a x^2 + b y^2 + c z^2 + d xy + e xz + f yz with matrix halving the
        // mixed terms
        Mat3<K> r;
        K half = K(1) / K(2);
        r(0, 0) = std::move(xx);
        r(1, 1) = std::move(yy);
        r(2, 2) = std::move(zz);
        r(0, 1) = r(1, 0) = xy * half;
        r(0, 2) = r(2, 0) = xz * half;
        r(1, 2) = r(2, 1) = yz * half;
        return TConic(r);
    }

    // The rank-2 (or rank-1, when l = m) conic consisting of two lines.
    static TConic from_line_pair(const TLine<K>& l, const TLine<K>& mm) {
        Mat3<K> r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r(i, j) = l.v[i] * mm.v[j] + mm.v[i] * l.v[j];
        return TConic(r);
    }

    K eval(const TPoint<K>& p) const { return dot(p.v, m * p.v); }
    K bilinear(const TPoint<K>& p, const TPoint<K>& q) const { return dot(p.v, m * q.v); }
    bool contains(const TPoint<K>& p) const {
        using ninepoint::is_zero;
        return is_zero(eval(p));
    }

    int rank() const { return m.rank(); }

    friend bool operator==(const TConic& a, const TConic& b) { return a.m == b.m; }
    friend bool operator!=(const TConic& a, const TConic& b) { return !(a.m == b.m); }
};

using Conic = TConic<Rational>;
using QConic = TConic<QuadExt>;

// Dual conic: line l is tangent iff l^T N l = 0. For rank-3 conics the dual
// matrix is the adjugate.
template <class K>
struct TDualConic {
    Mat3<K> n;
    TDualConic() = default;
    explicit TDualConic(const Mat3<K>& raw) : n(detail::canonical_sym(raw)) {
        if (!n.is_symmetric()) throw Error("DualConic: matrix not symmetric");
    }
    static TDualConic from_point_pair(const TPoint<K>& p, const TPoint<K>& q) {
        Mat3<K> r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r(i, j) = p.v[i] * q.v[j] + q.v[i] * p.v[j];
        return TDualConic(r);
    }
    K eval(const TLine<K>& l) const { return dot(l.v, n * l.v); }
    bool tangent_line(const TLine<K>& l) const {
        using ninepoint::is_zero;
        return is_zero(eval(l));
    }
    int rank() const { return n.rank(); }
    friend bool operator==(const TDualConic& a, const TDualConic& b) { return a.n == b.n; }
};

using DualConic = TDualConic<Rational>;
using QDualConic = TDualConic<QuadExt>;

template <class K>
TDualConic<K> dual_of(const TConic<K>& c) {
    if (c.rank() < 3) throw Error("dual_of: degenerate conic");
    return TDualConic<K>(c.m.adjugate());
}
template <class K>
TConic<K> primal_of(const TDualConic<K>& d) {
    if (d.rank() < 3) throw Error("primal_of: degenerate dual conic");
    return TConic<K>(d.n.adjugate());
}

// --------------------------------------------------------------------------
// Polynomial round trip (grammar side of the conic interfaces).

inline Conic conic_from_poly(const Poly& p) {
    if (p.is_zero() || !p.is_homogeneous() || p.total_degree() != 2)
        throw Error("conic_from_poly: not a homogeneous quadratic");
    auto c = [&](unsigned ex, unsigned ey, unsigned ez) {
        return p.coeff(Mono{{ex, ey, ez}});
    };
    return Conic::from_coeffs(c(2, 0, 0), c(0, 2, 0), c(0, 0, 2), c(1, 1, 0), c(1, 0, 1),
                              c(0, 1, 1));
}

inline Poly conic_to_poly(const Conic& c) {
    Poly x = Poly::variable(0), y = Poly::variable(1), z = Poly::variable(2);
    const Mat3<Rational>& m = c.m;
    Poly p = m(0, 0) * x * x + m(1, 1) * y * y + m(2, 2) * z * z +
             Rational(2) * m(0, 1) * x * y + Rational(2) * m(0, 2) * x * z +
             Rational(2) * m(1, 2) * y * z;
    return p.canonical();
}

// --------------------------------------------------------------------------
// Pole / polar.

template <class K>
TLine<K> polar(const TConic<K>& c, const TPoint<K>& p) {
    Vec3<K> l = c.m * p.v;
    if (l.is_zero()) throw Error("polar: singular point of conic");
    return TLine<K>(l);
}

template <class K>
TPoint<K> pole(const TConic<K>& c, const TLine<K>& l) {
    if (c.rank() < 3) throw Error("pole: degenerate conic");
    return TPoint<K>(c.m.adjugate() * l.v);
}

// Center: pole of the chart's infinity line. Parabolas return their point
// at infinity with the flag set.
struct CenterResult {
    HPoint point;
    bool at_infinity = false;
};

inline CenterResult center(const Conic& c, const Chart& chart = {}) {
    if (c.rank() < 3) throw Error("center: degenerate conic");
    HPoint p = pole(c, chart.infinity_line);
    return {p, incident(p, chart.infinity_line)};
}

// --------------------------------------------------------------------------
// Affine classification relative to the standard chart.

enum class ConicKind { Ellipse, Parabola, Hyperbola };

struct Classification {
    int rank = 3;
    std::optional<ConicKind> kind;  // set iff rank == 3
    bool is_circle = false;
    bool is_equilateral_hyperbola = false;
    bool has_real_points = true;  // false only for imaginary ellipses
};

inline Classification classify(const Conic& c, const Chart& chart = {}) {
    if (!chart.is_standard()) throw Error("classify: affine kinds require the standard chart");
    Classification r;
    r.rank = c.rank();
    if (r.rank < 3) return r;
    Rational det2 = c.m(0, 0) * c.m(1, 1) - c.m(0, 1) * c.m(0, 1);
    if (det2 > 0) {
        r.kind = ConicKind::Ellipse;
        // real iff the form is indefinite: sign(det3) opposite to trace part
        Rational det3 = c.m.det();
        r.has_real_points = sign(det3) * sign(c.m(0, 0)) < 0;
    } else if (det2 == 0) {
        r.kind = ConicKind::Parabola;
    } else {
        r.kind = ConicKind::Hyperbola;
    }
    r.is_circle = (c.m(0, 0) == c.m(1, 1) && c.m(0, 1) == 0 && r.kind == ConicKind::Ellipse);
    r.is_equilateral_hyperbola =
        (c.m(0, 0) + c.m(1, 1) == 0 && r.kind == ConicKind::Hyperbola);
    return r;
}

// --------------------------------------------------------------------------
// Restriction to a line and tangency of lines.

// Two distinct points spanning a line, chosen deterministically.
template <class K>
std::pair<TPoint<K>, TPoint<K>> span_points(const TLine<K>& l) {
    using ninepoint::is_zero;
    std::vector<TPoint<K>> pts;
    for (int axis = 0; axis < 3 && pts.size() < 2; ++axis) {
        Vec3<K> e;
        e[static_cast<size_t>(axis)] = K(1);
        Vec3<K> c = cross(l.v, e);
        if (c.is_zero()) continue;
        TPoint<K> p{c};
        if (pts.empty() || !(pts[0] == p)) pts.push_back(p);
    }
    if (pts.size() < 2) throw Error("span_points: could not span line");
    return {pts[0], pts[1]};
}

// Binary quadratic a s^2 + 2b st + c t^2 of the conic restricted to the
// line through p0 (s) and p1 (t).
template <class K>
struct LineRestriction {
    TPoint<K> p0, p1;
    K a, b, c;
    K disc() const { return b * b - a * c; }
    bool vanishes() const {
        using ninepoint::is_zero;
        return is_zero(a) && is_zero(b) && is_zero(c);
    }
    TPoint<K> at(const K& s, const K& t) const { return TPoint<K>(p0.v * s + p1.v * t); }
};

template <class K>
LineRestriction<K> restrict_to_line(const TConic<K>& cn, const TLine<K>& l) {
    auto [p0, p1] = span_points(l);
    return {p0, p1, cn.eval(p0), cn.bilinear(p0, p1), cn.eval(p1)};
}

enum class LineTangency { Secant, Tangent, External };

struct LineTangencyResult {
    LineTangency kind;
    std::optional<HPoint> contact;  // set for tangents
};

inline LineTangencyResult line_tangency(const Conic& c, const HLine& l) {
    if (c.rank() < 2) {
        // rank 1 is a double line: restriction either vanishes or is a square
        LineRestriction<Rational> r = restrict_to_line(c, l);
        if (r.vanishes()) throw Error("line_tangency: line on conic");
        if (r.disc() != 0) throw Error("line_tangency: unexpected rank-1 restriction");
    }
    LineRestriction<Rational> r = restrict_to_line(c, l);
    if (r.vanishes()) throw Error("line_tangency: line on conic");
    Rational d = r.disc();
    if (d > 0) return {LineTangency::Secant, std::nullopt};
    if (d < 0) return {LineTangency::External, std::nullopt};
    // double root of a s^2 + 2b st + c t^2
    HPoint contact = (r.a != 0 || r.b != 0) ? r.at(-r.b, r.a) : r.at(Rational(1), Rational(0));
    return {LineTangency::Tangent, contact};
}

// Both intersection points of a rank>=2 conic with a line, over QuadExt.
inline std::pair<QPoint, QPoint> line_conic_intersection(const Conic& c, const HLine& l) {
    LineRestriction<Rational> r = restrict_to_line(c, l);
    if (r.vanishes()) throw Error("line_conic_intersection: line on conic");
    QPoint q0{QuadExt(r.p0.v[0]), QuadExt(r.p0.v[1]), QuadExt(r.p0.v[2])};
    QPoint q1{QuadExt(r.p1.v[0]), QuadExt(r.p1.v[1]), QuadExt(r.p1.v[2])};
    if (r.a == 0) {
        // s factor: roots (s:t) = (1:0) and (c : -2b) when b != 0
        if (r.b == 0) return {q0, q0};
        QPoint other{q0.v * QuadExt(r.c) - q1.v * QuadExt(2 * r.b)};
        return {q0, other};
    }
    auto [t1, t2] = quadratic_roots(r.a, 2 * r.b, r.c);  // roots in s/t... see below
    // a s^2 + 2b s t + c t^2 = 0 with t = 1: s = root
    QPoint x1{q0.v * t1 + q1.v};
    QPoint x2{q0.v * t2 + q1.v};
    return {x1, x2};
}

// --------------------------------------------------------------------------
// Conic-conic tangency via the pencil determinant cubic. Two distinct
// rank-3 conics touch (intersection multiplicity >= 2 somewhere, possibly
// at complex points) iff det(l*M1 + u*M2) has a repeated root, i.e. the
// tact discriminant vanishes.

// Binary cubic det(l*M1 + u*M2) as coefficients c[k] of l^k u^(3-k).
inline std::array<Rational, 4> pencil_det_cubic(const Mat3<Rational>& m1,
                                                const Mat3<Rational>& m2) {
    std::array<Rational, 4> c{};
    // evaluate det at 4 values of (l:u) and interpolate the binary cubic
    // det(l M1 + M2) is cubic in l: sample l = 0,1,-1,2
    auto det_at = [&](const Rational& l) {
        Mat3<Rational> m = m1 * l + m2;
        return m.det();
    };
    Rational d0 = det_at(0), d1 = det_at(1), dm1 = det_at(-1), d2 = det_at(2);
    // p(l) = a l^3 + b l^2 + c l + d
    Rational d = d0;
    Rational bcoef = (d1 + dm1) / 2 - d0;
    Rational a_plus_c = d1 - d0 - bcoef;
    Rational a = (d2 - d0 - 4 * bcoef - 2 * a_plus_c) / 6;
    Rational ccoef = a_plus_c - a;
    c[3] = a;      // l^3
    c[2] = bcoef;  // l^2 u
    c[1] = ccoef;  // l u^2
    c[0] = d;      // u^3
    return c;
}

inline Rational binary_cubic_discriminant(const std::array<Rational, 4>& c) {
    const Rational &a = c[3], &b = c[2], &cc = c[1], &d = c[0];
    return 18 * a * b * cc * d - 4 * b * b * b * d + b * b * cc * cc - 4 * a * cc * cc * cc -
           27 * a * a * d * d;
}

enum class ConicTangency { Transversal, Tangent };

struct ConicTangencyResult {
    ConicTangency verdict;
    bool real_contact = false;
    std::optional<QPoint> contact;  // a real contact point when one exists
};

namespace detail {

// Candidate contact points for the repeated pencil member d (rank <= 2):
// intersections of its lines with c1 that lie on both conics with equal
// tangent lines.
inline ConicTangencyResult analyze_contact(const Conic& c1, const Conic& c2, const Conic& dgen) {
    ConicTangencyResult res{ConicTangency::Tangent, false, std::nullopt};
    // lift c1, c2 to QuadExt
    Mat3<QuadExt> m1, m2;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            m1(i, j) = QuadExt(c1.m(i, j));
            m2(i, j) = QuadExt(c2.m(i, j));
        }
    // walk candidate lines of the degenerate member
    std::vector<QLine> lines;
    if (dgen.rank() == 1) {
        // double line: any nonzero row
        for (int i = 0; i < 3; ++i) {
            Vec3<Rational> r = dgen.m.row(i);
            if (!r.is_zero()) {
                lines.emplace_back(QuadExt(r[0]), QuadExt(r[1]), QuadExt(r[2]));
                break;
            }
        }
    } else {
        // rank 2: the contact of a simple tangency is the singular point of
        // the repeated member, which is rational; test it first
        auto sv = kernel_vector(dgen.m);
        if (!sv) return res;
        HPoint s{*sv};
        if (c1.contains(s) && c2.contains(s) &&
            proportional(c1.m * s.v, c2.m * s.v)) {
            res.real_contact = true;
            res.contact = QPoint{QuadExt(s.v[0]), QuadExt(s.v[1]), QuadExt(s.v[2])};
            return res;
        }
        HLine probe = [&]() {
            for (auto cand : {HLine(Rational(1), Rational(0), Rational(0)),
                              HLine(Rational(0), Rational(1), Rational(0)),
                              HLine(Rational(0), Rational(0), Rational(1)),
                              HLine(Rational(1), Rational(1), Rational(1))}) {
                if (!incident(s, cand)) return cand;
            }
            throw Error("analyze_contact: no probe line");
        }();
        auto [x1, x2] = line_conic_intersection(dgen, probe);
        QPoint qs{QuadExt(s.v[0]), QuadExt(s.v[1]), QuadExt(s.v[2])};
        for (const QPoint& x : {x1, x2}) {
            if (x == qs) continue;
            lines.push_back(join(qs, x));
        }
    }
    for (const QLine& ln : lines) {
        // intersect ln with c1 over QuadExt: restriction quadratic
        // (coefficients in the line's field)
        TConic<QuadExt> qc1{m1};
        TConic<QuadExt> qc2{m2};
        // span ln
        std::pair<QPoint, QPoint> sp = span_points(ln);
        QuadExt a = qc1.eval(sp.first);
        QuadExt b = qc1.bilinear(sp.first, sp.second);
        QuadExt cc = qc1.eval(sp.second);
        // roots of a s^2 + 2 b s + cc over the (possibly extended) field:
        // only pursue candidates expressible in the current field or a
        // rational-discriminant extension of it
        std::vector<QPoint> candidates;
        if (a.is_zero()) {
            candidates.push_back(sp.first);
            if (!b.is_zero())
                candidates.emplace_back(sp.first.v * cc - sp.second.v * (QuadExt(2) * b));
        } else {
            QuadExt disc = b * b - a * cc;
            QuadExt inva = QuadExt(1) / a;
            if (disc.is_zero()) {
                candidates.emplace_back(sp.first.v * (-b * inva) + sp.second.v);
            } else if (auto dr = disc.as_rational()) {
                // roots s = (-b +- sqrt(disc)) / a stay expressible only when
                // sqrt(disc) lives in the line's own quadratic field
                QuadExt sq = QuadExt::sqrt_of(*dr);
                for (int k = -1; k <= 1; k += 2) {
                    try {
                        QuadExt root = (-b + (k < 0 ? -sq : sq)) * inva;
                        candidates.emplace_back(sp.first.v * root + sp.second.v);
                    } catch (const Error&) {
                        // incompatible radicands: contact lies in a biquadratic
                        // field; reality is then left unreported
                    }
                }
            }
        }
        for (const QPoint& p : candidates) {
            using ninepoint::is_zero;
            if (!is_zero(dot(p.v, m1 * p.v))) continue;
            if (!is_zero(dot(p.v, m2 * p.v))) continue;
            Vec3<QuadExt> t1 = m1 * p.v, t2 = m2 * p.v;
            if (!cross(t1, t2).is_zero()) continue;
            // genuine contact point; real iff coordinates are real
            bool real = p.v[0].is_real() && p.v[1].is_real() && p.v[2].is_real();
            if (real) {
                res.real_contact = true;
                res.contact = p;
                return res;
            }
        }
    }
    return res;
}

}  // namespace detail

inline ConicTangencyResult conic_tangency(const Conic& c1, const Conic& c2) {
    if (c1 == c2) throw Error("conic_tangency: identical conics");
    if (c1.rank() < 3 || c2.rank() < 3) throw Error("conic_tangency: degenerate conic");
    auto cubic = pencil_det_cubic(c1.m, c2.m);
    Rational disc = binary_cubic_discriminant(cubic);
    if (disc != 0) return {ConicTangency::Transversal, false, std::nullopt};
    // repeated root: find it (rational for a rational cubic with a repeated
    // root) and inspect the degenerate member
    UPoly p(std::vector<Rational>{cubic[0], cubic[1], cubic[2], cubic[3]});
    UPoly g = gcd(p, p.derivative());
    std::vector<std::pair<Rational, Rational>> roots;  // (l, u)
    if (p.deg() < 3) roots.emplace_back(1, 0);         // repeated root at infinity
    for (const Rational& r : rational_roots(g.deg() >= 1 ? g : p)) roots.emplace_back(r, 1);
    ConicTangencyResult out{ConicTangency::Tangent, false, std::nullopt};
    for (auto& [l, u] : roots) {
        Mat3<Rational> dm = c1.m * l + c2.m * u;
        Conic dgen{dm};
        auto r = detail::analyze_contact(c1, c2, dgen);
        if (r.real_contact) return r;
    }
    return out;
}

// --------------------------------------------------------------------------
// Degenerate conic splitting into lines (over QuadExt when needed).

inline std::pair<QLine, QLine> split_degenerate(const Conic& c) {
    if (c.rank() > 2) throw Error("split_degenerate: nondegenerate conic");
    if (c.rank() == 1) {
        for (int i = 0; i < 3; ++i) {
            Vec3<Rational> r = c.m.row(i);
            if (r.is_zero()) continue;
            QLine l{QuadExt(r[0]), QuadExt(r[1]), QuadExt(r[2])};
            return {l, l};
        }
        throw Error("split_degenerate: zero matrix");
    }
    auto sv = kernel_vector(c.m);
    if (!sv) throw Error("split_degenerate: kernel not found");
    HPoint s{*sv};
    HLine probe = [&]() {
        for (auto cand : {HLine(Rational(1), Rational(0), Rational(0)),
                          HLine(Rational(0), Rational(1), Rational(0)),
                          HLine(Rational(0), Rational(0), Rational(1)),
                          HLine(Rational(1), Rational(1), Rational(1))}) {
            if (!incident(s, cand)) return cand;
        }
        throw Error("split_degenerate: no probe line");
    }();
    auto [x1, x2] = line_conic_intersection(c, probe);
    QPoint qs{QuadExt(s.v[0]), QuadExt(s.v[1]), QuadExt(s.v[2])};
    return {join(qs, x1), join(qs, x2)};
}

// --------------------------------------------------------------------------
// Rational parameterization anchored at a point of the conic. X(t) is a
// quadratic polynomial triple; every rational t gives a rational point and
// the second intersection of any rational chord through the anchor is
// rational.

struct ConicParam {
    // component k: quad[k][i] * t^i
    std::array<std::array<Rational, 3>, 3> coeff;

    HPoint at(const Rational& t) const {
        Vec3<Rational> v;
        for (int k = 0; k < 3; ++k)
            v[static_cast<size_t>(k)] =
                coeff[static_cast<size_t>(k)][0] + coeff[static_cast<size_t>(k)][1] * t +
                coeff[static_cast<size_t>(k)][2] * t * t;
        return HPoint(v);
    }
    std::array<UPoly, 3> as_upolys() const {
        std::array<UPoly, 3> r;
        for (int k = 0; k < 3; ++k)
            r[static_cast<size_t>(k)] = UPoly(std::vector<Rational>(
                coeff[static_cast<size_t>(k)].begin(), coeff[static_cast<size_t>(k)].end()));
        return r;
    }
};

inline ConicParam param_with_point(const Conic& c, const HPoint& p) {
    if (c.rank() < 3) throw Error("param_with_point: degenerate conic");
    if (!c.contains(p)) throw Error("param_with_point: point not on conic");
    // pick q, r spanning a line not through p
    auto pick_line = [&]() {
        for (auto cand : {HLine(Rational(1), Rational(0), Rational(0)),
                          HLine(Rational(0), Rational(1), Rational(0)),
                          HLine(Rational(0), Rational(0), Rational(1)),
                          HLine(Rational(1), Rational(1), Rational(1)),
                          HLine(Rational(1), Rational(-1), Rational(2))}) {
            if (!incident(p, cand)) return cand;
        }
        throw Error("param_with_point: no spanning line");
    };
    HLine l = pick_line();
    auto [q, r] = span_points(l);
    // X(t) = (B^T M B) p - 2 (p^T M B) B, with B = q + t r
    Rational mqq = c.eval(q), mqr = c.bilinear(q, r), mrr = c.eval(r);
    Rational mpq = c.bilinear(p, q), mpr = c.bilinear(p, r);
    ConicParam out{};
    for (int k = 0; k < 3; ++k) {
        size_t sk = static_cast<size_t>(k);
        // t^0: mqq p - 2 mpq q
        out.coeff[sk][0] = mqq * p.v[sk] - 2 * mpq * q.v[sk];
        // t^1: 2 mqr p - 2 (mpq r + mpr q)
        out.coeff[sk][1] = 2 * mqr * p.v[sk] - 2 * (mpq * r.v[sk] + mpr * q.v[sk]);
        // t^2: mrr p - 2 mpr r
        out.coeff[sk][2] = mrr * p.v[sk] - 2 * mpr * r.v[sk];
    }
    return out;
}

// Second intersection of the line through p (on c) and q (anywhere) with c.
inline HPoint second_intersection(const Conic& c, const HPoint& p, const HPoint& q) {
    if (!c.contains(p)) throw Error("second_intersection: anchor not on conic");
    Rational bq = c.bilinear(p, q), qq = c.eval(q);
    // X = qq * p - 2 bq * q; when q also on c this returns q (chord), and
    // when the line is tangent at p it returns p
    Vec3<Rational> x = p.v * qq - q.v * (2 * bq);
    if (x.is_zero()) return p;
    return HPoint(x);
}

// --------------------------------------------------------------------------
// Conic through five points.

struct ConicFitResult {
    Conic conic;
    bool degenerate = false;  // rank <= 2
};

inline ConicFitResult conic_through_five(const std::array<HPoint, 5>& pts) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& p : pts) {
        const Rational &x = p.v[0], &y = p.v[1], &z = p.v[2];
        rows.push_back({x * x, y * y, z * z, x * y, x * z, y * z});
    }
    auto basis = nullspace(rows, 6);
    if (basis.size() != 1) throw Error("conic_through_five: underdetermined");
    const auto& v = basis[0];
    Conic c = Conic::from_coeffs(v[0], v[1], v[2], v[3], v[4], v[5]);
    for (const auto& p : pts)
        if (!c.contains(p)) throw Error("conic_through_five: fit verification failed");
    return {c, c.rank() <= 2};
}

inline std::string to_string(const Conic& c) { return conic_to_poly(c).str(); }

}  // namespace ninepoint
