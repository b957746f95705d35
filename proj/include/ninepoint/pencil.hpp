#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "ninepoint/conic.hpp"
#include "ninepoint/quadrangle.hpp"
#include "ninepoint/upoly.hpp"

namespace ninepoint {

// Involutory Moebius map t -> (a t + b) / (c t + d) with a + d = 0, acting
// on the parameter of a projective basis (a line's points or a vertex's
// line pencil).
template <class Elem>
struct TInvolution {
    Rational a = 0, b = 0, c = 0, d = 0;
    Elem basis0, basis1;  // parameter t corresponds to basis0 + t * basis1

    bool involutory() const { return a + d == 0 && !(b == 0 && c == 0 && a == 0); }

    // matrix squared is proportional to the identity
    bool matrix_square_is_identity() const {
        Rational m00 = a * a + b * c, m01 = a * b + b * d;
        Rational m10 = c * a + d * c, m11 = c * b + d * d;
        return m01 == 0 && m10 == 0 && m00 == m11 && m00 != 0;
    }

    ExtScalar apply(const ExtScalar& t) const {
        if (t.infinite) {
            if (c == 0) return ExtScalar::inf();
            return {false, a / c};
        }
        Rational den = c * t.value + d;
        if (den == 0) return ExtScalar::inf();
        return {false, (a * t.value + b) / den};
    }

    // fixed points: c t^2 + (d - a) t - b = 0
    UPoly fixed_quadratic() const {
        return UPoly(std::vector<Rational>{-b, d - a, c});
    }

    Elem element_at(const ExtScalar& t) const {
        if (t.infinite) return basis1;
        return Elem(basis0.v + basis1.v * t.value);
    }
};

using Involution = TInvolution<HPoint>;            // on the points of a line
using LinePencilInvolution = TInvolution<HLine>;   // on the lines through a point

// Pencil of conics through four base points, generated by the two
// degenerate members (AB)(CD) and (AC)(BD).
struct Pencil {
    Conic c1, c2;
    std::optional<Quadrangle> base;

    Conic member(const Rational& lambda, const Rational& mu) const {
        Mat3<Rational> m = c1.m * lambda + c2.m * mu;
        return Conic(m);  // throws on the zero matrix
    }
};

inline Pencil pencil_of_quadrangle(const Quadrangle& q) {
    Pencil p;
    p.c1 = Conic::from_line_pair(q.ab, q.cd);
    p.c2 = Conic::from_line_pair(q.ac, q.bd);
    p.base = q;
    return p;
}

// Unique member through a point that is not a base point.
inline Conic member_through(const Pencil& p, const HPoint& x) {
    Rational v1 = p.c1.eval(x), v2 = p.c2.eval(x);
    if (v1 == 0 && v2 == 0) throw Error("member_through: base point - every member passes");
    return p.member(v2, -v1);
}

// The three rank-2 members. With degenerate generators the determinant
// cubic is l*u*(s*l + t*u); the third root is rational.
struct DegenerateMembers {
    std::array<Conic, 3> member;
    std::array<HPoint, 3> singular_point;
};

inline DegenerateMembers degenerate_members(const Pencil& p) {
    auto cubic = pencil_det_cubic(p.c1.m, p.c2.m);
    // expect cubic = l^2 u * c2coef + l u^2 * c1coef form: roots (1:0), (0:1), third
    if (!(cubic[0] == 0 && cubic[3] == 0))
        throw Error("degenerate_members: generators are not degenerate");
    // remaining factor: c[2] l + c[1] u
    Rational s = cubic[2], t = cubic[1];
    if (s == 0 || t == 0) throw Error("degenerate_members: non-generic pencil");
    std::array<std::pair<Rational, Rational>, 3> params = {
        std::make_pair(Rational(1), Rational(0)), std::make_pair(Rational(0), Rational(1)),
        std::make_pair(t, -s)};
    DegenerateMembers out{{p.c1, p.c2, p.member(t, -s)}, {}};
    for (int k = 0; k < 3; ++k) {
        const Conic& m = out.member[static_cast<size_t>(k)];
        if (m.rank() > 2) throw Error("degenerate_members: member not degenerate");
        auto kv = kernel_vector(m.m);
        if (!kv) throw Error("degenerate_members: singular point not found");
        out.singular_point[static_cast<size_t>(k)] = HPoint(*kv);
    }
    return out;
}

// --------------------------------------------------------------------------
// Members tangent to a transversal, and the induced involution.

struct TangentMembers {
    // generic case: the two tangent members with their contact points
    std::array<TConic<QuadExt>, 2> member;
    std::array<QPoint, 2> contact;
    bool contacts_real = true;
    bool coincident = false;  // double tangency parameter (r tangent to Gamma)
};

struct VertexTangency {
    // r passes through a base vertex: the single member tangent there
    Conic member;
    HPoint vertex;
};

using TangencyOutcome = std::variant<TangentMembers, VertexTangency>;

namespace detail {

inline TConic<QuadExt> lift_member(const Pencil& p, const QuadExt& lambda, const QuadExt& mu) {
    Mat3<QuadExt> m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            m(i, j) = QuadExt(p.c1.m(i, j)) * lambda + QuadExt(p.c2.m(i, j)) * mu;
    return TConic<QuadExt>(m);
}

}  // namespace detail

inline TangencyOutcome members_tangent_to(const Pencil& p, const HLine& r) {
    if (!p.base) throw Error("members_tangent_to: pencil without base quadrangle");
    const Quadrangle& q = *p.base;
    for (const auto& s : q.sides())
        if (s == r) throw Error("members_tangent_to: degenerate restriction (r is a side)");
    // through a base vertex: single tangency at the vertex
    for (const auto& v : q.vertex) {
        if (!incident(v, r)) continue;
        Vec3<Rational> u1 = cross(p.c1.m * v.v, r.v);
        Vec3<Rational> u2 = cross(p.c2.m * v.v, r.v);
        // solve lambda*u1 + mu*u2 = 0
        Rational lambda, mu;
        bool found = false;
        for (int k = 0; k < 3 && !found; ++k) {
            if (u1[static_cast<size_t>(k)] != 0 || u2[static_cast<size_t>(k)] != 0) {
                lambda = u2[static_cast<size_t>(k)];
                mu = -u1[static_cast<size_t>(k)];
                found = true;
            }
        }
        if (!found) throw Error("members_tangent_to: vertex tangency indeterminate");
        if (!cross(u1 * lambda + u2 * mu, Vec3<Rational>{0, 0, 0}).is_zero() &&
            !(u1 * lambda + u2 * mu).is_zero())
            throw Error("members_tangent_to: vertex tangency inconsistent");
        return VertexTangency{p.member(lambda, mu), v};
    }
    LineRestriction<Rational> q1 = restrict_to_line(p.c1, r);
    LineRestriction<Rational> q2 = restrict_to_line(p.c2, r);
    // disc of the member restriction, as a binary quadratic in (lambda:mu)
    Rational A = q1.b * q1.b - q1.a * q1.c;
    Rational B = 2 * q1.b * q2.b - q1.a * q2.c - q2.a * q1.c;
    Rational C = q2.b * q2.b - q2.a * q2.c;
    if (A == 0 && B == 0 && C == 0)
        throw Error("members_tangent_to: degenerate restriction");
    TangentMembers out;
    std::array<std::pair<QuadExt, QuadExt>, 2> params;
    if (A == 0) {
        // roots (lambda:mu) = (1:0) and (C:-B)
        if (B == 0) {
            params = {std::make_pair(QuadExt(1), QuadExt(0)),
                      std::make_pair(QuadExt(1), QuadExt(0))};
            out.coincident = true;
        } else {
            params = {std::make_pair(QuadExt(1), QuadExt(0)),
                      std::make_pair(QuadExt(C), QuadExt(-B))};
        }
    } else {
        auto [r1, r2] = quadratic_roots(A, B, C);
        params = {std::make_pair(r1, QuadExt(1)), std::make_pair(r2, QuadExt(1))};
        out.coincident = (r1 == r2);
        out.contacts_real = r1.is_real();
    }
    for (int k = 0; k < 2; ++k) {
        auto [lambda, mu] = params[static_cast<size_t>(k)];
        TConic<QuadExt> m = detail::lift_member(p, lambda, mu);
        // contact point: double root of the restricted quadratic
        QuadExt a = QuadExt(q1.a) * lambda + QuadExt(q2.a) * mu;
        QuadExt b = QuadExt(q1.b) * lambda + QuadExt(q2.b) * mu;
        QPoint p0{QuadExt(q1.p0.v[0]), QuadExt(q1.p0.v[1]), QuadExt(q1.p0.v[2])};
        QPoint p1{QuadExt(q1.p1.v[0]), QuadExt(q1.p1.v[1]), QuadExt(q1.p1.v[2])};
        QPoint contact = (!a.is_zero() || !b.is_zero()) ? QPoint(p0.v * (-b) + p1.v * a)
                                                        : p0;
        out.member[static_cast<size_t>(k)] = m;
        out.contact[static_cast<size_t>(k)] = contact;
    }
    return out;
}

// Involution cut on r by the pencil: each member meets r in a point pair,
// and the pairs form a quadratic involution.
inline Involution involution_on_line(const Pencil& p, const HLine& r) {
    if (p.base) {
        for (const auto& s : p.base->sides())
            if (s == r) throw Error("involution_on_line: degenerate restriction (r is a side)");
    }
    LineRestriction<Rational> q1 = restrict_to_line(p.c1, r);
    LineRestriction<Rational> q2 = restrict_to_line(p.c2, r);
    // minors of [[a1,b1,c1],[a2,b2,c2]]
    Rational m1 = q1.b * q2.c - q2.b * q1.c;
    Rational m2 = q1.a * q2.c - q2.a * q1.c;
    Rational m3 = q1.a * q2.b - q2.a * q1.b;
    if (m1 == 0 && m2 == 0 && m3 == 0)
        throw Error("involution_on_line: degenerate restriction");
    Involution inv;
    inv.a = -m2;
    inv.b = -2 * m1;
    inv.c = 2 * m3;
    inv.d = m2;
    inv.basis0 = q1.p0;
    inv.basis1 = q1.p1;
    return inv;
}

// Fixed points of the involution: the quadratic in the line parameter plus
// the two double points over QuadExt (complex-conjugate allowed).
struct DoublePoints {
    UPoly quadratic;  // c t^2 + (d-a) t - b
    bool real = true;
    std::array<QPoint, 2> point;
};

inline DoublePoints double_points(const Involution& inv) {
    if (!inv.involutory() || (inv.b == 0 && inv.c == 0 && inv.a == 0))
        throw Error("double_points: identity involution");
    DoublePoints out;
    out.quadratic = inv.fixed_quadratic();
    QPoint p0{QuadExt(inv.basis0.v[0]), QuadExt(inv.basis0.v[1]), QuadExt(inv.basis0.v[2])};
    QPoint p1{QuadExt(inv.basis1.v[0]), QuadExt(inv.basis1.v[1]), QuadExt(inv.basis1.v[2])};
    if (out.quadratic.deg() == 2) {
        auto [t1, t2] = quadratic_roots(out.quadratic.coeff(2), out.quadratic.coeff(1),
                                        out.quadratic.coeff(0));
        out.real = t1.is_real();
        out.point = {QPoint(p0.v + p1.v * t1), QPoint(p0.v + p1.v * t2)};
    } else if (out.quadratic.deg() == 1) {
        // one fixed point at infinity (t = inf), one finite
        Rational t = -out.quadratic.coeff(0) / out.quadratic.coeff(1);
        out.point = {QPoint(p0.v + p1.v * QuadExt(t)), p1};
    } else {
        throw Error("double_points: identity involution");
    }
    return out;
}

// --------------------------------------------------------------------------
// Parabola counting: members whose affine quadratic part is singular.

struct ParabolaCount {
    int count = 0;            // distinct real parabolic parameters
    bool double_root = false; // coincident parameters (flagged, count 1)
    Rational discriminant;    // reality certificate
    bool degenerate_roots = false;  // some parabolic parameter is a rank<3 member
};

inline ParabolaCount parabola_count(const Pencil& p, const Chart& chart = {}) {
    if (!chart.is_standard()) throw Error("parabola_count: requires the standard chart");
    const Mat3<Rational>& m1 = p.c1.m;
    const Mat3<Rational>& m2 = p.c2.m;
    Rational A = m1(0, 0) * m1(1, 1) - m1(0, 1) * m1(0, 1);
    Rational B = m1(0, 0) * m2(1, 1) + m2(0, 0) * m1(1, 1) - 2 * m1(0, 1) * m2(0, 1);
    Rational C = m2(0, 0) * m2(1, 1) - m2(0, 1) * m2(0, 1);
    if (A == 0 && B == 0 && C == 0)
        throw Error("parabola_count: pencil of parabolas (det2 vanishes identically)");
    ParabolaCount out;
    out.discriminant = B * B - 4 * A * C;
    std::vector<std::pair<Rational, Rational>> roots;  // (lambda, mu)
    if (A == 0) {
        roots.emplace_back(1, 0);
        if (B != 0) roots.emplace_back(-C, B);
        out.count = (B != 0 && !(roots[0] == roots[1])) ? 2 : 1;
        out.double_root = (B == 0);
    } else if (out.discriminant > 0) {
        out.count = 2;
        // rational roots when the discriminant is a perfect square
        if (auto s = sqrt_exact(out.discriminant)) {
            roots.emplace_back((-B + *s) / 2, A);
            roots.emplace_back((-B - *s) / 2, A);
        }
    } else if (out.discriminant == 0) {
        out.count = 1;
        out.double_root = true;
        roots.emplace_back(-B / 2, A);
    } else {
        out.count = 0;
    }
    for (auto& [lambda, mu] : roots) {
        Mat3<Rational> m = m1 * lambda + m2 * mu;
        Conic member{m};
        if (member.rank() < 3) out.degenerate_roots = true;
    }
    return out;
}

}  // namespace ninepoint
