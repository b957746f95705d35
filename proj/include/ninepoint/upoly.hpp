#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "ninepoint/bigfloat.hpp"
#include "ninepoint/quadext.hpp"
#include "ninepoint/rational.hpp"

namespace ninepoint {

// Dense univariate polynomial over Q. c_[i] is the coefficient of x^i;
// the zero polynomial has an empty coefficient vector and degree -1.
class UPoly {
public:
    UPoly() = default;
    UPoly(const Rational& c) {  // NOLINT(google-explicit-constructor)
        if (c != 0) c_.push_back(c);
    }
    UPoly(long c) : UPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UPoly monomial(unsigned k, const Rational& c = 1) {
        if (c == 0) return UPoly();
        std::vector<Rational> v(k + 1, Rational(0));
        v[k] = c;
        return UPoly(std::move(v));
    }
    static UPoly variable() { return monomial(1); }

    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rational coeff(size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const Rational& lc() const {
        if (c_.empty()) throw Error("UPoly: leading coefficient of zero");
        return c_.back();
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    friend bool operator==(const UPoly& p, const UPoly& q) { return p.c_ == q.c_; }

    friend UPoly operator-(const UPoly& p) {
        std::vector<Rational> v(p.c_);
        for (auto& x : v) x = -x;
        return UPoly(std::move(v));
    }
    friend UPoly operator+(const UPoly& p, const UPoly& q) {
        std::vector<Rational> v(std::max(p.c_.size(), q.c_.size()), Rational(0));
        for (size_t i = 0; i < p.c_.size(); ++i) v[i] += p.c_[i];
        for (size_t i = 0; i < q.c_.size(); ++i) v[i] += q.c_[i];
        return UPoly(std::move(v));
    }
    friend UPoly operator-(const UPoly& p, const UPoly& q) { return p + (-q); }
    friend UPoly operator*(const UPoly& p, const UPoly& q) {
        if (p.is_zero() || q.is_zero()) return UPoly();
        std::vector<Rational> v(p.c_.size() + q.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < p.c_.size(); ++i) {
            if (p.c_[i] == 0) continue;
            for (size_t j = 0; j < q.c_.size(); ++j) v[i + j] += p.c_[i] * q.c_[j];
        }
        return UPoly(std::move(v));
    }
    friend UPoly operator*(const UPoly& p, const Rational& s) {
        if (s == 0) return UPoly();
        std::vector<Rational> v(p.c_);
        for (auto& x : v) x *= s;
        return UPoly(std::move(v));
    }
    friend UPoly operator*(const Rational& s, const UPoly& p) { return p * s; }

    UPoly& operator+=(const UPoly& q) { return *this = *this + q; }
    UPoly& operator-=(const UPoly& q) { return *this = *this - q; }
    UPoly& operator*=(const UPoly& q) { return *this = *this * q; }

    UPoly derivative() const {
        if (c_.size() <= 1) return UPoly();
        std::vector<Rational> v(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
        return UPoly(std::move(v));
    }

    template <class K>
    K eval(const K& x) const {
        K r = K(0);
        for (size_t i = c_.size(); i-- > 0;) r = r * x + K(c_[i]);
        return r;
    }
    Rational eval(const Rational& x) const {
        Rational r = 0;
        for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    BigFloat eval_interval(const BigFloat& x) const {
        BigFloat r = BigFloat::from_long(0, x.prec());
        for (size_t i = c_.size(); i-- > 0;)
            r = r * x + BigFloat::from_rational(c_[i], x.prec());
        return r;
    }

    // p(x + a), by repeated synthetic division.
    UPoly shift(const Rational& a) const {
        if (is_zero() || a == 0) return *this;
        std::vector<Rational> v(c_);
        for (size_t k = 0; k < v.size(); ++k)
            for (size_t i = v.size() - 1; i-- > k;) v[i] += a * v[i + 1];
        return UPoly(std::move(v));
    }

    // p(q(x)).
    UPoly compose(const UPoly& q) const {
        UPoly r;
        for (size_t i = c_.size(); i-- > 0;) r = r * q + UPoly(c_[i]);
        return r;
    }

    // x^deg * p(1/x).
    UPoly reverse() const {
        std::vector<Rational> v(c_.rbegin(), c_.rend());
        return UPoly(std::move(v));
    }

    // Positive rational s such that s*p has coprime integer coefficients.
    Rational content_scale() const {
        if (is_zero()) return 1;
        Int l = 1;
        for (const auto& c : c_) l = lcm_int(l, den(c));
        Int g = 0;
        for (const auto& c : c_) g = gcd_int(g, num(c) * (l / den(c)));
        return Rational(l, g);
    }

    // Integer-primitive with positive leading coefficient.
    UPoly primitive() const {
        if (is_zero()) return UPoly();
        Rational s = content_scale();
        if (lc() < 0) s = -s;
        return *this * s;
    }

    friend std::pair<UPoly, UPoly> divmod(const UPoly& p, const UPoly& d) {
        if (d.is_zero()) throw Error("UPoly: division by zero polynomial");
        UPoly r = p;
        std::vector<Rational> q;
        if (r.deg() >= d.deg()) q.assign(r.deg() - d.deg() + 1, Rational(0));
        while (!r.is_zero() && r.deg() >= d.deg()) {
            Rational f = r.lc() / d.lc();
            int k = r.deg() - d.deg();
            q[k] = f;
            r -= UPoly::monomial(k, f) * d;
        }
        return {UPoly(std::move(q)), r};
    }
    friend UPoly operator/(const UPoly& p, const UPoly& d) { return divmod(p, d).first; }
    friend UPoly operator%(const UPoly& p, const UPoly& d) { return divmod(p, d).second; }

    std::string str(const std::string& var = "t") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

inline UPoly exact_div(const UPoly& p, const UPoly& d) {
    auto [q, r] = divmod(p, d);
    if (!r.is_zero()) throw Error("UPoly: inexact division");
    return q;
}

// Primitive Euclidean gcd; result integer-primitive with positive lc.
inline UPoly gcd(UPoly a, UPoly b) {
    a = a.primitive();
    b = b.primitive();
    while (!b.is_zero()) {
        UPoly r = (a % b).primitive();
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline UPoly squarefree_part(const UPoly& p) {
    if (p.is_zero()) throw Error("UPoly: squarefree part of zero");
    if (p.deg() == 0) return UPoly(Rational(1));
    UPoly g = gcd(p, p.derivative());
    return exact_div(p.primitive(), g).primitive();
}

// Resultant by fraction-free elimination of the Sylvester matrix.
inline Rational resultant(const UPoly& p, const UPoly& q) {
    if (p.is_zero() || q.is_zero()) throw Error("UPoly: resultant of zero polynomial");
    int m = p.deg(), n = q.deg();
    if (m == 0) return pow_rational(p.lc(), n);
    if (n == 0) return pow_rational(q.lc(), m);
    int dim = m + n;
    std::vector<std::vector<Rational>> s(dim, std::vector<Rational>(dim, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s[i][i + j] = p.coeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s[n + i][i + j] = q.coeff(n - j);
    // Bareiss over Q (plain Gaussian determinant is fine over a field).
    Rational det = 1;
    for (int col = 0; col < dim; ++col) {
        int piv = -1;
        for (int r = col; r < dim; ++r)
            if (s[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != col) {
            std::swap(s[piv], s[col]);
            det = -det;
        }
        det *= s[col][col];
        Rational inv = Rational(1) / s[col][col];
        for (int r = col + 1; r < dim; ++r) {
            if (s[r][col] == 0) continue;
            Rational f = s[r][col] * inv;
            for (int c2 = col; c2 < dim; ++c2) s[r][c2] -= f * s[col][c2];
        }
    }
    return det;
}

inline Rational discriminant(const UPoly& p) {
    if (p.deg() < 1) throw Error("UPoly: discriminant needs degree >= 1");
    if (p.deg() == 1) return 1;
    Rational r = resultant(p, p.derivative());
    Rational d = r / p.lc();
    // sign (-1)^(n(n-1)/2)
    int n = p.deg();
    if (((n * (n - 1)) / 2) % 2 == 1) d = -d;
    return d;
}

// ---------------------------------------------------------------------------
// Sturm sequences and real-root isolation.

inline std::vector<UPoly> sturm_chain(const UPoly& p) {
    std::vector<UPoly> s;
    if (p.is_zero()) throw Error("UPoly: Sturm chain of zero polynomial");
    s.push_back(p.primitive());
    if (p.deg() == 0) return s;
    s.push_back(p.derivative().primitive());
    while (!s.back().is_zero() && s.back().deg() > 0) {
        UPoly r = -(s[s.size() - 2] % s.back());
        if (r.is_zero()) break;
        // positive scaling keeps all Sturm signs intact
        r = r * r.content_scale();
        s.push_back(std::move(r));
    }
    return s;
}

// Sign variations of the chain at x; x may be +-infinity via inf = +1/-1.
inline int sturm_variations(const std::vector<UPoly>& chain, const Rational& x) {
    int v = 0, prev = 0;
    for (const auto& p : chain) {
        if (p.is_zero()) continue;
        int s = sign(p.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

inline int sturm_variations_inf(const std::vector<UPoly>& chain, int dir) {
    int v = 0, prev = 0;
    for (const auto& p : chain) {
        if (p.is_zero()) continue;
        int s = sign(p.lc());
        if (dir < 0 && p.deg() % 2 == 1) s = -s;
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

// Number of distinct real roots in (a, b].
inline int count_roots_halfopen(const std::vector<UPoly>& chain, const Rational& a,
                                const Rational& b) {
    return sturm_variations(chain, a) - sturm_variations(chain, b);
}

struct RootInterval {
    Rational lo, hi;  // lo == hi means an exact rational root
    bool exact() const { return lo == hi; }
    Rational mid() const { return (lo + hi) / 2; }
};

namespace detail {

inline void isolate_rec(const std::vector<UPoly>& chain, const UPoly& p, const Rational& a,
                        const Rational& b, std::vector<RootInterval>& out) {
    // invariant: p(a) != 0 and p(b) != 0
    int n = count_roots_halfopen(chain, a, b);
    if (n == 0) return;
    if (n == 1) {
        out.push_back({a, b});
        return;
    }
    Rational m = (a + b) / 2;
    if (p.eval(m) == 0) {
        out.push_back({m, m});
        // step off the root so the sub-interval endpoints are root-free
        Rational d = (b - a) / 4;
        while (p.eval(m - d) == 0 || p.eval(m + d) == 0 ||
               count_roots_halfopen(chain, m - d, m + d) != 1)
            d /= 2;
        isolate_rec(chain, p, a, m - d, out);
        isolate_rec(chain, p, m + d, b, out);
        return;
    }
    isolate_rec(chain, p, a, m, out);
    isolate_rec(chain, p, m, b, out);
}

}  // namespace detail

// Root bound: all real roots lie in [-B, B], B = 1 + max |c_i/c_n| (Cauchy).
inline Rational root_bound(const UPoly& p) {
    if (p.deg() < 1) return 1;
    Rational m = 0;
    for (int i = 0; i < p.deg(); ++i) m = std::max(m, abs(p.coeff(i) / p.lc()));
    return m + 1;
}

// Isolates the distinct real roots of squarefree p inside [lo, hi]; each
// returned interval contains exactly one root, intervals are disjoint,
// endpoint roots come back as exact point intervals.
inline std::vector<RootInterval> isolate_roots(const UPoly& p, Rational lo, Rational hi) {
    if (p.is_zero()) throw Error("sturm_isolate: zero polynomial");
    if (lo > hi) std::swap(lo, hi);
    std::vector<RootInterval> out;
    if (p.deg() == 0) return out;
    auto chain = sturm_chain(p);
    if (p.eval(lo) == 0) out.push_back({lo, lo});
    if (hi != lo && p.eval(hi) == 0) out.push_back({hi, hi});
    if (lo == hi) return out;
    // move endpoints inward off any endpoint roots
    Rational a = lo, b = hi;
    if (p.eval(a) == 0) {
        Rational step = (hi - lo) / 1024;
        while (true) {
            Rational cand = lo + step;
            if (cand < b && p.eval(cand) != 0 && count_roots_halfopen(chain, lo, cand) == 0) {
                a = cand;
                break;
            }
            step /= 2;
        }
    }
    if (p.eval(b) == 0) {
        Rational step = (hi - a) / 1024;
        while (true) {
            Rational cand = hi - step;
            if (cand > a && p.eval(cand) != 0 && count_roots_halfopen(chain, cand, hi) == 1) {
                b = cand;
                break;
            }
            step /= 2;
        }
    }
    detail::isolate_rec(chain, p, a, b, out);
    std::sort(out.begin(), out.end(),
              [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
    return out;
}

inline std::vector<RootInterval> isolate_all_roots(const UPoly& p) {
    Rational b = root_bound(p);
    return isolate_roots(p, -b, b);
}

// Shrinks an isolating interval below the given width by bisection.
inline RootInterval refine_interval(const UPoly& p, RootInterval iv, const Rational& width) {
    if (iv.exact()) return iv;
    int slo = sign(p.eval(iv.lo));
    int shi = sign(p.eval(iv.hi));
    if (slo == 0) return {iv.lo, iv.lo};
    if (shi == 0) return {iv.hi, iv.hi};
    if (slo == shi) throw Error("refine_interval: endpoints do not bracket a sign change");
    while (iv.hi - iv.lo > width) {
        Rational m = iv.mid();
        int sm = sign(p.eval(m));
        if (sm == 0) return {m, m};
        if (sm == slo)
            iv.lo = m;
        else
            iv.hi = m;
    }
    return iv;
}

inline BigFloat root_to_bigfloat(const UPoly& p, RootInterval iv, mpfr_prec_t prec) {
    if (!iv.exact()) {
        Rational w = Rational(1, Int(1) << static_cast<unsigned>(prec + 8));
        iv = refine_interval(p, iv, w);
    }
    if (iv.exact()) return BigFloat::from_rational(iv.lo, prec);
    return BigFloat::from_rational_interval(iv.lo, iv.hi, prec);
}

// Sign of q at the root of squarefree p isolated by iv.
inline int sign_at_root(const UPoly& q, const UPoly& p, RootInterval iv) {
    if (iv.exact()) return sign(q.eval(iv.lo));
    if (q.is_zero()) return 0;
    UPoly g = gcd(p, q);
    if (g.deg() > 0) {
        // q vanishes at the root iff the root is a root of g
        int s0 = sign(g.eval(iv.lo)), s1 = sign(g.eval(iv.hi));
        if (s0 == 0 || s1 == 0 || s0 != s1) return 0;
        auto chain = sturm_chain(g);
        if (count_roots_halfopen(chain, iv.lo, iv.hi) > 0) return 0;
    }
    // q has finitely many roots; shrink until none are inside
    UPoly qs = squarefree_part(q);
    auto chain = sturm_chain(qs);
    while (true) {
        if (count_roots_halfopen(chain, iv.lo, iv.hi) == 0 && qs.eval(iv.lo) != 0)
            return sign(q.eval(iv.mid()));
        Rational m = iv.mid();
        int sm = sign(p.eval(m));
        if (sm == 0) return sign(q.eval(m));
        if (sm == sign(p.eval(iv.lo)))
            iv.lo = m;
        else
            iv.hi = m;
    }
}

// Simplest rational in the closed interval [lo, hi] (Stern-Brocot walk).
inline Rational simplest_rational_in(const Rational& lo, const Rational& hi) {
    if (lo > hi) throw Error("simplest_rational_in: empty interval");
    if (lo <= 0 && hi >= 0) return 0;
    if (hi < 0) return -simplest_rational_in(-hi, -lo);
    // 0 < lo <= hi
    Int fl = num(lo) / den(lo);  // floor for positive lo
    if (Rational(fl) == lo) return lo;
    if (Rational(fl + 1) <= hi) return Rational(fl + 1);
    Rational flo = lo - Rational(fl), fhi = hi - Rational(fl);
    return Rational(fl) + Rational(1) / simplest_rational_in(Rational(1) / fhi, Rational(1) / flo);
}

// All rational roots of p, each verified exactly; p need not be squarefree.
inline std::vector<Rational> rational_roots(const UPoly& p) {
    std::vector<Rational> roots;
    if (p.deg() < 1) return roots;
    UPoly sf = squarefree_part(p);
    for (auto iv : isolate_all_roots(sf)) {
        if (iv.exact()) {
            roots.push_back(iv.lo);
            continue;
        }
        RootInterval r = iv;
        for (int rounds = 0; rounds < 4; ++rounds) {
            unsigned bits = 32u << rounds;
            r = refine_interval(sf, r, Rational(1, Int(1) << bits));
            if (r.exact()) {
                roots.push_back(r.lo);
                break;
            }
            Rational cand = simplest_rational_in(r.lo, r.hi);
            if (sf.eval(cand) == 0) {
                roots.push_back(cand);
                break;
            }
        }
    }
    return roots;
}

// Roots of a rational quadratic a t^2 + b t + c over the quadratic closure.
// Returns {(-b - s)/2a, (-b + s)/2a} with s = sqrt(disc).
inline std::pair<QuadExt, QuadExt> quadratic_roots(const Rational& a, const Rational& b,
                                                   const Rational& c) {
    if (a == 0) throw Error("quadratic_roots: leading coefficient is zero");
    Rational disc = b * b - 4 * a * c;
    QuadExt s = QuadExt::sqrt_of(disc);
    QuadExt inv2a = QuadExt(Rational(1) / (2 * a));
    return {(QuadExt(-b) - s) * inv2a, (QuadExt(-b) + s) * inv2a};
}

// Monic-normalizes then splits a rational quartic with no rational roots
// into two rational quadratics, when possible.
inline std::optional<std::pair<UPoly, UPoly>> split_quartic(const UPoly& p0) {
    if (p0.deg() != 4) return std::nullopt;
    UPoly p = p0 * (Rational(1) / p0.lc());
    Rational A = p.coeff(3);
    UPoly dep = p.shift(-A / 4);  // t^4 + P t^2 + Q t + R
    Rational P = dep.coeff(2), Q = dep.coeff(1), R = dep.coeff(0);
    auto assemble = [&](const Rational& u, const Rational& v,
                        const Rational& w) -> std::optional<std::pair<UPoly, UPoly>> {
        UPoly f1 = UPoly(std::vector<Rational>{v, u, 1});
        UPoly f2 = UPoly(std::vector<Rational>{w, -u, 1});
        if (!(f1 * f2 == dep)) return std::nullopt;
        f1 = f1.shift(A / 4);
        f2 = f2.shift(A / 4);
        return std::make_pair(f1 * p0.lc(), f2);
    };
    if (Q == 0) {
        // (t^2+v)(t^2+w), v+w = P, vw = R
        Rational disc = P * P - 4 * R;
        if (auto s = sqrt_exact(disc)) {
            if (auto r = assemble(0, (P - *s) / 2, (P + *s) / 2)) return r;
        }
        // (t^2+ut+b)(t^2-ut+b), b^2 = R, 2b - u^2 = P
        if (auto b = sqrt_exact(R)) {
            for (Rational bb : {*b, -*b}) {
                if (auto u = sqrt_exact(2 * bb - P)) {
                    if (auto r = assemble(*u, bb, bb)) return r;
                }
            }
        }
        return std::nullopt;
    }
    // resolvent cubic in y = u^2: y^3 + 2P y^2 + (P^2 - 4R) y - Q^2
    UPoly res(std::vector<Rational>{-Q * Q, P * P - 4 * R, 2 * P, 1});
    for (const Rational& y : rational_roots(res)) {
        if (y <= 0) continue;
        auto u = sqrt_exact(y);
        if (!u) continue;
        Rational v = (P + y - Q / *u) / 2;
        Rational w = (P + y + Q / *u) / 2;
        if (auto r = assemble(*u, v, w)) return r;
    }
    return std::nullopt;
}

inline std::string UPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        Rational c = c_[i];
        if (!s.empty()) {
            s += (c > 0) ? " + " : " - ";
            c = abs(c);
        } else if (c < 0) {
            s += "-";
            c = -c;
        }
        if (i == 0 || c != 1) {
            s += to_string(c);
            if (i > 0) s += "*";
        }
        if (i >= 1) s += var;
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
}

}  // namespace ninepoint
