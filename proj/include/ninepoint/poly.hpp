#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ninepoint/rational.hpp"
#include "ninepoint/upoly.hpp"

namespace ninepoint {

// Exponent vector for up to three variables (x, y, z).
struct Mono {
    std::array<unsigned, 3> e{0, 0, 0};
    unsigned total() const { return e[0] + e[1] + e[2]; }
    friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
    // graded lexicographic, highest first when iterating the map in reverse
    friend bool operator<(const Mono& a, const Mono& b) {
        if (a.total() != b.total()) return a.total() < b.total();
        return a.e < b.e;
    }
    friend Mono operator+(const Mono& a, const Mono& b) {
        return Mono{{a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2]}};
    }
};

// Sparse polynomial over Q in the fixed variable set {x, y, z}. No zero
// terms are stored. Univariate algorithms live in UPoly; this class covers
// the curve/implicitization work where several variables interact.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c) {  // NOLINT(google-explicit-constructor)
        if (c != 0) t_[Mono{}] = c;
    }
    Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

    static Poly variable(int v) {
        Poly p;
        Mono m;
        m.e[static_cast<size_t>(v)] = 1;
        p.t_[m] = 1;
        return p;
    }
    static Poly monomial(const Mono& m, const Rational& c) {
        Poly p;
        if (c != 0) p.t_[m] = c;
        return p;
    }

    bool is_zero() const { return t_.empty(); }
    size_t term_count() const { return t_.size(); }
    const std::map<Mono, Rational>& terms() const { return t_; }

    int total_degree() const {
        if (t_.empty()) return -1;
        unsigned d = 0;
        for (const auto& [m, c] : t_) d = std::max(d, m.total());
        return static_cast<int>(d);
    }
    int degree_in(int v) const {
        if (t_.empty()) return -1;
        unsigned d = 0;
        for (const auto& [m, c] : t_) d = std::max(d, m.e[static_cast<size_t>(v)]);
        return static_cast<int>(d);
    }
    int min_degree_in(int v) const {
        if (t_.empty()) return -1;
        unsigned d = ~0u;
        for (const auto& [m, c] : t_) d = std::min(d, m.e[static_cast<size_t>(v)]);
        return static_cast<int>(d);
    }
    bool depends_on(int v) const { return degree_in(v) > 0; }
    bool is_homogeneous() const {
        if (t_.empty()) return true;
        unsigned d = t_.begin()->first.total();
        for (const auto& [m, c] : t_)
            if (m.total() != d) return false;
        return true;
    }
    int num_vars() const {
        int n = 0;
        for (int v = 0; v < 3; ++v)
            if (depends_on(v)) n = v + 1;
        return n;
    }

    Rational coeff(const Mono& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? Rational(0) : it->second;
    }

    friend bool operator==(const Poly& p, const Poly& q) { return p.t_ == q.t_; }

    friend Poly operator-(const Poly& p) {
        Poly r = p;
        for (auto& [m, c] : r.t_) c = -c;
        return r;
    }
    friend Poly operator+(const Poly& p, const Poly& q) {
        Poly r = p;
        for (const auto& [m, c] : q.t_) r.add_term(m, c);
        return r;
    }
    friend Poly operator-(const Poly& p, const Poly& q) {
        Poly r = p;
        for (const auto& [m, c] : q.t_) r.add_term(m, -c);
        return r;
    }
    friend Poly operator*(const Poly& p, const Poly& q) {
        Poly r;
        for (const auto& [ma, ca] : p.t_)
            for (const auto& [mb, cb] : q.t_) r.add_term(ma + mb, ca * cb);
        return r;
    }
    friend Poly operator*(const Poly& p, const Rational& s) {
        if (s == 0) return Poly();
        Poly r = p;
        for (auto& [m, c] : r.t_) c *= s;
        return r;
    }
    friend Poly operator*(const Rational& s, const Poly& p) { return p * s; }

    Poly& operator+=(const Poly& q) { return *this = *this + q; }
    Poly& operator-=(const Poly& q) { return *this = *this - q; }
    Poly& operator*=(const Poly& q) { return *this = *this * q; }

    Poly pow(unsigned e) const {
        Poly r(1), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    template <class K>
    K eval(const std::array<K, 3>& pt) const {
        K r = K(0);
        for (const auto& [m, c] : t_) {
            K term = K(c);
            for (int v = 0; v < 3; ++v)
                for (unsigned k = 0; k < m.e[static_cast<size_t>(v)]; ++k)
                    term = term * pt[static_cast<size_t>(v)];
            r = r + term;
        }
        return r;
    }

    Poly derivative(int v) const {
        Poly r;
        for (const auto& [m, c] : t_) {
            unsigned e = m.e[static_cast<size_t>(v)];
            if (e == 0) continue;
            Mono m2 = m;
            m2.e[static_cast<size_t>(v)] = e - 1;
            r.add_term(m2, c * Rational(static_cast<long>(e)));
        }
        return r;
    }

    // Substitutes sub[v] for variable v, all three simultaneously.
    Poly substitute(const std::array<Poly, 3>& sub) const {
        Poly r;
        // memoize powers per variable
        std::array<std::vector<Poly>, 3> pows;
        for (int v = 0; v < 3; ++v) pows[static_cast<size_t>(v)] = {Poly(1)};
        auto power = [&](int v, unsigned e) -> const Poly& {
            auto& ps = pows[static_cast<size_t>(v)];
            while (ps.size() <= e) ps.push_back(ps.back() * sub[static_cast<size_t>(v)]);
            return ps[e];
        };
        for (const auto& [m, c] : t_) {
            Poly term(c);
            for (int v = 0; v < 3; ++v)
                if (m.e[static_cast<size_t>(v)]) term *= power(v, m.e[static_cast<size_t>(v)]);
            r += term;
        }
        return r;
    }

    // Replaces variable v by the given rational constant.
    Poly eval_var(int v, const Rational& value) const {
        Poly r;
        for (const auto& [m, c] : t_) {
            Mono m2 = m;
            unsigned e = m2.e[static_cast<size_t>(v)];
            m2.e[static_cast<size_t>(v)] = 0;
            r.add_term(m2, c * pow_rational(value, e));
        }
        return r;
    }

    // View as univariate in v: result[k] is the Poly coefficient of v^k.
    std::vector<Poly> to_univar(int v) const {
        std::vector<Poly> out(static_cast<size_t>(std::max(0, degree_in(v)) + 1));
        for (const auto& [m, c] : t_) {
            Mono m2 = m;
            unsigned e = m2.e[static_cast<size_t>(v)];
            m2.e[static_cast<size_t>(v)] = 0;
            out[e].add_term(m2, c);
        }
        while (out.size() > 1 && out.back().is_zero()) out.pop_back();
        return out;
    }
    static Poly from_univar(int v, const std::vector<Poly>& coeffs) {
        Poly r;
        for (size_t k = 0; k < coeffs.size(); ++k) {
            Mono vk;
            vk.e[static_cast<size_t>(v)] = static_cast<unsigned>(k);
            r += coeffs[k] * monomial(vk, 1);
        }
        return r;
    }

    // Conversion to UPoly when the polynomial involves only variable v.
    UPoly to_upoly(int v) const {
        std::vector<Rational> c(static_cast<size_t>(std::max(0, degree_in(v)) + 1), Rational(0));
        for (const auto& [m, coef] : t_) {
            for (int w = 0; w < 3; ++w)
                if (w != v && m.e[static_cast<size_t>(w)] != 0)
                    throw Error("Poly: not univariate in requested variable");
            c[m.e[static_cast<size_t>(v)]] = coef;
        }
        return UPoly(std::move(c));
    }
    static Poly from_upoly(const UPoly& p, int v) {
        Poly r;
        for (int k = 0; k <= p.deg(); ++k) {
            Mono m;
            m.e[static_cast<size_t>(v)] = static_cast<unsigned>(k);
            r.add_term(m, p.coeff(static_cast<size_t>(k)));
        }
        return r;
    }

    // Positive rational s with s*p integer and coprime; canonical() also
    // fixes the sign of the graded-lex leading coefficient to positive.
    Rational content_scale() const {
        if (is_zero()) return 1;
        Int l = 1;
        for (const auto& [m, c] : t_) l = lcm_int(l, den(c));
        Int g = 0;
        for (const auto& [m, c] : t_) g = gcd_int(g, num(c) * (l / den(c)));
        return Rational(l, g);
    }
    const Rational& leading_coeff() const {
        if (t_.empty()) throw Error("Poly: leading coefficient of zero");
        return t_.rbegin()->second;
    }
    Poly canonical() const {
        if (is_zero()) return Poly();
        Rational s = content_scale();
        if (leading_coeff() < 0) s = -s;
        return *this * s;
    }

    std::string str() const;
    static Poly parse(std::string_view text);

private:
    void add_term(const Mono& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = t_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }
    std::map<Mono, Rational> t_;
};

// Exact multivariate division; nullopt when the division does not come out.
inline std::optional<Poly> try_exact_div(const Poly& p, const Poly& d) {
    if (d.is_zero()) throw Error("Poly: division by zero polynomial");
    Poly r = p, q;
    const auto& dlead = *d.terms().rbegin();
    while (!r.is_zero()) {
        const auto& rlead = *r.terms().rbegin();
        Mono qm;
        for (int v = 0; v < 3; ++v) {
            size_t sv = static_cast<size_t>(v);
            if (rlead.first.e[sv] < dlead.first.e[sv]) return std::nullopt;
            qm.e[sv] = rlead.first.e[sv] - dlead.first.e[sv];
        }
        Rational qc = rlead.second / dlead.second;
        Poly qt = Poly::monomial(qm, qc);
        q += qt;
        r -= qt * d;
    }
    return q;
}

inline Poly exact_div(const Poly& p, const Poly& d) {
    auto q = try_exact_div(p, d);
    if (!q) throw Error("Poly: inexact division");
    return *q;
}

namespace detail {

// gcd of a list of polynomials (for contents).
Poly poly_gcd_impl(const Poly& a, const Poly& b);

inline Poly list_gcd(const std::vector<Poly>& ps) {
    Poly g;
    for (const auto& p : ps) {
        if (p.is_zero()) continue;
        g = g.is_zero() ? p : poly_gcd_impl(g, p);
        if (g.total_degree() == 0) break;
    }
    return g;
}

// Pseudo-remainder of univariate-in-v views with Poly coefficients.
inline std::vector<Poly> pseudo_rem(std::vector<Poly> u, const std::vector<Poly>& v) {
    int du = static_cast<int>(u.size()) - 1;
    int dv = static_cast<int>(v.size()) - 1;
    const Poly& lv = v.back();
    while (du >= dv && !(u.size() == 1 && u[0].is_zero())) {
        Poly lu = u.back();
        for (auto& c : u) c *= lv;
        for (int k = 0; k <= dv; ++k)
            u[static_cast<size_t>(du - dv + k)] -= lu * v[static_cast<size_t>(k)];
        while (u.size() > 1 && u.back().is_zero()) u.pop_back();
        if (u.size() == 1 && u[0].is_zero()) break;
        int nd = static_cast<int>(u.size()) - 1;
        if (nd == du) throw Error("Poly: pseudo-division failed to reduce degree");
        du = nd;
    }
    return u;
}

inline Poly poly_gcd_impl(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.canonical();
    if (b.is_zero()) return a.canonical();
    if (a.total_degree() == 0 || b.total_degree() == 0) return Poly(1);
    // main variable: highest index used by either
    int v = -1;
    for (int w = 2; w >= 0; --w)
        if (a.depends_on(w) || b.depends_on(w)) {
            v = w;
            break;
        }
    if (v < 0) return Poly(1);
    if (!a.depends_on(v) || !b.depends_on(v)) {
        // one of them is constant in v: gcd divides its coefficients-in-v
        const Poly& flat = a.depends_on(v) ? b : a;
        const Poly& tall = a.depends_on(v) ? a : b;
        std::vector<Poly> cs = tall.to_univar(v);
        cs.push_back(flat);
        return list_gcd(cs).canonical();
    }
    std::vector<Poly> u = a.to_univar(v), w = b.to_univar(v);
    Poly cu = list_gcd(u), cw = list_gcd(w);
    Poly cont = poly_gcd_impl(cu, cw);
    for (auto& c : u) c = exact_div(c, cu);
    for (auto& c : w) c = exact_div(c, cw);
    if (u.size() < w.size()) std::swap(u, w);
    // primitive PRS
    while (true) {
        std::vector<Poly> r = pseudo_rem(u, w);
        if (r.size() == 1 && r[0].is_zero()) break;
        Poly cr = list_gcd(r);
        for (auto& c : r) c = exact_div(c, cr);
        u = std::move(w);
        w = std::move(r);
        if (w.size() == 1) {
            // degree 0 in v: primitive parts are coprime
            return cont.canonical();
        }
    }
    Poly pp = Poly::from_univar(v, w);
    return (cont * pp).canonical();
}

}  // namespace detail

// Greatest common divisor, integer-primitive with positive leading sign.
inline Poly gcd(const Poly& a, const Poly& b) { return detail::poly_gcd_impl(a, b); }

// Product of the distinct irreducible factors.
inline Poly squarefree_part(const Poly& p) {
    if (p.is_zero()) throw Error("squarefree_part: zero polynomial");
    Poly g = p;
    Poly d = p;
    for (int v = 0; v < 3; ++v) d = gcd(d, p.derivative(v));
    // d = prod f_i^(e_i - 1)
    return exact_div(p, d).canonical();
}

// Determinant of a square Poly matrix by Bareiss fraction-free elimination.
inline Poly poly_det(std::vector<std::vector<Poly>> m) {
    size_t n = m.size();
    if (n == 0) return Poly(1);
    Poly prev(1);
    int sgn = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) return Poly();
            std::swap(m[k], m[piv]);
            sgn = -sgn;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                Poly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = exact_div(num, prev);
            }
        prev = m[k][k];
    }
    Poly det = m[n - 1][n - 1];
    return sgn < 0 ? -det : det;
}

// Sylvester resultant of p and q with respect to variable v. When one of
// the inputs does not involve v the standard power convention applies.
inline Poly resultant(const Poly& p, const Poly& q, int v) {
    if (p.is_zero() || q.is_zero()) throw Error("resultant: zero polynomial");
    int m = std::max(p.degree_in(v), 0), n = std::max(q.degree_in(v), 0);
    if (m == 0 && n == 0) return Poly(1);
    if (m == 0) return p.pow(static_cast<unsigned>(n));
    if (n == 0) return q.pow(static_cast<unsigned>(m));
    std::vector<Poly> pc = p.to_univar(v), qc = q.to_univar(v);
    size_t dim = static_cast<size_t>(m + n);
    std::vector<std::vector<Poly>> s(dim, std::vector<Poly>(dim));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s[static_cast<size_t>(i)][static_cast<size_t>(i + j)] = pc[static_cast<size_t>(m - j)];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s[static_cast<size_t>(n + i)][static_cast<size_t>(i + j)] = qc[static_cast<size_t>(n - j)];
    return poly_det(std::move(s));
}

// --------------------------------------------------------------------------
// Text grammar: terms over x, y, z with integer or p/q coefficients and
// operators + - * ^. Implicit multiplication is allowed only between a
// numeric coefficient and a following monomial (e.g. "3x^2").

namespace detail {

struct PolyParser {
    std::string_view s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool peek(char c) {
        skip_ws();
        return i < s.size() && s[i] == c;
    }
    bool eat(char c) {
        if (peek(c)) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw Error("polynomial parse error at offset " + std::to_string(i) + ": " + msg);
    }

    Poly parse_expr() {
        Poly r;
        bool neg = false;
        skip_ws();
        if (eat('-')) neg = true;
        else eat('+');
        r = parse_term();
        if (neg) r = -r;
        while (true) {
            skip_ws();
            if (eat('+')) r += parse_term();
            else if (eat('-')) r -= parse_term();
            else break;
        }
        return r;
    }

    Poly parse_term() {
        Poly r = parse_factor(true);
        while (true) {
            skip_ws();
            if (eat('*')) {
                r *= parse_factor(false);
            } else if (i < s.size() && is_var_char(s[i]) && last_was_number_) {
                // coefficient directly followed by a monomial: 3x^2
                r *= parse_factor(false);
            } else {
                break;
            }
        }
        return r;
    }

    static bool is_var_char(char c) { return c == 'x' || c == 'y' || c == 'z'; }

    Poly parse_factor(bool allow_leading_sign) {
        skip_ws();
        last_was_number_ = false;
        if (allow_leading_sign && eat('-')) return -parse_factor(false);
        if (eat('(')) {
            Poly r = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return maybe_power(r);
        }
        if (i >= s.size()) fail("unexpected end of input");
        char c = s[i];
        if (is_var_char(c)) {
            ++i;
            Poly v = Poly::variable(c == 'x' ? 0 : c == 'y' ? 1 : 2);
            return maybe_power(v);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '.'))
                ++j;
            Rational v = parse_rational(s.substr(i, j - i));
            i = j;
            skip_ws();
            if (eat('/')) {
                skip_ws();
                size_t k = i;
                while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
                if (k == i) fail("expected denominator");
                Rational d = parse_rational(s.substr(i, k - i));
                if (d == 0) fail("zero denominator");
                i = k;
                v /= d;
            }
            last_was_number_ = true;
            Poly r(v);
            return maybe_power(r);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    Poly maybe_power(const Poly& base) {
        skip_ws();
        if (i < s.size() && s[i] == '^') {
            ++i;
            skip_ws();
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j == i) fail("expected exponent");
            unsigned e = static_cast<unsigned>(std::stoul(std::string(s.substr(i, j - i))));
            i = j;
            bool was_number = last_was_number_;
            last_was_number_ = was_number;
            return base.pow(e);
        }
        return base;
    }

    bool last_was_number_ = false;
};

}  // namespace detail

inline Poly Poly::parse(std::string_view text) {
    detail::PolyParser p{text};
    Poly r = p.parse_expr();
    p.skip_ws();
    if (p.i != text.size()) p.fail("trailing input");
    return r;
}

inline std::string Poly::str() const {
    if (is_zero()) return "0";
    static const char* names[3] = {"x", "y", "z"};
    std::string out;
    // highest graded-lex term first
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        Rational c = it->second;
        bool first = out.empty();
        if (!first) {
            out += (c > 0) ? " + " : " - ";
            c = abs(c);
        } else if (c < 0) {
            out += "-";
            c = -c;
        }
        bool has_var = it->first.total() > 0;
        if (!has_var || c != 1) {
            out += to_string(c);
            if (has_var) out += "*";
        }
        bool firstv = true;
        for (int v = 0; v < 3; ++v) {
            unsigned e = it->first.e[static_cast<size_t>(v)];
            if (!e) continue;
            if (!firstv) out += "*";
            firstv = false;
            out += names[v];
            if (e > 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

}  // namespace ninepoint
