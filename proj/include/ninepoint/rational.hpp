#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "ninepoint/error.hpp"

namespace ninepoint {

namespace mp = boost::multiprecision;

// Arbitrary-precision integer and rational. GMP keeps rationals in lowest
// terms with positive denominator, which is exactly the canonical form the
// rest of the library relies on for decidable equality.
//
// Caution: the two-argument Rational constructor canonicalizes only when
// both arguments are Int; Rational(6, -4) with built-in ints is mangled by
// the backend. Use make_rational for arbitrary-sign pairs.
using Int = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

inline Rational make_rational(const Int& n, const Int& d) {
    if (d == 0) throw Error("make_rational: zero denominator");
    return Rational(n, d);
}

inline Int num(const Rational& q) { return numerator(q); }
inline Int den(const Rational& q) { return denominator(q); }

inline int sign(const Int& n) { return n.sign(); }
inline int sign(const Rational& q) { return q.sign(); }

inline bool is_integer(const Rational& q) { return den(q) == 1; }

inline Int gcd_int(const Int& a, const Int& b) { return mp::gcd(a, b); }
inline Int lcm_int(const Int& a, const Int& b) { return mp::lcm(a, b); }

// Floor of the integer square root.
inline Int isqrt(const Int& n) {
    if (n < 0) throw Error("isqrt: negative argument");
    return mp::sqrt(n);
}

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
    if (n < 0) return false;
    Int r = mp::sqrt(n);
    if (r * r == n) {
        if (root) *root = r;
        return true;
    }
    return false;
}

// n = square^2 * rest with rest square-free up to factors whose prime
// divisors all exceed the trial-division bound. Geometry-sized inputs are
// fully reduced in practice; QuadExt equality stays exact either way.
struct SquareSplit {
    Int square;  // the extracted square root factor
    Int rest;
};

inline SquareSplit extract_square_part(Int n, std::uint64_t bound = 100000) {
    if (n == 0) throw Error("extract_square_part: zero argument");
    int sgn = n.sign();
    n = abs(n);
    Int sq = 1;
    for (std::uint64_t p = 2; p <= bound && Int(p) * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (unsigned k = 0; k < e / 2; ++k) sq *= p;
        if (e % 2 == 1) n *= p;  // odd leftover factor stays in rest
    }
    Int r;
    if (is_perfect_square(n, &r)) {
        sq *= r;
        n = 1;
    }
    return {sq, sgn < 0 ? -n : n};
}

// Exact square root of a rational, when it is one.
inline std::optional<Rational> sqrt_exact(const Rational& q) {
    if (q < 0) return std::nullopt;
    Int rn, rd;
    if (is_perfect_square(num(q), &rn) && is_perfect_square(den(q), &rd))
        return Rational(rn, rd);
    return std::nullopt;
}

inline Rational pow_rational(const Rational& q, unsigned e) {
    Rational r = 1;
    Rational base = q;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// Parses "p/q", integers, and plain decimal strings ("-1.25" -> -5/4).
inline Rational parse_rational(std::string_view s) {
    auto fail = [&]() -> Rational {
        throw Error("parse_rational: malformed number '" + std::string(s) + "'");
    };
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    if (b == e) fail();
    std::string t(s.substr(b, e - b));
    auto slash = t.find('/');
    if (slash != std::string::npos) {
        std::string p = t.substr(0, slash), q = t.substr(slash + 1);
        if (p.empty() || q.empty()) fail();
        try {
            Int pn(p), qn(q);
            if (qn == 0) throw Error("parse_rational: zero denominator in '" + t + "'");
            return Rational(pn, qn);
        } catch (const std::runtime_error&) {
            fail();
        }
    }
    auto dot = t.find('.');
    if (dot == std::string::npos) {
        try {
            return Rational(Int(t));
        } catch (const std::runtime_error&) {
            fail();
        }
    }
    std::string ip = t.substr(0, dot), fp = t.substr(dot + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    if (neg) ip = ip.substr(1);
    else if (!ip.empty() && ip[0] == '+') ip = ip.substr(1);
    if (ip.empty() && fp.empty()) fail();
    for (char c : ip)
        if (!std::isdigit(static_cast<unsigned char>(c))) fail();
    for (char c : fp)
        if (!std::isdigit(static_cast<unsigned char>(c))) fail();
    Int scale = 1;
    for (size_t i = 0; i < fp.size(); ++i) scale *= 10;
    Int whole = ip.empty() ? Int(0) : Int(ip);
    Int frac = fp.empty() ? Int(0) : Int(fp);
    Rational v = Rational(whole) + Rational(frac, scale);
    return neg ? -v : v;
}

inline std::string to_string(const Rational& q) {
    std::string s = num(q).str();
    if (den(q) != 1) s += "/" + den(q).str();
    return s;
}

}  // namespace ninepoint
