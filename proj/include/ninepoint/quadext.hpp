#pragma once

#include <optional>
#include <string>

#include "ninepoint/rational.hpp"

namespace ninepoint {

// Element a + b*sqrt(d) of a real or imaginary quadratic extension of Q.
// d is kept square-free by trial division (see extract_square_part); the
// canonical form has b == 0 <=> d == 1. Negative d is allowed so that
// complex-conjugate geometry (imaginary double points, circular points)
// can be carried exactly; sign() is only defined for d > 0.
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), d_(1) {}
    QuadExt(const Rational& a) : a_(a), b_(0), d_(1) {}  // NOLINT(google-explicit-constructor)
    QuadExt(long a) : a_(a), b_(0), d_(1) {}             // NOLINT(google-explicit-constructor)
    QuadExt(const Rational& a, const Rational& b, const Int& d) : a_(a), b_(b), d_(d) {
        normalize();
    }

    static QuadExt sqrt_of(const Rational& r) {
        if (r == 0) return QuadExt();
        SquareSplit s = extract_square_part(num(r) * den(r));
        // sqrt(p/q) = sqrt(p*q)/q = (s.square/q) * sqrt(s.rest)
        return QuadExt(0, Rational(s.square, den(r)), s.rest);
    }

    const Rational& rational_part() const { return a_; }
    const Rational& radical_coeff() const { return b_; }
    const Int& radicand() const { return d_; }

    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_real() const { return b_ == 0 || d_ > 0; }

    // Exact rational value when the element is rational.
    std::optional<Rational> as_rational() const {
        if (b_ == 0) return a_;
        return std::nullopt;
    }

    QuadExt conjugate() const { return QuadExt(a_, -b_, d_, raw_tag{}); }

    Rational norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }

    // Equality is decidable without rebasing: b*sqrt(d) is determined by
    // its sign and square even if d carries an undetected square factor.
    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        if (x.a_ != y.a_) return false;
        if (sign(x.b_) != sign(y.b_)) return false;
        return x.b_ * x.b_ * Rational(x.d_) == y.b_ * y.b_ * Rational(y.d_);
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    friend QuadExt operator-(const QuadExt& x) { return QuadExt(-x.a_, -x.b_, x.d_, raw_tag{}); }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        auto [p, q] = rebase(x, y);
        return QuadExt(p.a_ + q.a_, p.b_ + q.b_, p.d_);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) { return x + (-y); }

    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        auto [p, q] = rebase(x, y);
        return QuadExt(p.a_ * q.a_ + p.b_ * q.b_ * Rational(p.d_),
                       p.a_ * q.b_ + p.b_ * q.a_, p.d_);
    }

    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
        if (y.is_zero()) throw Error("QuadExt: division by zero");
        Rational n = y.norm();
        // n == 0 would force sqrt(d) rational, excluded by normalization.
        QuadExt inv(y.a_ / n, -y.b_ / n, y.d_, raw_tag{});
        return x * inv;
    }

    QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
    QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
    QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
    QuadExt& operator/=(const QuadExt& y) { return *this = *this / y; }

    // Three-way sign for real values.
    int sgn() const {
        if (b_ == 0) return sign(a_);
        if (d_ < 0) throw Error("QuadExt: sign of non-real value");
        if (a_ == 0) return sign(b_);
        if (sign(a_) == sign(b_)) return sign(a_);
        int c = sign(a_ * a_ - b_ * b_ * Rational(d_));  // compares |a| vs |b|sqrt(d)
        return c == 0 ? 0 : c * sign(a_);
    }

    std::string str() const {
        if (b_ == 0) return to_string(a_);
        std::string s = a_ == 0 ? "" : to_string(a_);
        if (b_ == 1)
            s += (s.empty() ? "" : "+");
        else if (b_ == -1)
            s += "-";
        else
            s += (s.empty() || sign(b_) < 0 ? to_string(b_) : "+" + to_string(b_)) + "*";
        s += "sqrt(" + d_.str() + ")";
        return s;
    }

private:
    struct raw_tag {};
    QuadExt(const Rational& a, const Rational& b, const Int& d, raw_tag) : a_(a), b_(b), d_(d) {}

    void normalize() {
        if (d_ == 0) throw Error("QuadExt: zero radicand");
        if (b_ == 0) {
            d_ = 1;
            return;
        }
        SquareSplit s = extract_square_part(d_);
        b_ *= Rational(s.square);
        d_ = s.rest;
        if (d_ == 1) {
            a_ += b_;
            b_ = 0;
        }
    }

    // Brings two elements onto a common radicand when their fields agree.
    static std::pair<QuadExt, QuadExt> rebase(const QuadExt& x, const QuadExt& y) {
        if (x.b_ == 0) return {QuadExt(x.a_, 0, y.d_, raw_tag{}), y};
        if (y.b_ == 0) return {x, QuadExt(y.a_, 0, x.d_, raw_tag{})};
        if (x.d_ == y.d_) return {x, y};
        Int r;
        if (is_perfect_square(x.d_ * y.d_, &r)) {
            // sqrt(dy) = (r/dx) * sqrt(dx)
            return {x, QuadExt(y.a_, y.b_ * Rational(r, 1) / Rational(x.d_, 1), x.d_, raw_tag{})};
        }
        throw Error("QuadExt: incompatible radicands " + x.d_.str() + " and " + y.d_.str());
    }

    Rational a_, b_;
    Int d_;
};

inline int sign(const QuadExt& x) { return x.sgn(); }
inline bool is_zero(const QuadExt& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return x == 0; }
inline std::string to_string(const QuadExt& x) { return x.str(); }

}  // namespace ninepoint
