#pragma once

#include <mpfr.h>

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

#include "ninepoint/quadext.hpp"
#include "ninepoint/rational.hpp"

namespace ninepoint {

enum class TriSign { Negative, Zero, Positive, Undecided };

// Certified floating interval [lo, hi] at a working precision. Every
// operation rounds lo down and hi up, so the exact value of the expression
// is always contained. Comparison against zero is three-valued; callers
// that need a decision escalate precision via with_escalation().
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 256) {
        mpfr_init2(lo_, prec);
        mpfr_init2(hi_, prec);
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }

    BigFloat(const BigFloat& o) {
        mpfr_init2(lo_, mpfr_get_prec(o.lo_));
        mpfr_init2(hi_, mpfr_get_prec(o.hi_));
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(lo_, 2);
        mpfr_init2(hi_, 2);
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
    }
    BigFloat& operator=(BigFloat o) noexcept {
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
        return *this;
    }
    ~BigFloat() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }

    static BigFloat from_rational(const Rational& q, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_q(r.lo_, q.backend().data(), MPFR_RNDD);
        mpfr_set_q(r.hi_, q.backend().data(), MPFR_RNDU);
        return r;
    }

    static BigFloat from_long(long v, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_si(r.lo_, v, MPFR_RNDD);
        mpfr_set_si(r.hi_, v, MPFR_RNDU);
        return r;
    }

    static BigFloat from_rational_interval(const Rational& lo, const Rational& hi,
                                           mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_q(r.lo_, lo.backend().data(), MPFR_RNDD);
        mpfr_set_q(r.hi_, hi.backend().data(), MPFR_RNDU);
        return r;
    }

    // a + b*sqrt(d), requires d >= 0.
    static BigFloat from_quadext(const QuadExt& x, mpfr_prec_t prec) {
        if (!x.is_real()) throw Error("BigFloat: non-real QuadExt");
        BigFloat a = from_rational(x.rational_part(), prec);
        if (x.radical_coeff() == 0) return a;
        BigFloat d = from_rational(Rational(x.radicand()), prec);
        return a + from_rational(x.radical_coeff(), prec) * sqrt(d);
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(lo_); }

    TriSign sign() const {
        if (mpfr_zero_p(lo_) && mpfr_zero_p(hi_)) return TriSign::Zero;
        if (mpfr_sgn(hi_) < 0) return TriSign::Negative;
        if (mpfr_sgn(lo_) > 0) return TriSign::Positive;
        return TriSign::Undecided;
    }

    bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

    bool contains(const Rational& q) const {
        return mpfr_cmp_q(lo_, q.backend().data()) <= 0 &&
               mpfr_cmp_q(hi_, q.backend().data()) >= 0;
    }

    // Upper bound for the interval width, rounded up, as a double.
    double width() const {
        mpfr_t w;
        mpfr_init2(w, 64);
        mpfr_sub(w, hi_, lo_, MPFR_RNDU);
        double d = mpfr_get_d(w, MPFR_RNDU);
        mpfr_clear(w);
        return d;
    }

    // log2 of an upper bound of the width (-inf for exact points).
    double width_exponent() const {
        mpfr_t w;
        mpfr_init2(w, 64);
        mpfr_sub(w, hi_, lo_, MPFR_RNDU);
        double e = mpfr_zero_p(w) ? -mpfr_get_default_prec() * 64.0
                                  : static_cast<double>(mpfr_get_exp(w));
        mpfr_clear(w);
        return e;
    }

    // Upper bound of |x|.
    double abs_upper() const {
        double a = std::abs(mpfr_get_d(lo_, MPFR_RNDA));
        double b = std::abs(mpfr_get_d(hi_, MPFR_RNDA));
        return std::max(a, b);
    }

    double mid_double() const {
        return (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN)) / 2;
    }

    friend BigFloat operator-(const BigFloat& x) {
        BigFloat r(x.prec());
        mpfr_neg(r.lo_, x.hi_, MPFR_RNDD);
        mpfr_neg(r.hi_, x.lo_, MPFR_RNDU);
        return r;
    }

    friend BigFloat operator+(const BigFloat& x, const BigFloat& y) {
        BigFloat r(std::max(x.prec(), y.prec()));
        mpfr_add(r.lo_, x.lo_, y.lo_, MPFR_RNDD);
        mpfr_add(r.hi_, x.hi_, y.hi_, MPFR_RNDU);
        return r;
    }

    friend BigFloat operator-(const BigFloat& x, const BigFloat& y) {
        BigFloat r(std::max(x.prec(), y.prec()));
        mpfr_sub(r.lo_, x.lo_, y.hi_, MPFR_RNDD);
        mpfr_sub(r.hi_, x.hi_, y.lo_, MPFR_RNDU);
        return r;
    }

    friend BigFloat operator*(const BigFloat& x, const BigFloat& y) {
        BigFloat r(std::max(x.prec(), y.prec()));
        mpfr_t t;
        mpfr_init2(t, r.prec());
        const mpfr_srcptr xs[2] = {x.lo_, x.hi_};
        const mpfr_srcptr ys[2] = {y.lo_, y.hi_};
        bool first = true;
        for (auto xi : xs)
            for (auto yi : ys) {
                mpfr_mul(t, xi, yi, MPFR_RNDD);
                if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
                mpfr_mul(t, xi, yi, MPFR_RNDU);
                if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
                first = false;
            }
        mpfr_clear(t);
        return r;
    }

    friend BigFloat operator/(const BigFloat& x, const BigFloat& y) {
        BigFloat r(std::max(x.prec(), y.prec()));
        if (y.contains_zero()) {
            // Honest failure mode: the quotient is unbounded.
            mpfr_set_inf(r.lo_, -1);
            mpfr_set_inf(r.hi_, 1);
            return r;
        }
        mpfr_t t;
        mpfr_init2(t, r.prec());
        const mpfr_srcptr xs[2] = {x.lo_, x.hi_};
        const mpfr_srcptr ys[2] = {y.lo_, y.hi_};
        bool first = true;
        for (auto xi : xs)
            for (auto yi : ys) {
                mpfr_div(t, xi, yi, MPFR_RNDD);
                if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
                mpfr_div(t, xi, yi, MPFR_RNDU);
                if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
                first = false;
            }
        mpfr_clear(t);
        return r;
    }

    friend BigFloat sqrt(const BigFloat& x) {
        if (mpfr_sgn(x.hi_) < 0) throw Error("BigFloat: sqrt of negative interval");
        BigFloat r(x.prec());
        if (mpfr_sgn(x.lo_) <= 0)
            mpfr_set_zero(r.lo_, 1);
        else
            mpfr_sqrt(r.lo_, x.lo_, MPFR_RNDD);
        mpfr_sqrt(r.hi_, x.hi_, MPFR_RNDU);
        return r;
    }

    friend BigFloat abs(const BigFloat& x) {
        switch (x.sign()) {
            case TriSign::Negative: return -x;
            case TriSign::Positive:
            case TriSign::Zero: return x;
            default: {
                BigFloat r(x.prec());
                mpfr_set_zero(r.lo_, 1);
                mpfr_t a, b;
                mpfr_init2(a, x.prec());
                mpfr_init2(b, x.prec());
                mpfr_abs(a, x.lo_, MPFR_RNDU);
                mpfr_abs(b, x.hi_, MPFR_RNDU);
                mpfr_max(r.hi_, a, b, MPFR_RNDU);
                mpfr_clear(a);
                mpfr_clear(b);
                return r;
            }
        }
    }

    BigFloat& operator+=(const BigFloat& y) { return *this = *this + y; }
    BigFloat& operator-=(const BigFloat& y) { return *this = *this - y; }
    BigFloat& operator*=(const BigFloat& y) { return *this = *this * y; }
    BigFloat& operator/=(const BigFloat& y) { return *this = *this / y; }

    std::string str() const {
        char* ls = nullptr;
        char* hs = nullptr;
        mpfr_asprintf(&ls, "%.20Rg", lo_);
        mpfr_asprintf(&hs, "%.20Rg", hi_);
        std::string s = std::string("[") + ls + ", " + hs + "]";
        mpfr_free_str(ls);
        mpfr_free_str(hs);
        return s;
    }

private:
    mpfr_t lo_, hi_;
};

// Scalar literals in code templated over the scalar field: BigFloat must
// inherit the working precision from a model value (a bare BigFloat(2)
// would be the precision constructor).
inline Rational make_scalar(long v, const Rational&) { return Rational(v); }
inline QuadExt make_scalar(long v, const QuadExt&) { return QuadExt(v); }
inline BigFloat make_scalar(long v, const BigFloat& model) {
    return BigFloat::from_long(v, model.prec());
}

// Evaluates fn at doubling precisions until it returns a value; gives up
// beyond max_bits. fn: (prec) -> std::optional<T>.
template <class F>
auto with_escalation(F fn, unsigned start_bits = 256, unsigned max_bits = 4096)
    -> typename decltype(fn(start_bits))::value_type {
    for (unsigned bits = start_bits;; bits *= 2) {
        auto r = fn(bits);
        if (r) return *r;
        if (bits >= max_bits) throw UndecidableError("certified comparison", bits);
    }
}

}  // namespace ninepoint
