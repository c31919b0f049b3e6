#ifndef LUE_REAL_HPP
#define LUE_REAL_HPP

#include <mpfr.h>

#include <string>
#include <utility>

#include "lue/errors.hpp"

namespace lue {

// Arbitrary-precision real backed by MPFR, round-to-nearest throughout.
//
// Precision propagation rule: a binary operation allocates its result at the
// larger of the two operand precisions; operations with int/long/double use
// the Real operand's precision. Assignment adopts the source precision. With
// all leaf values constructed at the working precision this keeps every
// intermediate at that precision with no global state, so concurrent use is
// safe.
class Real {
public:
    Real() { mpfr_init2(v_, 53); mpfr_set_nan(v_); }
    explicit Real(long prec_bits) { mpfr_init2(v_, prec_bits); mpfr_set_zero(v_, 1); }

    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, 53); mpfr_swap(v_, o.v_); }

    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real of(long value, long prec_bits) {
        Real r(prec_bits);
        mpfr_set_si(r.v_, value, MPFR_RNDN);
        return r;
    }
    static Real of(int value, long prec_bits) {
        return of(static_cast<long>(value), prec_bits);
    }
    static Real of(double value, long prec_bits) {
        Real r(prec_bits);
        mpfr_set_d(r.v_, value, MPFR_RNDN);
        return r;
    }
    // Parses a base-10 literal, correctly rounded to prec_bits.
    static Real parse(const std::string& text, long prec_bits) {
        Real r(prec_bits);
        if (mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0)
            throw DomainError("Real::parse: not a number: '" + text + "'");
        return r;
    }
    // 2^e at the given precision (exact).
    static Real pow2(long e, long prec_bits) {
        Real r(prec_bits);
        mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN);
        return r;
    }
    static Real pi(long prec_bits) {
        Real r(prec_bits);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    static Real nan(long prec_bits) {
        Real r(prec_bits);
        mpfr_set_nan(r.v_);
        return r;
    }

    long prec() const { return mpfr_get_prec(v_); }
    Real round_to(long prec_bits) const {
        Real r(prec_bits);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    // Exponent e with |x| in [2^(e-1), 2^e); only meaningful for nonzero finite x.
    long exponent() const { return static_cast<long>(mpfr_get_exp(v_)); }

    // Scientific notation with the requested number of significant digits.
    std::string str(int digits = 20) const;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    Real operator-() const {
        Real r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    Real& operator+=(const Real& o) { bump(o); mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { bump(o); mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { bump(o); mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { bump(o); mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator+=(long o) { mpfr_add_si(v_, v_, o, MPFR_RNDN); return *this; }
    Real& operator-=(long o) { mpfr_sub_si(v_, v_, o, MPFR_RNDN); return *this; }
    Real& operator*=(long o) { mpfr_mul_si(v_, v_, o, MPFR_RNDN); return *this; }
    Real& operator/=(long o) { mpfr_div_si(v_, v_, o, MPFR_RNDN); return *this; }

    friend Real operator+(const Real& a, const Real& b) { return bin(mpfr_add, a, b); }
    friend Real operator-(const Real& a, const Real& b) { return bin(mpfr_sub, a, b); }
    friend Real operator*(const Real& a, const Real& b) { return bin(mpfr_mul, a, b); }
    friend Real operator/(const Real& a, const Real& b) { return bin(mpfr_div, a, b); }

    friend Real operator+(const Real& a, long b) { Real r(a.prec()); mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN); return r; }
    friend Real operator+(long a, const Real& b) { return b + a; }
    friend Real operator-(const Real& a, long b) { Real r(a.prec()); mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN); return r; }
    friend Real operator-(long a, const Real& b) { Real r(b.prec()); mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN); return r; }
    friend Real operator*(const Real& a, long b) { Real r(a.prec()); mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN); return r; }
    friend Real operator*(long a, const Real& b) { return b * a; }
    friend Real operator/(const Real& a, long b) { Real r(a.prec()); mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN); return r; }
    friend Real operator/(long a, const Real& b) { Real r(b.prec()); mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN); return r; }

    friend Real operator+(const Real& a, int b) { return a + static_cast<long>(b); }
    friend Real operator+(int a, const Real& b) { return b + static_cast<long>(a); }
    friend Real operator-(const Real& a, int b) { return a - static_cast<long>(b); }
    friend Real operator-(int a, const Real& b) { return static_cast<long>(a) - b; }
    friend Real operator*(const Real& a, int b) { return a * static_cast<long>(b); }
    friend Real operator*(int a, const Real& b) { return b * static_cast<long>(a); }
    friend Real operator/(const Real& a, int b) { return a / static_cast<long>(b); }
    friend Real operator/(int a, const Real& b) { return static_cast<long>(a) / b; }

    friend Real operator+(const Real& a, double b) { Real r(a.prec()); mpfr_add_d(r.v_, a.v_, b, MPFR_RNDN); return r; }
    friend Real operator+(double a, const Real& b) { return b + a; }
    friend Real operator-(const Real& a, double b) { Real r(a.prec()); mpfr_sub_d(r.v_, a.v_, b, MPFR_RNDN); return r; }
    friend Real operator-(double a, const Real& b) { Real r(b.prec()); mpfr_d_sub(r.v_, a, b.v_, MPFR_RNDN); return r; }
    friend Real operator*(const Real& a, double b) { Real r(a.prec()); mpfr_mul_d(r.v_, a.v_, b, MPFR_RNDN); return r; }
    friend Real operator*(double a, const Real& b) { return b * a; }
    friend Real operator/(const Real& a, double b) { Real r(a.prec()); mpfr_div_d(r.v_, a.v_, b, MPFR_RNDN); return r; }
    friend Real operator/(double a, const Real& b) { Real r(b.prec()); mpfr_d_div(r.v_, a, b.v_, MPFR_RNDN); return r; }

    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

    friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
    friend bool operator!=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) != 0; }
    friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
    friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
    friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
    friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }
    friend bool operator==(const Real& a, int b) { return a == static_cast<long>(b); }
    friend bool operator!=(const Real& a, int b) { return a != static_cast<long>(b); }
    friend bool operator<(const Real& a, int b) { return a < static_cast<long>(b); }
    friend bool operator>(const Real& a, int b) { return a > static_cast<long>(b); }
    friend bool operator<=(const Real& a, int b) { return a <= static_cast<long>(b); }
    friend bool operator>=(const Real& a, int b) { return a >= static_cast<long>(b); }
    friend bool operator<(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) < 0; }
    friend bool operator>(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) > 0; }
    friend bool operator<=(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) <= 0; }
    friend bool operator>=(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) >= 0; }

private:
    using mpfr_bin_fn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    static Real bin(mpfr_bin_fn fn, const Real& a, const Real& b) {
        Real r(a.prec() > b.prec() ? a.prec() : b.prec());
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    void bump(const Real& o) {
        if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) {
            Real widened(mpfr_get_prec(o.v_));
            mpfr_set(widened.v_, v_, MPFR_RNDN);
            mpfr_swap(v_, widened.v_);
        }
    }

    mpfr_t v_;
};

inline Real un(int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t), const Real& x) {
    Real r(x.prec());
    fn(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

inline Real abs(const Real& x) { return un(mpfr_abs, x); }
inline Real sqrt(const Real& x) {
    if (x < 0) throw DomainError("sqrt: negative argument");
    return un(mpfr_sqrt, x);
}
inline Real sqr(const Real& x) { return un(mpfr_sqr, x); }
inline Real exp(const Real& x) { return un(mpfr_exp, x); }
inline Real log(const Real& x) {
    if (x <= 0) throw DomainError("log: non-positive argument");
    return un(mpfr_log, x);
}
inline Real cosh(const Real& x) { return un(mpfr_cosh, x); }
inline Real sinh(const Real& x) { return un(mpfr_sinh, x); }
inline Real tanh(const Real& x) { return un(mpfr_tanh, x); }
inline Real floor(const Real& x) {
    Real r(x.prec());
    mpfr_floor(r.raw(), x.raw());
    return r;
}

inline Real pow(const Real& x, long e) {
    Real r(x.prec());
    mpfr_pow_si(r.raw(), x.raw(), e, MPFR_RNDN);
    return r;
}
inline Real pow(const Real& x, const Real& e) {
    Real r(x.prec() > e.prec() ? x.prec() : e.prec());
    mpfr_pow(r.raw(), x.raw(), e.raw(), MPFR_RNDN);
    return r;
}
// x * 2^e, exact.
inline Real ldexp2(const Real& x, long e) {
    Real r(x.prec());
    mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
    return r;
}

inline Real min(const Real& a, const Real& b) { return a < b ? a : b; }
inline Real max(const Real& a, const Real& b) { return a > b ? a : b; }

// Relative discrepancy |a - b| / max(|a|, |b|); zero when both sides vanish.
inline Real rel_err(const Real& a, const Real& b) {
    Real scale = max(abs(a), abs(b));
    if (scale.is_zero()) return Real::of(0L, a.prec());
    return abs(a - b) / scale;
}

// Working-precision context. quad_tol is the target relative error for the
// quadrature-backed primitives; default 2^-(bits-16).
struct PrecisionContext {
    long bits = 256;
    Real quad_tol;

    static PrecisionContext make(long bits) {
        if (bits < 64) throw DomainError("PrecisionContext: bits must be >= 64");
        PrecisionContext ctx;
        ctx.bits = bits;
        ctx.quad_tol = Real::pow2(-(bits - 16), bits);
        return ctx;
    }
    static PrecisionContext make(long bits, const Real& quad_tol) {
        if (bits < 64) throw DomainError("PrecisionContext: bits must be >= 64");
        if (!(quad_tol > 0)) throw DomainError("PrecisionContext: quad_tol must be > 0");
        PrecisionContext ctx;
        ctx.bits = bits;
        ctx.quad_tol = quad_tol;
        return ctx;
    }
    PrecisionContext doubled() const { return make(2 * bits); }
};

} // namespace lue

#endif
