#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

namespace zetamde {

// Arbitrary-precision real backed by MPFR. Value semantics, round-to-nearest
// throughout. Binary operations produce a result at the larger operand
// precision; nothing here reads ambient/global state.
class Real {
  public:
    explicit Real(mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    Real(long x, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_si(v_, x, MPFR_RNDN);
    }
    Real(double x, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_d(v_, x, MPFR_RNDN);
    }
    Real(const std::string& s, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0)
            mpfr_set_nan(v_);
    }
    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }
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

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    Real to_prec(mpfr_prec_t prec) const {
        Real r(prec);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long floor_long() const {
        mpfr_t t;
        mpfr_init2(t, prec());
        mpfr_floor(t, v_);
        long r = mpfr_get_si(t, MPFR_RNDZ);
        mpfr_clear(t);
        return r;
    }
    long ceil_long() const {
        mpfr_t t;
        mpfr_init2(t, prec());
        mpfr_ceil(t, v_);
        long r = mpfr_get_si(t, MPFR_RNDZ);
        mpfr_clear(t);
        return r;
    }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_integer() const { return mpfr_integer_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    // log10 of |x| as a double, safe far outside double's exponent range
    double log10_abs() const;

    Real& operator+=(const Real& o) {
        mpfr_add(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator-=(const Real& o) {
        mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator*=(const Real& o) {
        mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator/=(const Real& o) {
        mpfr_div(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator*=(long k) {
        mpfr_mul_si(v_, v_, k, MPFR_RNDN);
        return *this;
    }
    Real& operator/=(long k) {
        mpfr_div_si(v_, v_, k, MPFR_RNDN);
        return *this;
    }

    friend Real operator-(const Real& a) {
        Real r(a.prec());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

#define ZETAMDE_REAL_BINOP(op, fn)                                 \
    friend Real operator op(const Real& a, const Real& b) {        \
        Real r(a.prec() > b.prec() ? a.prec() : b.prec());         \
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);                           \
        return r;                                                  \
    }                                                              \
    friend Real operator op(const Real& a, long b) {               \
        Real r(a.prec());                                          \
        fn##_si(r.v_, a.v_, b, MPFR_RNDN);                         \
        return r;                                                  \
    }
    ZETAMDE_REAL_BINOP(+, mpfr_add)
    ZETAMDE_REAL_BINOP(-, mpfr_sub)
    ZETAMDE_REAL_BINOP(*, mpfr_mul)
    ZETAMDE_REAL_BINOP(/, mpfr_div)
#undef ZETAMDE_REAL_BINOP

    friend Real operator+(long a, const Real& b) { return b + a; }
    friend Real operator*(long a, const Real& b) { return b * a; }
    friend Real operator-(long a, const Real& b) {
        Real r(b.prec());
        mpfr_si_sub(r.raw(), a, b.raw(), MPFR_RNDN);
        return r;
    }
    friend Real operator/(long a, const Real& b) {
        Real r(b.prec());
        mpfr_si_div(r.raw(), a, b.raw(), MPFR_RNDN);
        return r;
    }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
    friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
    friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
    friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }
    friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
    friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }

  private:
    mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real asinh(const Real& x);
Real atan2(const Real& y, const Real& x);
Real hypot(const Real& x, const Real& y);
Real floor(const Real& x);
void sin_cos(Real& s, Real& c, const Real& x);
void sinh_cosh(Real& sh, Real& ch, const Real& x);
Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);

Real const_pi(mpfr_prec_t prec);
Real const_catalan(mpfr_prec_t prec);
Real const_ln10(mpfr_prec_t prec);
// 10^e at the given precision (e may be large and negative)
Real pow10(long e, mpfr_prec_t prec);

} // namespace zetamde
