#include "zetamde/real.hpp"

#include <cmath>

namespace zetamde {

#define ZETAMDE_REAL_FN(name, fn)       \
    Real name(const Real& x) {          \
        Real r(x.prec());               \
        fn(r.raw(), x.raw(), MPFR_RNDN); \
        return r;                       \
    }

ZETAMDE_REAL_FN(abs, mpfr_abs)
ZETAMDE_REAL_FN(sqrt, mpfr_sqrt)
ZETAMDE_REAL_FN(exp, mpfr_exp)
ZETAMDE_REAL_FN(log, mpfr_log)
ZETAMDE_REAL_FN(sin, mpfr_sin)
ZETAMDE_REAL_FN(cos, mpfr_cos)
ZETAMDE_REAL_FN(sinh, mpfr_sinh)
ZETAMDE_REAL_FN(cosh, mpfr_cosh)
ZETAMDE_REAL_FN(asinh, mpfr_asinh)
#undef ZETAMDE_REAL_FN

Real floor(const Real& x) {
    Real r(x.prec());
    mpfr_floor(r.raw(), x.raw());
    return r;
}

Real atan2(const Real& y, const Real& x) {
    Real r(y.prec() > x.prec() ? y.prec() : x.prec());
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real hypot(const Real& x, const Real& y) {
    Real r(y.prec() > x.prec() ? y.prec() : x.prec());
    mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}

void sin_cos(Real& s, Real& c, const Real& x) {
    mpfr_sin_cos(s.raw(), c.raw(), x.raw(), MPFR_RNDN);
}

void sinh_cosh(Real& sh, Real& ch, const Real& x) {
    mpfr_sinh_cosh(sh.raw(), ch.raw(), x.raw(), MPFR_RNDN);
}

Real min(const Real& a, const Real& b) { return a <= b ? a : b; }
Real max(const Real& a, const Real& b) { return a >= b ? a : b; }

double Real::log10_abs() const {
    if (mpfr_zero_p(v_) || mpfr_nan_p(v_))
        return -1e300;
    long e;
    double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
    return std::log10(std::fabs(m)) + static_cast<double>(e) * 0.30102999566398119521;
}

Real const_pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

Real const_catalan(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_catalan(r.raw(), MPFR_RNDN);
    return r;
}

Real const_ln10(mpfr_prec_t prec) {
    Real r(10L, prec);
    mpfr_log(r.raw(), r.raw(), MPFR_RNDN);
    return r;
}

Real pow10(long e, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.raw(), 10, MPFR_RNDN);
    mpfr_pow_si(r.raw(), r.raw(), e, MPFR_RNDN);
    return r;
}

} // namespace zetamde
