#include "zetamde/complex.hpp"

#include "zetamde/errors.hpp"

namespace zetamde {

Real abs(const Complex& z) { return hypot(z.re(), z.im()); }

Real arg(const Complex& z) { return atan2(z.im(), z.re()); }

Complex sqrt(const Complex& z) {
    mpfr_prec_t p = z.prec();
    if (z.is_zero())
        return Complex(p);
    if (z.im().is_zero()) {
        if (z.re().sign() >= 0)
            return Complex(sqrt(z.re()), Real(p));
        return Complex(Real(p), sqrt(-z.re()));
    }
    Real m = abs(z);
    if (z.re().sign() >= 0) {
        Real u = sqrt((m + z.re()) / 2);
        return {u, z.im() / (2 * u)};
    }
    Real t = sqrt((m - z.re()) / 2);
    Real u = abs(z.im()) / (2 * t);
    return z.im().sign() >= 0 ? Complex(u, t) : Complex(u, -t);
}

Complex exp(const Complex& z) {
    Real s(z.prec()), c(z.prec());
    sin_cos(s, c, z.im());
    Real e = exp(z.re());
    return {e * c, e * s};
}

Complex log(const Complex& z) {
    if (z.is_zero())
        throw domain_error("log of zero");
    return {log(abs(z)), arg(z)};
}

Complex asinh(const Complex& z) {
    // asinh(z) = log(z + sqrt(z^2+1)); reflect for Re z < 0 to dodge the
    // cancellation at large negative real parts.
    if (z.re().sign() < 0)
        return -asinh(-z);
    return log(z + sqrt(z * z + 1));
}

Complex cis(const Real& theta) {
    Real s(theta.prec()), c(theta.prec());
    sin_cos(s, c, theta);
    return {c, s};
}

Complex imag_unit_times(const Real& x) { return {Real(x.prec()), x}; }

Complex cpow(const Complex& w, const Complex& s) {
    if (w.is_zero()) {
        if (s.re().sign() > 0)
            return Complex(w.prec());
        throw domain_error("cpow: 0 base with nonpositive real exponent");
    }
    return exp(s * log(w));
}

Complex cpow(const Complex& w, const Complex& s, const Real& angle) {
    if (w.is_zero()) {
        if (s.re().sign() > 0)
            return Complex(w.prec());
        throw domain_error("cpow: 0 base with nonpositive real exponent");
    }
    Complex lw(log(abs(w)), angle);
    return exp(s * lw);
}

} // namespace zetamde
