#pragma once

#include "zetamde/real.hpp"

namespace zetamde {

// Complex number over Real. Both parts always carry the same precision.
// Principal branches everywhere; the cut of log/sqrt/pow is the negative
// real axis unless an explicit angle is supplied to cpow.
class Complex {
  public:
    explicit Complex(mpfr_prec_t prec) : re_(prec), im_(prec) {}
    Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {
        mpfr_prec_t p = re_.prec() > im_.prec() ? re_.prec() : im_.prec();
        if (re_.prec() != p) re_ = re_.to_prec(p);
        if (im_.prec() != p) im_ = im_.to_prec(p);
    }
    explicit Complex(const Real& re) : re_(re), im_(Real(re.prec())) {}
    Complex(long re, mpfr_prec_t prec) : re_(re, prec), im_(prec) {}

    const Real& re() const { return re_; }
    const Real& im() const { return im_; }
    Real& re() { return re_; }
    Real& im() { return im_; }
    mpfr_prec_t prec() const { return re_.prec(); }

    Complex to_prec(mpfr_prec_t p) const { return {re_.to_prec(p), im_.to_prec(p)}; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    Complex conj() const { return {re_, -im_}; }

    Complex& operator+=(const Complex& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }

    friend Complex operator-(const Complex& a) { return {-a.re_, -a.im_}; }
    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        Real d = b.re_ * b.re_ + b.im_ * b.im_;
        return {(a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d};
    }
    friend Complex operator+(const Complex& a, const Real& b) { return {a.re_ + b, a.im_}; }
    friend Complex operator-(const Complex& a, const Real& b) { return {a.re_ - b, a.im_}; }
    friend Complex operator*(const Complex& a, const Real& b) { return {a.re_ * b, a.im_ * b}; }
    friend Complex operator/(const Complex& a, const Real& b) { return {a.re_ / b, a.im_ / b}; }
    friend Complex operator*(const Real& b, const Complex& a) { return a * b; }
    friend Complex operator+(const Real& b, const Complex& a) { return a + b; }
    friend Complex operator-(const Real& b, const Complex& a) { return {b - a.re_, -a.im_}; }
    friend Complex operator*(const Complex& a, long k) { return {a.re_ * k, a.im_ * k}; }
    friend Complex operator*(long k, const Complex& a) { return a * k; }
    friend Complex operator+(const Complex& a, long k) { return {a.re_ + k, a.im_}; }
    friend Complex operator-(const Complex& a, long k) { return {a.re_ - k, a.im_}; }
    friend Complex operator-(long k, const Complex& a) { return {k - a.re_, -a.im_}; }
    friend Complex operator/(const Complex& a, long k) { return {a.re_ / k, a.im_ / k}; }
    friend bool operator==(const Complex& a, const Complex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  private:
    Real re_, im_;
};

Real abs(const Complex& z);
Real arg(const Complex& z);
Complex sqrt(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z);
Complex asinh(const Complex& z);
// e^{i theta}
Complex cis(const Real& theta);
// i*x as a Complex
Complex imag_unit_times(const Real& x);

// w^s = exp(s log w), principal branch. w = 0 handled per the power's sign:
// 0 for Re(s) > 0, domain_error otherwise.
Complex cpow(const Complex& w, const Complex& s);
// Same with a caller-supplied argument of w, so a non-principal branch cut
// (e.g. along arg = pi/4) can be realized: log w = ln|w| + i*angle.
Complex cpow(const Complex& w, const Complex& s, const Real& angle);

} // namespace zetamde
