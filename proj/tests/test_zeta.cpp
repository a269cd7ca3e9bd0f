#include <doctest.h>

#include "support/checks.hpp"
#include "zetamde/oracle.hpp"
#include "zetamde/zeta.hpp"

using namespace zetamde;
using checks::close_abs;

TEST_CASE("zeta_frame: saddle, N and crossing") {
    EvalContext ctx = EvalContext::make(50);
    mpfr_prec_t p = ctx.working_bits;

    // s = 0.5 + 1000i: r ~ 12.6157 - 0.00315i, N = 12
    ZetaFrame f = zeta_frame(Complex(Real(0.5, p), Real(1000L, p)), ctx);
    CHECK(f.r.re().to_double() == doctest::Approx(12.6157).epsilon(1e-4));
    CHECK(f.r.im().to_double() == doctest::Approx(-0.003154).epsilon(1e-2));
    CHECK(f.N == 12);
    // crossing strictly between N and N+1
    Real xing = f.center.re() - f.center.im();
    CHECK(xing.to_double() > 12.0);
    CHECK(xing.to_double() < 13.0);

    // sigma = 4, t = 0: N = floor(2 sqrt(2/(4 pi))) = 1
    ZetaFrame f2 = zeta_frame(Complex(4L, p), ctx);
    CHECK(f2.N == 1);

    // t = 2 pi 1e4: Re r ~ 100, N in {99, 100} depending on sigma
    Real t = 2 * const_pi(p) * Real(10000L, p);
    ZetaFrame fa = zeta_frame(Complex(Real(0.4, p), t), ctx);
    ZetaFrame fb = zeta_frame(Complex(Real(-0.3, p), t), ctx);
    CHECK(fa.r.re().to_double() == doctest::Approx(100.0).epsilon(1e-6));
    CHECK((fa.N == 99 || fa.N == 100));
    CHECK((fb.N == 99 || fb.N == 100));
    CHECK(fa.N + fb.N == 199);  // the Im r term separates them

    // alpha policy: 1 above |t| = 100, 1/4 below
    CHECK(zeta_frame(Complex(Real(0.5, p), Real(500L, p)), ctx).plan.alpha == 1.0);
    CHECK(zeta_frame(Complex(Real(0.5, p), Real(50L, p)), ctx).plan.alpha == 0.25);

    CHECK_THROWS_AS(zeta_frame(Complex(1L, p), ctx), pole_error);
    CHECK_THROWS_AS(zeta_frame(Complex(Real(0.5, p), Real(-3.0, p)), ctx), domain_error);
}

TEST_CASE("main_sum") {
    EvalContext ctx = EvalContext::make(40);
    mpfr_prec_t p = ctx.working_bits;
    CHECK(main_sum(Complex(2L, p), 0, ctx).is_zero());
    // N=2, s=2: 1 + 1/4 = 1.25
    close_abs(main_sum(Complex(2L, p), 2, ctx), Complex(Real(1.25, p)), 55, "1+1/4");
    // re-summation oracle at doubled precision
    EvalContext hi = EvalContext::make(80);
    Complex s(Real(2.0, hi.working_bits), Real(10.0, hi.working_bits));
    Complex lo_sum = main_sum(s.to_prec(ctx.working_bits), 1000, ctx);
    Complex hi_sum = main_sum(s, 1000, hi);
    CHECK(digits_agree(lo_sum, hi_sum) >= 55);
}

TEST_CASE("residual endpoint: RS machinery at s = 2 gives pi^2/6") {
    EvalContext ctx = EvalContext::make(50);
    mpfr_prec_t p = ctx.working_bits;
    EvalResult r = zeta_rs_eval(Complex(2L, p), ctx);
    Real pi = const_pi(p);
    close_abs(r.value, Complex(pi * pi / 6), 50, "zeta_rs(2)");
}

TEST_CASE("zeta: known value and em-oracle spot checks") {
    EvalContext ctx = EvalContext::make(50);
    mpfr_prec_t p = ctx.working_bits;
    Real pi = const_pi(p);
    close_abs(zeta(Complex(2L, p), ctx).value, Complex(pi * pi / 6), 50, "zeta(2)");

    // special values
    close_abs(zeta(Complex(0L, p), ctx).value, Complex(Real(-0.5, p)), 60, "zeta(0)");
    CHECK(zeta(Complex(-2L, p), ctx).value.is_zero());
    CHECK(zeta(Complex(-8L, p), ctx).value.is_zero());
    CHECK_THROWS_AS(zeta(Complex(1L, p), ctx), pole_error);

    // zeta(0.6 + 1e4 i) against the Euler-Maclaurin oracle to 100 digits
    EvalContext c100 = EvalContext::make(100);
    Complex s(Real(0.6, c100.working_bits), Real(10000L, c100.working_bits));
    EvalResult v = zeta(s, c100);
    Complex ref = em_hurwitz(s, Real(1L, c100.working_bits), {20000000, 105}, c100);
    close_abs(v.value, ref, 100, "zeta(0.6+1e4i)");
    CHECK(v.err_estimate.log10_abs() < -100.0);

    // direct series at s = 3 + 1e5 i; the certified tail bound supports 7
    // digits within a 1e6-term budget (30 digits would need ~1e16 terms)
    EvalContext c30 = EvalContext::make(30);
    Complex s3(Real(3.0, c30.working_bits), Real(100000L, c30.working_bits));
    Complex ds = direct_series(s3, {2000000, 7}, c30);
    close_abs(zeta(s3, c30).value, ds, 7, "zeta(3+1e5i) vs direct");
}

TEST_CASE("zeta: conjugation symmetry is exact") {
    EvalContext ctx = EvalContext::make(40);
    mpfr_prec_t p = ctx.working_bits;
    Complex s(Real(0.7, p), Real(321.5, p));
    Complex a = zeta(s, ctx).value;
    Complex b = zeta(s.conj(), ctx).value;
    CHECK(a.re() == b.re());   // bit-for-bit
    CHECK(a.im() == -b.im());
}

TEST_CASE("zeta: functional-equation self-consistency") {
    EvalContext ctx = EvalContext::make(50);
    mpfr_prec_t p = ctx.working_bits;
    checks::Rng rng(9001);
    for (int i = 0; i < 4; ++i) {
        Complex s(Real(rng.uniform(0.05, 0.95), p), Real(rng.uniform(10.0, 800.0), p));
        Complex lhs = zeta(s, ctx).value;
        Complex rhs = chi_factor(s, ctx) * zeta(1 - s, ctx).value;
        INFO("s = ", to_string_sig(s.re(), 6), "+", to_string_sig(s.im(), 8), "i");
        CHECK(digits_agree(lhs, rhs) >= 50);
    }
}

TEST_CASE("zeta: oracle grid subset across the strip") {
    // acceptance runs the full grid; here a representative slice
    for (int digits : {10, 50}) {
        EvalContext ctx = EvalContext::make(digits);
        mpfr_prec_t p = ctx.working_bits;
        for (double sigma : {0.0, 0.5, 1.0}) {
            for (double t : {1.0, 100.0, 10000.0}) {
                Complex s(Real(sigma, p), Real(t, p));
                Complex v = zeta(s, ctx).value;
                Complex ref = em_hurwitz(s, Real(1L, p), {20000000, digits + 5}, ctx);
                INFO("sigma=", sigma, " t=", t, " digits=", digits);
                CHECK(abs(v - ref).log10_abs() <= -static_cast<double>(digits));
            }
        }
    }
}

TEST_CASE("zeta: routing edges (sigma < -0.5, real s in (1, 1.5], reflection)") {
    EvalContext ctx = EvalContext::make(50);
    mpfr_prec_t p = ctx.working_bits;
    // sigma < -0.5 goes through the functional equation
    Complex s(Real(-3.7, p), Real(2.2, p));
    EvalResult r = zeta(s, ctx);
    Complex ref = chi_factor(s, ctx) * zeta(1 - s, ctx).value;
    CHECK(digits_agree(r.value, ref) >= 50);

    // real s = 1.2: second frame crosses the branch point, saved by the
    // half-integer recenter; check against em
    Complex s12(Real(1.2, p));
    Complex ref12 = em_hurwitz(s12, Real(1L, p), {2000000, 55}, ctx);
    close_abs(zeta_rs_eval(s12, ctx).value, ref12, 50, "rs at s=1.2");

    // odd negative integer via reflection: zeta(-3) = 1/120
    close_abs(zeta(Complex(-3L, p), ctx).value, Complex(Real(1L, p) / 120), 50, "zeta(-3)");
}

TEST_CASE("zeta: main-sum length scaling") {
    EvalContext ctx = EvalContext::make(50);
    mpfr_prec_t p = ctx.working_bits;
    for (double t : {1e4, 1e6, 1e8}) {
        ZetaFrame f = zeta_frame(Complex(Real(0.6, p), Real(t, p)), ctx);
        double expect = std::sqrt(t / (2 * 3.14159265358979));
        INFO("t = ", t, " N = ", f.N, " sqrt(t/2pi) = ", expect);
        CHECK(std::abs(static_cast<double>(f.N) - expect) <= 2.0);
    }
}

TEST_CASE("zeta: h-halving digit-doubling at moderate size") {
    // acceptance runs the CLI verify mode at 1e6/300 digits; here the same
    // nesting logic at s = 0.6 + 1e4 i and 60 digits
    EvalContext ref_ctx = EvalContext::make(120);
    Complex s(Real(0.6, ref_ctx.working_bits), Real(10000L, ref_ctx.working_bits));
    Complex ref = zeta(s, ref_ctx).value;

    EvalContext ctx = EvalContext::make(60);
    QuadPlan base = plan_params(80, 1.0, ctx.working_bits);
    double prev = 0;
    bool doubled = true;
    for (long j = 0; j < 4; ++j) {
        Overrides ov;
        ov.q_cut = base.q_cut.to_double();
        ov.steps = 10L << j;
        Complex v = zeta(s.to_prec(ctx.working_bits), ctx, ov).value;
        double digits = -abs(v - ref.to_prec(ref_ctx.working_bits)).log10_abs();
        INFO("steps = ", 10L << j, " digits = ", digits);
        if (j > 0 && prev > 10 && digits < 70.0)
            doubled = doubled && digits >= 1.8 * prev;
        prev = digits;
    }
    CHECK(doubled);
}

TEST_CASE("near-pole contour engages the midpoint rule and stays accurate") {
    // tune t so the contour crossing sits ~2e-3 past an integer, then force
    // the saddle center so the automatic recenter cannot rescue it
    EvalContext ctx = EvalContext::make(50);
    mpfr_prec_t p = ctx.working_bits;
    double lo = 9900.0, hi = 10200.0;
    auto crossing = [&](double t) {
        Complex s(Real(0.5, p), Real(t, p));
        Complex r = sqrt(s / Complex(Real(p), 2 * const_pi(p)));
        return (r.re() - r.im()).to_double();
    };
    double target = std::floor(crossing(lo)) + 1.002;
    for (int i = 0; i < 60; ++i) {
        double mid = (lo + hi) / 2;
        (crossing(mid) < target ? lo : hi) = mid;
    }
    Complex s(Real(0.5, p), Real(lo, p));
    Overrides ov;
    ov.center = CenterPolicy::saddle;
    ZetaFrame f = zeta_frame(s, ctx, ov);
    CHECK(f.plan.rule == Rule::midpoint);
    Complex v = zeta(s, ctx, ov).value;
    Complex ref = em_hurwitz(s, Real(1L, p), {20000000, 55}, ctx);
    close_abs(v, ref, 50, "near-pole contour");
}
