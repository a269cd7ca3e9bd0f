#include <doctest.h>

#include "support/adaptive.hpp"
#include "support/checks.hpp"
#include "zetamde/quadrature.hpp"

using namespace zetamde;
using checks::close_abs;

namespace {

QuadPlan gaussian_plan(double q, long steps, mpfr_prec_t p) {
    QuadPlan plan(Real(q / static_cast<double>(steps), p), Real(q, p), p);
    plan.set_steps(steps);
    return plan;
}

// e^{-2 pi sinh^2 x} cosh x, integral 2^{-1/2} after u = sinh x
Complex gauss_sinh(const Real& x, mpfr_prec_t p) {
    Real sh(p), ch(p);
    sinh_cosh(sh, ch, x);
    return Complex(exp(-2 * const_pi(p) * sh * sh) * ch);
}

} // namespace

TEST_CASE("plan_params reproduces the stated 50-digit numbers") {
    mpfr_prec_t p = 256;
    QuadPlan plan = plan_params(50, 1.0, p);
    // pre-snap h = pi^2/(4 * 50 ln 10) ~ 0.021432; q ~ 2.1606; ~202 nodes
    CHECK(plan.q_cut.to_double() == doctest::Approx(2.160654).epsilon(1e-4));
    CHECK(plan.h.to_double() == doctest::Approx(0.0214317).epsilon(5e-3));
    CHECK(plan.node_count() >= 199);
    CHECK(plan.node_count() <= 207);
    // snapped: an integer number of steps fits exactly
    CHECK((plan.q_cut / plan.h - Real(plan.steps(), p)).log10_abs() < -60);

    QuadPlan plan4 = plan_params(50, 0.25, p);
    CHECK(plan4.q_cut.to_double() == doctest::Approx(3.5346).epsilon(1e-3));

    // doubling digits: h halves, node count grows about linearly
    QuadPlan plan100 = plan_params(100, 1.0, p);
    CHECK(plan100.h.to_double() == doctest::Approx(plan.h.to_double() / 2).epsilon(0.02));
    CHECK(plan100.node_count() > plan.node_count());
    CHECK(plan100.node_count() < 3 * plan.node_count());

    CHECK_THROWS_AS(plan_params(0, 1.0, p), domain_error);
    CHECK_THROWS_AS(plan_params(50, 0.0, p), domain_error);
}

TEST_CASE("phi weights: values, identity, limits") {
    mpfr_prec_t p = 200;
    QuadPlan plan = gaussian_plan(4.0, 16, p);  // h = 0.25

    // simpson at real u = 1/2: phi_L = -1/(1 - e^{i pi}) = -1/2
    Complex x(plan.h / 2);
    close_abs(phi(x, plan, Side::lower), Complex(Real(-0.5, p)), 55, "phi_L(1/2)");

    // phi_U - phi_L = 1 everywhere, both rules
    checks::Rng rng(7001);
    for (auto rule : {Rule::simpson, Rule::midpoint}) {
        plan.rule = rule;
        for (int i = 0; i < 8; ++i) {
            Complex u(Real(rng.uniform(-3, 3), p), Real(rng.uniform(-2, 2), p));
            Complex x_arg = u * plan.h;
            Complex d = phi(x_arg, plan, Side::upper) - phi(x_arg, plan, Side::lower);
            close_abs(d, Complex(1L, p), 55, "phi_U - phi_L");
        }
    }
    plan.rule = Rule::simpson;

    // Im u -> -inf: |phi_L| -> 0; Im u -> +inf: phi_L -> -1
    Complex deep_down(Real(0.3, p), Real(-6.0, p));
    CHECK(abs(phi(deep_down * plan.h, plan, Side::lower)).log10_abs() < -14);
    Complex deep_up(Real(0.3, p), Real(6.0, p));
    close_abs(phi(deep_up * plan.h, plan, Side::lower), Complex(-1L, p), 14, "phi_L upper limit");

    // automatic side selection follows sign(Im)
    Complex below(Real(0.3, p), Real(-0.7, p));
    CHECK(digits_agree(phi(below * plan.h, plan), phi(below * plan.h, plan, Side::lower)) > 50);

    // pole at a node
    CHECK_THROWS_AS(phi(Complex(plan.h), plan, Side::lower), pole_error);
}

TEST_CASE("node_sum: gaussian and zero integrands") {
    EvalContext ctx = EvalContext::make(50);
    mpfr_prec_t p = ctx.working_bits;
    // plan with guard digits, as the function frames do, so the edge
    // magnitude sits well below the warning threshold
    QuadPlan plan = plan_params(50 + ctx.guard_digits, 1.0, p);

    NodeSumStats stats;
    Complex v = node_sum([&](const Real& x) { return gauss_sinh(x, p); }, plan, ctx, &stats);
    Complex expect(Real(1L, p) / sqrt(Real(2L, p)));
    close_abs(v, expect, 50, "gaussian node_sum");
    CHECK(stats.nodes == plan.node_count());
    CHECK_FALSE(stats.truncation_warning);

    Complex z = node_sum([&](const Real&) { return Complex(p); }, plan, ctx);
    CHECK(z.is_zero());

    // truncation diagnostic: a plan cut far too early
    QuadPlan tiny = gaussian_plan(0.5, 8, p);
    node_sum([&](const Real& x) { return gauss_sinh(x, p); }, tiny, ctx, &stats);
    CHECK(stats.truncation_warning);
}

TEST_CASE("node_sum vs adaptive oracle on sech^2") {
    // integral of sech^2 over R is 2; integrand decays only single-
    // exponentially so the window must be wide
    EvalContext ctx = EvalContext::make(30);
    mpfr_prec_t p = ctx.working_bits;
    QuadPlan plan = gaussian_plan(44.0, 440, p);
    auto f = [&](const Real& x) {
        Real c = cosh(x);
        return Complex(1 / (c * c));
    };
    Complex v = node_sum(f, plan, ctx);
    close_abs(v, Complex(2L, p), 30, "sech^2 vs exact");

    checks::AdaptiveSimpson oracle(f, -36.0);
    Complex ref = oracle.integrate(Real(-44L, p), Real(44L, p));
    close_abs(v, ref, 30, "sech^2 vs adaptive");
}

TEST_CASE("singular_correction: empty list and far pole") {
    mpfr_prec_t p = 200;
    QuadPlan plan = gaussian_plan(4.0, 64, p);
    CHECK(singular_correction({}, plan).is_zero());

    // pole far above the contour: |2 pi i rho phi| <= |2 pi rho| |phi| -> 0
    SingularityInfo far{Complex(Real(0.2, p), Real(3.0, p)), Complex(1L, p), Side::upper};
    std::vector<double> mags;
    Complex c = singular_correction({far}, plan, &mags);
    CHECK(abs(c).log10_abs() < -120);
    REQUIRE(mags.size() == 1);
    CHECK(mags[0] < -120);
}

TEST_CASE("synthetic pole: corrected node sum matches the adaptive oracle") {
    // f(x) = e^{-x^2}/(x - p), pole just 0.04 above the axis
    EvalContext ctx = EvalContext::make(20);
    mpfr_prec_t p = 200;
    Complex pole(Real(0.3, p), Real(0.04, p));
    auto f = [&](const Real& x) {
        Complex num(exp(-(x * x)));
        return num / (Complex(x) - pole);
    };
    checks::AdaptiveSimpson oracle(f, -30.0);
    Complex ref = oracle.integrate(Real(-8L, p), Real(8L, p));

    Complex residue = exp(-(pole * pole));
    for (auto rule : {Rule::simpson, Rule::midpoint}) {
        QuadPlan plan = gaussian_plan(8.0, 32, p);  // h = 0.25
        plan.rule = rule;
        Complex raw = node_sum(f, plan, ctx);
        Complex corrected = raw + singular_correction({{pole, residue, Side::upper}}, plan);
        INFO("rule = ", rule == Rule::simpson ? "simpson" : "midpoint");
        // uncorrected is garbage, corrected matches to >= 20 digits
        CHECK(abs(raw - ref).log10_abs() > -2.0);
        close_abs(corrected, ref, 20, "corrected I_h");
    }

    // rule consistency on the same integrand
    QuadPlan ps = gaussian_plan(8.0, 32, p);
    QuadPlan pm = ps;
    pm.rule = Rule::midpoint;
    Complex vs = node_sum(f, ps, ctx) + singular_correction({{pole, residue, Side::upper}}, ps);
    Complex vm = node_sum(f, pm, ctx) + singular_correction({{pole, residue, Side::upper}}, pm);
    CHECK(digits_agree(vs, vm) >= 20);

    // mirrored pole below the contour
    Complex pole_b = pole.conj();
    Complex residue_b = exp(-(pole_b * pole_b));
    QuadPlan pb = gaussian_plan(8.0, 32, p);
    auto fb = [&](const Real& x) { return Complex(exp(-(x * x))) / (Complex(x) - pole_b); };
    checks::AdaptiveSimpson oracle_b(fb, -30.0);
    Complex ref_b = oracle_b.integrate(Real(-8L, p), Real(8L, p));
    Complex vb = node_sum(fb, pb, ctx) + singular_correction({{pole_b, residue_b, Side::lower}}, pb);
    close_abs(vb, ref_b, 20, "pole below");
}

TEST_CASE("tail_error_estimate: empty, direct formula, and a real-error check") {
    mpfr_prec_t p = 200;
    QuadPlan plan = gaussian_plan(8.0, 32, p);
    CHECK(tail_error_estimate({}, plan).is_zero());

    // pole at height d above the contour, residue 1: estimate ~ 2 pi e^{-2 pi d/h}
    Real d(0.6, p);
    SingularityInfo up{Complex(Real(p), d), Complex(1L, p), Side::upper};
    Real est = tail_error_estimate({up}, plan);
    Real expect = 2 * const_pi(p) * exp(-2 * const_pi(p) * d / plan.h);
    CHECK(digits_agree(Complex(est), Complex(expect)) > 40);

    // estimate within two orders of the true residual error of the
    // uncorrected sum for the synthetic pole integrand
    EvalContext ctx = EvalContext::make(20);
    Complex pole(Real(0.3, p), Real(0.5, p));
    auto f = [&](const Real& x) { return Complex(exp(-(x * x))) / (Complex(x) - pole); };
    checks::AdaptiveSimpson oracle(f, -30.0);
    Complex ref = oracle.integrate(Real(-8L, p), Real(8L, p));
    Complex raw = node_sum(f, plan, ctx);
    double true_err = abs(raw - ref).log10_abs();
    double est_err = tail_error_estimate({{pole, exp(-(pole * pole)), Side::upper}}, plan)
                         .log10_abs();
    CHECK(std::abs(true_err - est_err) < 2.0);
}

TEST_CASE("h-halving squares the error on the gaussian integrand") {
    EvalContext ctx = EvalContext::make(120);
    mpfr_prec_t p = ctx.working_bits;
    Complex expect(Real(1L, p) / sqrt(Real(2L, p)));
    double prev_digits = 0;
    for (long steps : {8L, 16L, 32L, 64L}) {
        QuadPlan plan = gaussian_plan(5.2, steps, p);
        Complex v = node_sum([&](const Real& x) { return gauss_sinh(x, p); }, plan, ctx);
        double digits = -abs(v - expect).log10_abs();
        INFO("steps = ", steps, " digits = ", digits);
        if (prev_digits > 3)
            CHECK(digits >= 1.8 * prev_digits);
        prev_digits = digits;
    }
}
