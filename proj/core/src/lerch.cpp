#include "zetamde/lerch.hpp"

#include <cmath>

#include "contour_util.hpp"
#include "zetamde/errors.hpp"
#include "zetamde/gamma.hpp"
#include "zetamde/oracle.hpp"

namespace zetamde {

namespace {

using detail::mul_i;

// residue / (2 pi i)
Complex over_2pi_i(const Complex& z, mpfr_prec_t p) { return -mul_i(z) / (2 * const_pi(p)); }

// w^{e} on the sheet cut along arg = pi/4: points with principal angle
// theta > pi/4 get theta - 2 pi.
Complex wrapped_pow(const Complex& w, const Complex& e, const Real& pi) {
    Real theta = arg(w);
    if (4 * theta > pi)
        theta -= 2 * pi;
    return cpow(w, e, theta);
}

// g0(w) = e^{-i pi w^2 + 2 pi i w (a+lambda)} w^{-s} / (e^{i pi w - 2 i pi a} - e^{-i pi w})
struct H0Integrand {
    Complex s;
    Real apl;       // a + lambda
    Complex center;
    Complex adir;   // alpha * e^{-i pi/4}
    Complex coeff;  // e^{-i pi a (1+a+2 lambda)}
    Complex em2pia; // e^{-2 pi i a}
    Real pi;

    Complex operator()(const Real& x) const {
        mpfr_prec_t p = center.prec();
        Real sh(p), ch(p);
        sinh_cosh(sh, ch, x);
        Complex w = center + adir * sh;
        Complex ex = -(w * w) + 2 * w * Complex(apl);
        Complex num = exp(Complex(-pi * ex.im(), pi * ex.re()));  // e^{i pi (...)}
        Complex E = exp(Complex(-pi * w.im(), pi * w.re()));      // e^{i pi w}
        Complex den = E * em2pia - Complex(1L, p) / E;
        Complex g = num * cpow(w, -s) / den;
        return coeff * g * adir * ch;
    }
};

// g1 = g2 = e^{i pi w^2 + 2 pi i w (a+lambda)} w^{s-1} / (e^{i pi w + 2 pi i lambda} - e^{-i pi w})
// with the wrapped power; coeff carries -q (H1) or +q (H2) and the Jacobian
// direction alpha*e^{i pi/4}.
struct HankelIntegrand {
    Complex sm1;  // s - 1
    Real apl;
    Complex center;
    Complex adir;   // alpha * e^{i pi/4}
    Complex coeff;  // -q or +q
    Complex e2pil;  // e^{2 pi i lambda}
    Real pi;

    Complex operator()(const Real& x) const {
        mpfr_prec_t p = center.prec();
        Real sh(p), ch(p);
        sinh_cosh(sh, ch, x);
        Complex w = center + adir * sh;
        Complex ex = w * w + 2 * w * Complex(apl);
        Complex num = exp(Complex(-pi * ex.im(), pi * ex.re()));
        Complex E = exp(Complex(-pi * w.im(), pi * w.re()));
        Complex den = E * e2pil - Complex(1L, p) / E;
        Complex g = num * wrapped_pow(w, sm1, pi) / den;
        return coeff * g * adir * ch;
    }
};

void validate(const LerchParams& params) {
    if (params.lambda < 0 || params.lambda >= 1)
        throw domain_error("lerch: lambda must be in [0, 1)");
    if (params.a <= 0 || params.a > 1)
        throw domain_error("lerch: a must be in (0, 1]");
}

} // namespace

LerchFrame lerch_frame(const LerchParams& params, const EvalContext& ctx, const Overrides& ov) {
    validate(params);
    const mpfr_prec_t p = ctx.working_bits;
    Complex s = params.s.to_prec(p);
    if (s.im().sign() > 0)
        throw domain_error("lerch_frame: Im s must be <= 0");
    Real lam = params.lambda.to_prec(p);
    Real a = params.a.to_prec(p);
    Real pi = const_pi(p);
    Real two_pi = 2 * pi;

    Real c = (a + lam) / 2;
    Complex two_pi_i(Real(p), two_pi);
    Complex cc(c * c);
    Complex w0 = Complex(c) + sqrt(cc - s / two_pi_i);
    Complex root = sqrt(cc - (s - 1) / two_pi_i);
    Complex wm = -Complex(c) - root;
    Complex wp = -Complex(c) + root;

    long n0 = std::max(0L, (w0.re() - a).floor_long());
    long n1 = std::max(0L, -((wm.re() + lam).floor_long()));
    long n2 = std::max(0L, (wp.re() + lam).floor_long());

    double alpha = ov.alpha ? *ov.alpha : (abs(s.im()) >= 100 ? 1.0 : 0.25);
    const int digits_plan = ctx.target_digits + ctx.guard_digits;
    QuadPlan base = plan_params(digits_plan, alpha, p);
    detail::apply_plan_overrides(base, ov, p, digits_plan);

    LerchFrame frame{s,    lam,  a,    w0,   wm,   wp,  n0,
                     n1,   n2,   base, base, base, Complex(p), Complex(p),
                     Complex(p), Complex(p), params.lambda.is_zero(), false};
    frame.plan_h0.center = w0;
    frame.plan_h0.direction = cis(-pi / 4);
    frame.plan_h1.center = wm;
    frame.plan_h1.direction = cis(pi / 4);
    frame.plan_h2.center = wp;
    frame.plan_h2.direction = cis(pi / 4);

    frame.pref_h0 = cis(-pi * a * (1 + a + 2 * lam));
    Complex lg1s = ln_gamma(1 - s, ctx);
    Complex common = lg1s - (1 - s) * Complex(log(two_pi));
    Complex half_i_pi_1ms = Complex(Real(p), pi / 2) * (1 - s);
    Complex m2pial(Real(p), -two_pi * a * lam);
    frame.q = exp(Complex(Real(p), pi / 2) + Complex(Real(p), pi * lam * (lam + 1)) +
                  Complex(Real(p), pi / 2) * s + common);
    frame.p = exp(half_i_pi_1ms + m2pial + common);
    frame.r = exp(-half_i_pi_1ms + m2pial + common);

    // H1 is suppressed by e^{-pi |t|}; drop it when provably below target.
    double sigma = s.re().to_double();
    double max_term = sigma >= 1.0 ? (sigma - 1.0) * std::log10(static_cast<double>(n1) + 2.0)
                                   : (1.0 - sigma) * std::max(0.0, -lam.log10_abs());
    double sum_bound =
        abs(frame.p).log10_abs() + std::log10(static_cast<double>(n1) + 2.0) + max_term;
    HankelIntegrand f1{s - 1,  a + lam, wm, frame.plan_h1.direction * Real(alpha, p),
                       -frame.q, cis(two_pi * lam), pi};
    double node_bound = abs(f1(frame.plan_h1.h * Real(0.37, p))).log10_abs() + 4;
    if (std::max(sum_bound, node_bound) < -static_cast<double>(digits_plan + 10))
        frame.skip_h1 = true;

    // finalize the three plans: rule switch near nodes, edge-driven cutoff
    bool cutoff_pinned = ov.q_cut || ov.h || ov.steps;
    bool rule_pinned = ov.rule.has_value();
    {
        H0Integrand f0{s, a + lam, w0, frame.plan_h0.direction * Real(alpha, p), frame.pref_h0,
                       cis(-two_pi * a), pi};
        std::vector<Complex> xs;
        for (long k = std::max(0L, n0 - base.num_sing - 1); k <= n0 + base.num_sing + 1; ++k)
            xs.push_back(detail::pole_abscissa(Complex(a + Real(k, p)), w0, alpha,
                                               frame.plan_h0.direction));
        detail::finalize_plan(frame.plan_h0, f0, xs, ctx, rule_pinned, cutoff_pinned);
    }
    if (!frame.skip_h1) {
        long kmin = frame.lambda_zero ? 1 : 0;
        std::vector<Complex> xs;
        for (long k = std::max(kmin, n1 - base.num_sing - 1); k <= n1 + base.num_sing + 1; ++k)
            xs.push_back(detail::pole_abscissa(Complex(-(Real(k, p) + lam)), wm, alpha,
                                               frame.plan_h1.direction));
        detail::finalize_plan(frame.plan_h1, f1, xs, ctx, rule_pinned, cutoff_pinned);
    }
    {
        HankelIntegrand f2{s - 1,  a + lam, wp, frame.plan_h2.direction * Real(alpha, p),
                           frame.q, cis(two_pi * lam), pi};
        std::vector<Complex> xs;
        for (long k = std::max(1L, n2 - base.num_sing - 1); k <= n2 + base.num_sing + 1; ++k)
            xs.push_back(detail::pole_abscissa(Complex(Real(k, p) - lam), wp, alpha,
                                               frame.plan_h2.direction));
        detail::finalize_plan(frame.plan_h2, f2, xs, ctx, rule_pinned, cutoff_pinned);
    }
    return frame;
}

Complex part_h0([[maybe_unused]] const LerchParams& params, const LerchFrame& frame, const EvalContext& ctx,
                LerchPartDiag* diag, Real* tail) {
    const mpfr_prec_t p = ctx.working_bits;
    const QuadPlan& plan = frame.plan_h0;
    Real lam = frame.lambda;
    Real a = frame.a;
    Real two_pi = 2 * const_pi(p);

    auto sum_term = [&](long k) {  // e^{2 pi i lambda k} (k+a)^{-s}
        return cis(two_pi * lam * Real(k, p)) * exp(-frame.s * Complex(log(a + Real(k, p))));
    };

    Complex main(p);
    for (long k = 0; k <= frame.n0; ++k)
        main = main + sum_term(k);

    H0Integrand f{frame.s, a + lam, frame.w0, plan.direction * Real(plan.alpha, p),
                  frame.pref_h0, cis(-two_pi * a), const_pi(p)};
    NodeSumStats stats;
    Complex total = main + node_sum(f, plan, ctx, &stats);

    auto abscissa = [&](long k) {
        return detail::pole_abscissa(Complex(a + Real(k, p)), frame.w0, plan.alpha,
                                     plan.direction);
    };
    std::vector<SingularityInfo> sings;
    for (long k = frame.n0; k >= std::max(0L, frame.n0 - plan.num_sing + 1); --k)
        sings.push_back({abscissa(k), over_2pi_i(sum_term(k), p), Side::lower});
    for (long k = frame.n0 + 1; k <= frame.n0 + plan.num_sing; ++k)
        sings.push_back({abscissa(k), over_2pi_i(sum_term(k), p), Side::upper});
    std::vector<double> mags;
    total = total + singular_correction(sings, plan, &mags);

    if (tail) {
        std::vector<SingularityInfo> next;
        long kl = frame.n0 - plan.num_sing;
        if (kl >= 0)
            next.push_back({abscissa(kl), over_2pi_i(sum_term(kl), p), Side::lower});
        long ku = frame.n0 + plan.num_sing + 1;
        next.push_back({abscissa(ku), over_2pi_i(sum_term(ku), p), Side::upper});
        *tail = tail_error_estimate(next, plan);
    }
    if (diag) {
        diag->n_main = frame.n0 + 1;
        diag->nodes = stats.nodes;
        diag->truncation_warning = stats.truncation_warning;
        diag->correction_log10 = std::move(mags);
    }
    return total;
}

Complex part_h1([[maybe_unused]] const LerchParams& params, const LerchFrame& frame, const EvalContext& ctx,
                LerchPartDiag* diag, Real* tail) {
    const mpfr_prec_t p = ctx.working_bits;
    if (frame.skip_h1) {
        if (tail)
            *tail = Real(p);
        if (diag)
            *diag = {};
        return Complex(p);
    }
    const QuadPlan& plan = frame.plan_h1;
    Real lam = frame.lambda;
    Real a = frame.a;
    Real two_pi = 2 * const_pi(p);
    const long kmin = frame.lambda_zero ? 1 : 0;

    auto sum_term = [&](long k) {  // p e^{-2 pi i a k} (k+lambda)^{s-1}
        return frame.p * cis(-two_pi * a * Real(k, p)) *
               exp((frame.s - 1) * Complex(log(lam + Real(k, p))));
    };

    Complex main(p);
    for (long k = kmin; k <= frame.n1 - 1; ++k)
        main = main + sum_term(k);

    HankelIntegrand f{frame.s - 1, a + lam, frame.w_minus,
                      plan.direction * Real(plan.alpha, p), -frame.q, cis(two_pi * lam),
                      const_pi(p)};
    NodeSumStats stats;
    Complex total = main + node_sum(f, plan, ctx, &stats);

    auto abscissa = [&](long k) {
        return detail::pole_abscissa(Complex(-(lam + Real(k, p))), frame.w_minus, plan.alpha,
                                     plan.direction);
    };
    std::vector<SingularityInfo> sings;
    for (long k = frame.n1 - 1; k >= std::max(kmin, frame.n1 - plan.num_sing); --k)
        sings.push_back({abscissa(k), over_2pi_i(sum_term(k), p), Side::lower});
    long up0 = std::max(kmin, frame.n1);
    for (long k = up0; k <= up0 + plan.num_sing - 1; ++k)
        sings.push_back({abscissa(k), over_2pi_i(sum_term(k), p), Side::upper});
    std::vector<double> mags;
    total = total + singular_correction(sings, plan, &mags);

    if (tail) {
        std::vector<SingularityInfo> next;
        long kl = frame.n1 - plan.num_sing - 1;
        if (kl >= kmin)
            next.push_back({abscissa(kl), over_2pi_i(sum_term(kl), p), Side::lower});
        long ku = up0 + plan.num_sing;
        next.push_back({abscissa(ku), over_2pi_i(sum_term(ku), p), Side::upper});
        *tail = tail_error_estimate(next, plan);
    }
    if (diag) {
        diag->n_main = std::max(0L, frame.n1 - kmin);
        diag->nodes = stats.nodes;
        diag->truncation_warning = stats.truncation_warning;
        diag->correction_log10 = std::move(mags);
    }
    return total;
}

Complex part_h2([[maybe_unused]] const LerchParams& params, const LerchFrame& frame, const EvalContext& ctx,
                LerchPartDiag* diag, Real* tail) {
    const mpfr_prec_t p = ctx.working_bits;
    const QuadPlan& plan = frame.plan_h2;
    Real lam = frame.lambda;
    Real a = frame.a;
    Real two_pi = 2 * const_pi(p);

    auto rho = [&](long k) {  // r e^{2 pi i a k} (k-lambda)^{s-1}
        return frame.r * cis(two_pi * a * Real(k, p)) *
               exp((frame.s - 1) * Complex(log(Real(k, p) - lam)));
    };

    Complex main(p);
    for (long k = 1; k <= frame.n2; ++k)
        main = main + rho(k);

    HankelIntegrand f{frame.s - 1, a + lam, frame.w_plus,
                      plan.direction * Real(plan.alpha, p), frame.q, cis(two_pi * lam),
                      const_pi(p)};
    NodeSumStats stats;
    Complex total = main + node_sum(f, plan, ctx, &stats);

    auto abscissa = [&](long k) {
        return detail::pole_abscissa(Complex(Real(k, p) - lam), frame.w_plus, plan.alpha,
                                     plan.direction);
    };
    // res_F = -r rho_k / (2 pi i)
    std::vector<SingularityInfo> sings;
    for (long k = frame.n2; k >= std::max(1L, frame.n2 - plan.num_sing + 1); --k)
        sings.push_back({abscissa(k), -over_2pi_i(rho(k), p), Side::upper});
    for (long k = frame.n2 + 1; k <= frame.n2 + plan.num_sing; ++k)
        sings.push_back({abscissa(k), -over_2pi_i(rho(k), p), Side::lower});
    std::vector<double> mags;
    total = total + singular_correction(sings, plan, &mags);

    if (tail) {
        std::vector<SingularityInfo> next;
        long ku = frame.n2 - plan.num_sing;
        if (ku >= 1)
            next.push_back({abscissa(ku), -over_2pi_i(rho(ku), p), Side::upper});
        long kl = frame.n2 + plan.num_sing + 1;
        next.push_back({abscissa(kl), -over_2pi_i(rho(kl), p), Side::lower});
        *tail = tail_error_estimate(next, plan);
    }
    if (diag) {
        diag->n_main = frame.n2;
        diag->nodes = stats.nodes;
        diag->truncation_warning = stats.truncation_warning;
        diag->correction_log10 = std::move(mags);
    }
    return total;
}

namespace {

EvalResult lerch_mde(const LerchParams& params, const EvalContext& ctx, const Overrides& ov) {
    const mpfr_prec_t p = ctx.working_bits;
    LerchFrame frame = lerch_frame(params, ctx, ov);
    LerchPartDiag d0, d1, d2;
    Real t0(p), t1(p), t2(p);
    Complex v = part_h0(params, frame, ctx, &d0, &t0) + part_h1(params, frame, ctx, &d1, &t1) +
                part_h2(params, frame, ctx, &d2, &t2);
    EvalResult res(v, t0 + t1 + t2);
    res.n_main = d0.n_main + d1.n_main + d2.n_main;
    res.main_N = frame.n0;
    res.n_nodes = d0.nodes + d1.nodes + d2.nodes;
    res.truncation_warning =
        d0.truncation_warning || d1.truncation_warning || d2.truncation_warning;
    for (auto* d : {&d0, &d1, &d2})
        res.correction_log10.insert(res.correction_log10.end(), d->correction_log10.begin(),
                                    d->correction_log10.end());
    res.route = "mde";
    return res;
}

} // namespace

EvalResult lerch(const LerchParams& params, const EvalContext& ctx, const Overrides& ov) {
    validate(params);
    const mpfr_prec_t p = ctx.working_bits;
    Complex s = params.s.to_prec(p);
    Real lam = params.lambda.to_prec(p);
    Real a = params.a.to_prec(p);

    if (lam.is_zero())
        return hurwitz(s, a, ctx, ov);
    if (s.im().sign() > 0) {
        EvalResult r = lerch({s.conj(), 1 - lam, a}, ctx, ov);
        r.value = r.value.conj();
        return r;
    }
    if (s.im().is_zero() && s.re().is_integer() && s.re().sign() > 0) {
        // Gamma(1-s) pole in the contour prefactors
        OracleBudget budget{20000000L, ctx.target_digits};
        EvalResult r(direct_series(s, lam, a, budget, ctx), pow10(-(ctx.target_digits + 5), p));
        r.route = "series-sbp";
        return r;
    }
    return lerch_mde({s, lam, a}, ctx, ov);
}

EvalResult hurwitz(const Complex& s_in, const Real& a_in, const EvalContext& ctx,
                   const Overrides& ov) {
    const mpfr_prec_t p = ctx.working_bits;
    Complex s = s_in.to_prec(p);
    Real a = a_in.to_prec(p);
    if (a <= 0 || a > 1)
        throw domain_error("hurwitz: a must be in (0, 1]");
    if (s.im().is_zero() && s.re() == 1)
        throw pole_error("hurwitz: pole at s = 1");
    if (s.im().sign() > 0) {
        EvalResult r = hurwitz(s.conj(), a, ctx, ov);
        r.value = r.value.conj();
        return r;
    }
    if (abs(s.im()) < 2 * const_pi(p)) {
        OracleBudget budget{200000000L, ctx.target_digits + 2};
        EvalResult r(em_hurwitz(s, a, budget, ctx), pow10(-(ctx.target_digits + 5), p));
        r.route = "euler-maclaurin";
        return r;
    }
    return lerch_mde({s, Real(p), a}, ctx, ov);
}

} // namespace zetamde
