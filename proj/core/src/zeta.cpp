#include "zetamde/zeta.hpp"

#include "contour_util.hpp"
#include "zetamde/errors.hpp"
#include "zetamde/gamma.hpp"
#include "zetamde/oracle.hpp"

namespace zetamde {

namespace {

using detail::mul_i;

// F(x) = -g(z(x)) * alpha*eps*cosh(x) with g(z) = e^{i pi z^2} z^{-s} / (e^{i pi z} - e^{-i pi z});
// the leading minus carries the descending contour orientation.
struct ZetaIntegrand {
    Complex s;
    Complex center;
    Complex aeps;  // alpha * e^{i pi/4}
    Real pi;

    Complex operator()(const Real& x) const {
        mpfr_prec_t p = center.prec();
        Real sh(p), ch(p);
        sinh_cosh(sh, ch, x);
        Complex z = center + aeps * sh;
        Complex z2 = z * z;
        Complex num = exp(Complex(-pi * z2.im(), pi * z2.re()));  // e^{i pi z^2}
        Complex E = exp(Complex(-pi * z.im(), pi * z.re()));      // e^{i pi z}
        Complex den = E - Complex(1L, p) / E;
        Complex g = num * cpow(z, -s) / den;
        return -(g * aeps * ch);
    }
};

// Residue of the zeta x-space integrand at the pole over z = j:
// Res_x[F] = -j^{-s}/(2 pi i) = i j^{-s} / (2 pi)
Complex zeta_residue(long j, const Complex& s, mpfr_prec_t p) {
    Complex t = cpow(Complex(j, p), -s);
    return mul_i(t) / (2 * const_pi(p));
}

} // namespace

ZetaFrame zeta_frame(const Complex& s_in, const EvalContext& ctx, const Overrides& ov) {
    const mpfr_prec_t p = ctx.working_bits;
    Complex s = s_in.to_prec(p);
    if (s.im().is_zero() && s.re() == 1)
        throw pole_error("zeta: pole at s = 1");
    if (s.im().sign() < 0)
        throw domain_error("zeta_frame: Im s must be >= 0");

    Real two_pi = 2 * const_pi(p);
    Complex r = sqrt(s / Complex(Real(p), two_pi));  // sqrt(s/(2 pi i))
    Real X = r.re() - r.im();
    long N = std::max(0L, X.floor_long());

    double alpha = ov.alpha ? *ov.alpha : (abs(s.im()) >= 100 ? 1.0 : 0.25);
    const int digits_plan = ctx.target_digits + ctx.guard_digits;
    QuadPlan plan = plan_params(digits_plan, alpha, p);
    detail::apply_plan_overrides(plan, ov, p, digits_plan);

    CenterPolicy policy = ov.center.value_or(CenterPolicy::automatic);
    bool half = policy == CenterPolicy::halfinteger;
    if (policy == CenterPolicy::automatic) {
        // recenter when the crossing sits near the z = 0 branch point or an
        // integer (pole on the contour)
        Real frac = X - floor(X);
        half = X < Real(0.25, p) || frac < Real(0.05, p) || frac > Real(0.95, p);
    }
    Complex center = half ? Complex(Real(N, p) + Real(0.5, p)) : r;

    plan.center = center;
    plan.direction = cis(const_pi(p) / 4);

    ZetaFrame frame{s, r, N, center, plan};

    ZetaIntegrand f{s, center, plan.direction * Real(alpha, p), const_pi(p)};
    std::vector<Complex> pole_xs;
    for (long j = std::max(1L, N - plan.num_sing - 1); j <= N + plan.num_sing + 1; ++j)
        pole_xs.push_back(detail::pole_abscissa(Complex(j, p), center, alpha, plan.direction));
    bool cutoff_pinned = ov.q_cut || ov.h || ov.steps;
    detail::finalize_plan(frame.plan, f, pole_xs, ctx, ov.rule.has_value(), cutoff_pinned);
    return frame;
}

Complex main_sum(const Complex& s_in, long N, const EvalContext& ctx) {
    const mpfr_prec_t p = ctx.working_bits;
    Complex s = s_in.to_prec(p);
    Complex sum(p);
    for (long n = 1; n <= N; ++n)
        sum = sum + exp(Complex(-s.re(), -s.im()) * log(Real(n, p)));
    return sum;
}

Complex residual_corrected(const ZetaFrame& frame, const EvalContext& ctx, ResidualDiag* diag,
                           Real* tail) {
    const mpfr_prec_t p = ctx.working_bits;
    const QuadPlan& plan = frame.plan;
    double alpha = plan.alpha;
    ZetaIntegrand f{frame.s, frame.center, plan.direction * Real(alpha, p), const_pi(p)};

    NodeSumStats stats;
    Complex total = node_sum(f, plan, ctx, &stats);

    // poles of g at z = j >= 1; j <= N lie above the contour
    std::vector<SingularityInfo> sings;
    for (long j = frame.N; j >= std::max(1L, frame.N - plan.num_sing + 1); --j)
        sings.push_back({detail::pole_abscissa(Complex(j, p), frame.center, alpha, plan.direction),
                         zeta_residue(j, frame.s, p), Side::upper});
    for (long j = frame.N + 1; j <= frame.N + plan.num_sing; ++j)
        sings.push_back({detail::pole_abscissa(Complex(j, p), frame.center, alpha, plan.direction),
                         zeta_residue(j, frame.s, p), Side::lower});
    std::vector<double> mags;
    total = total + singular_correction(sings, plan, &mags);

    if (tail) {
        std::vector<SingularityInfo> next;
        long ju = frame.N - plan.num_sing;
        if (ju >= 1)
            next.push_back({detail::pole_abscissa(Complex(ju, p), frame.center, alpha, plan.direction),
                            zeta_residue(ju, frame.s, p), Side::upper});
        long jl = frame.N + plan.num_sing + 1;
        next.push_back({detail::pole_abscissa(Complex(jl, p), frame.center, alpha, plan.direction),
                        zeta_residue(jl, frame.s, p), Side::lower});
        *tail = tail_error_estimate(next, plan);
    }
    if (diag) {
        diag->nodes = stats.nodes;
        diag->truncation_warning = stats.truncation_warning;
        diag->correction_log10 = std::move(mags);
    }
    return total;
}

Complex chi_factor(const Complex& s_in, const EvalContext& ctx) {
    const mpfr_prec_t p = ctx.working_bits;
    Complex s = s_in.to_prec(p);
    Complex half(Real(0.5, p));
    Complex ln_chi = (s - half) * Complex(log(const_pi(p))) + ln_gamma((1 - s) / 2, ctx) -
                     ln_gamma(s / 2, ctx);
    return exp(ln_chi);
}

EvalResult zeta_rs_eval(const Complex& s_in, const EvalContext& ctx, const Overrides& ov) {
    const mpfr_prec_t p = ctx.working_bits;
    Complex s = s_in.to_prec(p);

    ZetaFrame f1 = zeta_frame(s, ctx, ov);
    ZetaFrame f2 = zeta_frame(1 - s.conj(), ctx, ov);

    ResidualDiag d1, d2;
    Real t1(p), t2(p);
    Complex i0_s = main_sum(s, f1.N, ctx) + residual_corrected(f1, ctx, &d1, &t1);
    Complex i0_c = main_sum(f2.s, f2.N, ctx) + residual_corrected(f2, ctx, &d2, &t2);
    Complex chi = chi_factor(s, ctx);
    EvalResult res(i0_s + chi * i0_c.conj(), t1 + abs(chi) * t2);
    res.n_main = f1.N + f2.N;
    res.main_N = f1.N;
    res.n_nodes = d1.nodes + d2.nodes;
    res.truncation_warning = d1.truncation_warning || d2.truncation_warning;
    res.correction_log10 = d1.correction_log10;
    res.correction_log10.insert(res.correction_log10.end(), d2.correction_log10.begin(),
                                d2.correction_log10.end());
    res.route = "rs";
    return res;
}

EvalResult zeta(const Complex& s_in, const EvalContext& ctx, const Overrides& ov) {
    const mpfr_prec_t p = ctx.working_bits;
    Complex s = s_in.to_prec(p);

    if (s.im().is_zero()) {
        if (s.re() == 1)
            throw pole_error("zeta: pole at s = 1");
        if (s.re().is_zero()) {
            EvalResult r{Complex(Real(-0.5, p)), Real(p)};
            r.route = "special";
            return r;
        }
        if (s.re().is_integer() && s.re().sign() < 0) {
            Real half_s = s.re() / 2;
            if (half_s.is_integer()) {  // trivial zero
                EvalResult r{Complex(p), Real(p)};
                r.route = "special";
                return r;
            }
        }
    }
    if (s.im().sign() < 0) {
        EvalResult r = zeta(s.conj(), ctx, ov);
        r.value = r.value.conj();
        return r;
    }
    Real two_pi = 2 * const_pi(p);
    if (s.re() > Real(1.5, p) && abs(s.im()) < two_pi) {
        OracleBudget budget{200000000L, ctx.target_digits + 2};
        EvalResult r(em_hurwitz(s, Real(1L, p), budget, ctx),
                     pow10(-(ctx.target_digits + 5), p));
        r.route = "euler-maclaurin";
        return r;
    }
    if (s.re() < Real(-0.5, p)) {
        EvalResult inner = zeta(1 - s, ctx, ov);
        Complex chi = chi_factor(s, ctx);
        EvalResult r(chi * inner.value, abs(chi) * inner.err_estimate);
        r.n_main = inner.n_main;
        r.n_nodes = inner.n_nodes;
        r.main_N = inner.main_N;
        r.truncation_warning = inner.truncation_warning;
        r.correction_log10 = inner.correction_log10;
        r.route = inner.route + "+reflection";
        return r;
    }
    return zeta_rs_eval(s, ctx, ov);
}

} // namespace zetamde
