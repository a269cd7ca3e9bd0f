#pragma once

#include <functional>
#include <vector>

#include "zetamde/errors.hpp"
#include "zetamde/quadrature.hpp"
#include "zetamde/result.hpp"

namespace zetamde::detail {

inline Complex mul_i(const Complex& z) { return {-z.im(), z.re()}; }

// caller knobs onto a plan; explicit h is snapped so an integer number of
// steps fits q_cut, per the plan invariant
inline void apply_plan_overrides(QuadPlan& plan, const Overrides& ov, mpfr_prec_t p,
                                 int digits_plan) {
    if (ov.q_cut) {
        if (!(*ov.q_cut > 0))
            throw domain_error("q_cut override must be positive");
        plan.q_cut = Real(*ov.q_cut, p);
        Real h0 = const_pi(p) * const_pi(p) /
                  (4 * Real(static_cast<long>(digits_plan), p) * const_ln10(p));
        plan.set_steps((plan.q_cut / h0).ceil_long());
    }
    if (ov.h) {
        if (!(*ov.h > 0))
            throw domain_error("h override must be positive");
        plan.set_steps((plan.q_cut / Real(*ov.h, p)).ceil_long());
    }
    if (ov.steps) {
        if (*ov.steps < 1)
            throw domain_error("steps override must be >= 1");
        plan.set_steps(*ov.steps);
    }
    if (ov.num_sing) {
        if (*ov.num_sing < 0)
            throw domain_error("num_sing override must be >= 0");
        plan.num_sing = *ov.num_sing;
    }
    if (ov.rule)
        plan.rule = *ov.rule;
}

// x with center + alpha * direction * sinh(x) = w, principal asinh
inline Complex pole_abscissa(const Complex& w, const Complex& center, double alpha,
                             const Complex& direction) {
    mpfr_prec_t p = center.prec();
    Real al(alpha, p);
    return asinh((w - center) / (direction * al));
}

// Switch to the midpoint rule when a pole abscissa falls within h/4 of a
// node of the active rule, then extend q_cut in whole steps of h until the
// integrand magnitude at both edges is below the truncation target. The
// plan's q_cut is left untouched when pinned (explicit q/h/steps override).
inline void finalize_plan(QuadPlan& plan, const std::function<Complex(const Real&)>& f,
                          const std::vector<Complex>& pole_xs, const EvalContext& ctx,
                          bool rule_pinned, bool cutoff_pinned) {
    const mpfr_prec_t p = ctx.working_bits;
    Real h = plan.h.to_prec(p);
    if (!rule_pinned && plan.rule == Rule::simpson) {
        Real quarter = h / 4;
        Real reach = plan.q_cut.to_prec(p) + h;
        for (const auto& x : pole_xs) {
            if (abs(x.im()) >= quarter || abs(x.re()) > reach)
                continue;
            Real n = floor(x.re() / h + Real(0.5, p));
            if (abs(x - Complex(n * h)) < quarter) {
                plan.rule = Rule::midpoint;
                break;
            }
        }
    }
    if (cutoff_pinned)
        return;
    // reference scale off-center, away from nodes and poles
    Real probe = h * Real(0.37, p);
    double scale = std::max(abs(f(probe)).log10_abs(), abs(f(-probe)).log10_abs());
    double target = scale - static_cast<double>(ctx.target_digits + ctx.guard_digits + 5);
    for (int it = 0; it < 48; ++it) {
        Real q = plan.q_cut.to_prec(p);
        double edge = std::max(abs(f(q)).log10_abs(), abs(f(-q)).log10_abs());
        if (edge <= target)
            return;
        long extra = plan.steps() / 6 + 2;
        plan.extend_steps(extra);
    }
}

} // namespace zetamde::detail
