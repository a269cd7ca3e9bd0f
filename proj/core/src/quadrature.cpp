#include "zetamde/quadrature.hpp"

#include "zetamde/errors.hpp"

namespace zetamde {

QuadPlan plan_params(int target_digits, double alpha, mpfr_prec_t prec) {
    if (target_digits < 1)
        throw domain_error("plan_params: target_digits must be >= 1");
    if (!(alpha > 0.0) || alpha > 1.0)
        throw domain_error("plan_params: alpha must be in (0, 1]");
    Real A = Real(static_cast<long>(target_digits), prec) * const_ln10(prec);
    Real pi = const_pi(prec);
    Real h = pi * pi / (4 * A);
    Real al(alpha, prec);
    Real q = asinh(sqrt(A / (2 * pi * al * al)));
    long m = (q / h).ceil_long();
    h = q / m;
    QuadPlan plan(std::move(h), std::move(q), prec);
    plan.alpha = alpha;
    return plan;
}

Complex phi(const Complex& x, const QuadPlan& plan, Side side) {
    mpfr_prec_t p = x.prec();
    Complex u = x / plan.h.to_prec(p);
    // poles of phi sit at the quadrature nodes (u integer resp. half-integer)
    Real v = plan.rule == Rule::midpoint ? u.re() - Real(0.5, p) : u.re();
    Real frac = v - floor(v + Real(0.5, p));
    Real node_dist = hypot(frac, u.im());
    Real eps(p);
    mpfr_set_ui_2exp(eps.raw(), 1, -static_cast<long>(p) / 2, MPFR_RNDN);
    if (node_dist < eps)
        throw pole_error("phi: evaluation at a quadrature node");
    Real two_pi = 2 * const_pi(p);
    Complex e = exp(Complex(-two_pi * u.im(), two_pi * u.re()));  // e^{2 pi i u}
    Complex den = plan.rule == Rule::simpson ? Complex(1L, p) - e : Complex(1L, p) + e;
    Complex phi_l = -(Complex(1L, p) / den);
    return side == Side::lower ? phi_l : phi_l + 1;
}

Complex phi(const Complex& x, const QuadPlan& plan) {
    return phi(x, plan, x.im().sign() < 0 ? Side::lower : Side::upper);
}

Complex node_sum(const std::function<Complex(const Real&)>& f, const QuadPlan& plan,
                 const EvalContext& ctx, NodeSumStats* stats) {
    const mpfr_prec_t p = ctx.working_bits;
    const long m = plan.steps();
    Real h = plan.h.to_prec(p);
    Complex sum(p);
    Real x(p);
    double edge = -1e300;
    const bool mid = plan.rule == Rule::midpoint;
    const long lo = mid ? -m : -m;
    const long hi = mid ? m - 1 : m;
    for (long n = lo; n <= hi; ++n) {
        if (mid) {
            mpfr_set_si(x.raw(), 2 * n + 1, MPFR_RNDN);
            x /= 2;
            x *= h;
        } else {
            mpfr_mul_si(x.raw(), h.raw(), n, MPFR_RNDN);
        }
        Complex v = f(x);
        if (n == lo || n == hi) {
            double e = abs(v).log10_abs();
            if (e > edge)
                edge = e;
        }
        sum = sum + v;
    }
    sum = sum * h;
    if (stats) {
        stats->nodes = hi - lo + 1;
        stats->edge_log10 = edge;
        stats->truncation_warning = edge > -static_cast<double>(ctx.target_digits);
    }
    return sum;
}

Complex singular_correction(const std::vector<SingularityInfo>& sings, const QuadPlan& plan,
                            std::vector<double>* correction_log10) {
    mpfr_prec_t p = plan.h.prec();
    for (const auto& s : sings)
        if (s.location_x.prec() > p)
            p = s.location_x.prec();
    Complex total(p);
    Real two_pi = 2 * const_pi(p);
    for (const auto& s : sings) {
        Complex w = phi(s.location_x, plan, s.side);
        // 2 pi i * residue * phi
        Complex term = Complex(-two_pi * (s.residue * w).im(), two_pi * (s.residue * w).re());
        if (correction_log10)
            correction_log10->push_back(abs(term).log10_abs());
        total = total + term;
    }
    return total;
}

Real tail_error_estimate(const std::vector<SingularityInfo>& nearest_outside, const QuadPlan& plan) {
    mpfr_prec_t p = plan.h.prec();
    Real total(p);
    Real two_pi = 2 * const_pi(p);
    for (const auto& s : nearest_outside) {
        // |e^{-+2 pi i x/h}| = e^{+-2 pi Im(x)/h}; the sign is the one that
        // decays on the singularity's own side.
        Real expo = two_pi * s.location_x.im() / plan.h.to_prec(p);
        if (s.side == Side::upper)
            expo = -expo;
        total += two_pi * abs(s.residue) * exp(expo);
    }
    return total;
}

} // namespace zetamde
