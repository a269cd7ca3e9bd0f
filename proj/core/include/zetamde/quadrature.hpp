#pragma once

#include <functional>
#include <vector>

#include "zetamde/complex.hpp"
#include "zetamde/context.hpp"

namespace zetamde {

enum class Rule { simpson, midpoint };
enum class Side { upper, lower };

// Parameters of one discretized saddle contour: z(x) = center + alpha *
// direction * sinh(x), summed at x = n*h (simpson) or (n+1/2)*h (midpoint)
// for |x| <= q_cut. q_cut/h is an integer by construction.
struct QuadPlan {
    Real h;
    Real q_cut;
    double alpha = 1.0;
    Rule rule = Rule::simpson;
    int num_sing = 1;
    Complex center;
    Complex direction;

    QuadPlan(Real h_, Real q_, mpfr_prec_t prec)
        : h(std::move(h_)), q_cut(std::move(q_)), center(prec), direction(prec) {}

    long steps() const {  // q_cut/h rounded to the nearest integer
        Real m = q_cut / h;
        return (m + Real(0.5, m.prec())).floor_long();
    }
    long node_count() const { return rule == Rule::simpson ? 2 * steps() + 1 : 2 * steps(); }
    // replace the step count, keeping q_cut fixed (h = q_cut / n)
    void set_steps(long n) { h = q_cut / n; }
    // extend q_cut upward by whole steps of h
    void extend_steps(long extra) { q_cut = q_cut + h * Real(extra, h.prec()); }
};

// h and q_cut from the accuracy A = target_digits * ln 10:
// h = pi^2/(4A), q = asinh(sqrt(A/(2 pi alpha^2))), then h reduced to
// q/ceil(q/h) so an integer number of steps fits exactly.
QuadPlan plan_params(int target_digits, double alpha, mpfr_prec_t prec);

// Correction weight at x (transformed coordinate, contour center at x = 0).
// simpson: phi_L(u) = -1/(1 - e^{2 pi i u}),   u = x/h
// midpoint: phi_L(u) = -1/(1 + e^{2 pi i u})
// phi_U = phi_L + 1 for both rules. phi_L -> 0 below the contour,
// phi_U -> 0 above it.
Complex phi(const Complex& x, const QuadPlan& plan, Side side);
// side selected from sign(Im x): lower iff Im x < 0
Complex phi(const Complex& x, const QuadPlan& plan);

struct SingularityInfo {
    Complex location_x;  // pole position in the transformed coordinate
    Complex residue;     // residue of the x-space integrand there
    Side side;
};

struct NodeSumStats {
    long nodes = 0;
    bool truncation_warning = false;
    double edge_log10 = -1e300;  // log10 |f| at the outermost retained node
};

// h * sum of f over the plan's nodes. The integrand callback owns the
// change of variables and the Jacobian factor.
Complex node_sum(const std::function<Complex(const Real&)>& f, const QuadPlan& plan,
                 const EvalContext& ctx, NodeSumStats* stats = nullptr);

// 2 pi i * sum residue_i * phi(location_i), the central correction term.
Complex singular_correction(const std::vector<SingularityInfo>& sings, const QuadPlan& plan,
                            std::vector<double>* correction_log10 = nullptr);

// Heuristic truncation error from the nearest un-removed singularity on each
// side: |2 pi i e^{-2 pi i x_L/h} res_L| + |2 pi i e^{2 pi i x_U/h} res_U|.
Real tail_error_estimate(const std::vector<SingularityInfo>& nearest_outside, const QuadPlan& plan);

} // namespace zetamde
