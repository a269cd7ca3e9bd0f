#pragma once

#include "zetamde/result.hpp"

namespace zetamde {

struct LerchParams {
    Complex s;
    Real lambda;  // in [0, 1)
    Real a;       // in (0, 1]
};

struct LerchPartDiag {
    long n_main = 0;
    long nodes = 0;
    bool truncation_warning = false;
    std::vector<double> correction_log10;
};

// Saddles, pole counts, contour plans and prefactors of the three-part
// decomposition. Built for Im s <= 0 (the conjugate route handles t > 0).
struct LerchFrame {
    Complex s;
    Real lambda;
    Real a;
    Complex w0, w_minus, w_plus;
    long n0 = 0, n1 = 0, n2 = 0;
    QuadPlan plan_h0, plan_h1, plan_h2;
    Complex pref_h0;  // e^{-i pi a (1+a+2 lambda)}
    Complex p, q, r;  // Hankel-side prefactors, via ln_gamma in log space
    bool lambda_zero = false;
    bool skip_h1 = false;  // H1 <= e^{-pi |t|}: dropped when provably below target
};

LerchFrame lerch_frame(const LerchParams& params, const EvalContext& ctx,
                       const Overrides& ov = {});

// The three contour parts; their sum is L(s, lambda, a). Each returns its
// value with all prefactors applied; *tail receives the part's heuristic
// truncation estimate.
Complex part_h0(const LerchParams& params, const LerchFrame& frame, const EvalContext& ctx,
                LerchPartDiag* diag = nullptr, Real* tail = nullptr);
Complex part_h1(const LerchParams& params, const LerchFrame& frame, const EvalContext& ctx,
                LerchPartDiag* diag = nullptr, Real* tail = nullptr);
Complex part_h2(const LerchParams& params, const LerchFrame& frame, const EvalContext& ctx,
                LerchPartDiag* diag = nullptr, Real* tail = nullptr);

// L(s, lambda, a) = sum e^{2 pi i lambda n} (n+a)^{-s}, continued to the
// whole s plane. lambda = 0 dispatches to hurwitz; Im s > 0 is evaluated as
// conj(L(conj s, 1-lambda, a)); exact positive-integer s (a Gamma(1-s) pole)
// routes to the accelerated series.
EvalResult lerch(const LerchParams& params, const EvalContext& ctx, const Overrides& ov = {});

// zeta(s, a); |Im s| < 2 pi routes to the Euler-Maclaurin fast path, larger
// |t| uses the lambda = 0 contour machinery.
EvalResult hurwitz(const Complex& s, const Real& a, const EvalContext& ctx,
                   const Overrides& ov = {});

} // namespace zetamde
