#pragma once

#include "zetamde/result.hpp"

namespace zetamde {

// One Riemann-Siegel frame: saddle r = sqrt(s/(2 pi i)), main-sum length
// N = floor(Re r - Im r), and the residual-integral plan along
// z(x) = center + alpha e^{i pi/4} sinh x.
struct ZetaFrame {
    Complex s;
    Complex r;
    long N = 0;
    Complex center;
    QuadPlan plan;
};

// Build the frame for Im s >= 0 (negative Im is conjugated at top level).
ZetaFrame zeta_frame(const Complex& s, const EvalContext& ctx, const Overrides& ov = {});

// sum_{n=1}^{N} n^{-s}; empty for N = 0
Complex main_sum(const Complex& s, long N, const EvalContext& ctx);

struct ResidualDiag {
    long nodes = 0;
    bool truncation_warning = false;
    std::vector<double> correction_log10;
};

// I_N of the frame: -(node sum + singularity corrections); the tail estimate
// for the frame's un-removed neighbours is written to *tail if given.
Complex residual_corrected(const ZetaFrame& frame, const EvalContext& ctx,
                           ResidualDiag* diag = nullptr, Real* tail = nullptr);

// chi(s) = pi^{s-1/2} Gamma((1-s)/2) / Gamma(s/2), evaluated in log space
Complex chi_factor(const Complex& s, const EvalContext& ctx);

// zeta(s) = I_0(s) + chi(s) conj(I_0(1 - conj s)); small arguments with
// sigma > 1.5 route to the Euler-Maclaurin fast path, sigma < -0.5 through
// the functional equation, Im s < 0 by conjugation.
EvalResult zeta(const Complex& s, const EvalContext& ctx, const Overrides& ov = {});

// The Riemann-Siegel route without the small-argument routing; exposed so the
// machinery can be pinned at small real s in tests.
EvalResult zeta_rs_eval(const Complex& s, const EvalContext& ctx, const Overrides& ov = {});

} // namespace zetamde
