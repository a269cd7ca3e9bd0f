#pragma once

#include <vector>

#include "zetamde/complex.hpp"
#include "zetamde/context.hpp"

namespace zetamde {

struct OracleBudget {
    long terms_cap;
    int digits;
};

// Euler-Maclaurin Hurwitz zeta: used only for testing and as the
// small-argument fast path. Cost scales with |Im s|, so callers keep
// |Im s| <= 1e5. The remainder bound is certified <= 10^{-digits-5}.
Complex em_hurwitz(const Complex& s, const Real& a, const OracleBudget& budget,
                   const EvalContext& ctx);

// Truncated series with certified tail bounds (<= 10^{-digits-5}).
// zeta: plain sum, sigma > 1
Complex direct_series(const Complex& s, const OracleBudget& budget, const EvalContext& ctx);
// lerch: plain sum for lambda = 0 (sigma > 1); iterated summation-by-parts
// for lambda != 0 (works for any sigma > 0, including s on the positive
// integers where the contour machinery degenerates)
Complex direct_series(const Complex& s, const Real& lambda, const Real& a,
                      const OracleBudget& budget, const EvalContext& ctx);
// dirichlet: alternating-series bound for two-term real characters at
// sigma > 0, otherwise one summation-by-parts step at sigma > 1
Complex direct_series(const Complex& s, const std::vector<Complex>& chi_values,
                      const OracleBudget& budget, const EvalContext& ctx);

// floor(-log10(|x-y| / max(|y|, 10^{-working}))), clamped to [0, working]
// where working is the decimal precision of y.
int digits_agree(const Complex& x, const Complex& y);

} // namespace zetamde
