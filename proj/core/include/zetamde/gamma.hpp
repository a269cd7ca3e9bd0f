#pragma once

#include "zetamde/complex.hpp"
#include "zetamde/context.hpp"

namespace zetamde {

// B_{2k} at the requested precision. Backed by a process-wide cache of exact
// tangent numbers; safe for concurrent readers, extensions are serialized.
Real bernoulli_2k(unsigned k, mpfr_prec_t prec);

// Principal branch of log Gamma(z), continuous on the plane cut along the
// negative real axis. Argument-shift recurrence up to the Stirling threshold
// max(20, working_bits/8), then the Bernoulli asymptotic series.
Complex ln_gamma(const Complex& z, const EvalContext& ctx);

} // namespace zetamde
