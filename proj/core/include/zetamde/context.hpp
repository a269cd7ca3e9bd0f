#pragma once

#include <mpfr.h>

#include "zetamde/errors.hpp"

namespace zetamde {

// Target accuracy plus guard digits; all internal temporaries of an
// evaluation run at working_bits. Precision is always explicit and
// caller-supplied, never ambient.
struct EvalContext {
    int target_digits;
    int guard_digits;
    mpfr_prec_t working_bits;

    static EvalContext make(int digits, int guard = 20) {
        if (digits < 1)
            throw domain_error("target_digits must be >= 1");
        if (guard < 1)
            throw domain_error("guard_digits must be >= 1");
        EvalContext ctx;
        ctx.target_digits = digits;
        ctx.guard_digits = guard;
        // ceil((digits+guard)*log2(10)), floored at ceil(digits*log2(10))+64
        const double lg = 3.3219280948873623;
        auto bits = static_cast<mpfr_prec_t>(static_cast<double>(digits + guard) * lg) + 1;
        auto floor_bits = static_cast<mpfr_prec_t>(static_cast<double>(digits) * lg) + 1 + 64;
        ctx.working_bits = bits > floor_bits ? bits : floor_bits;
        return ctx;
    }

    // decimal digits representable at working_bits
    int working_digits() const {
        return static_cast<int>(static_cast<double>(working_bits) * 0.30102999566398119521);
    }
};

} // namespace zetamde
