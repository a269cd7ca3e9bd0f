#pragma once

#include <string>

#include "zetamde/complex.hpp"

namespace zetamde {

// x rendered to exactly `digits` significant digits (positional when the
// exponent is moderate, scientific otherwise).
std::string to_string_sig(const Real& x, int digits);

// short scientific form for error magnitudes, e.g. "3.2e-61"
std::string to_string_brief(const Real& x);

// Command-line complex literal: <re>[+|-]<im>i with scientific notation
// permitted and no spaces (e.g. "0.6-1e8i", "2", "-1.5e2+0i").
Complex parse_complex(const std::string& text, mpfr_prec_t prec);

Real parse_real(const std::string& text, mpfr_prec_t prec);

} // namespace zetamde
