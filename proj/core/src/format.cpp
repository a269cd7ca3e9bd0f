#include "zetamde/format.hpp"

#include <cstdlib>

#include "zetamde/errors.hpp"

namespace zetamde {

std::string to_string_sig(const Real& x, int digits) {
    if (digits < 1)
        throw domain_error("to_string_sig: digits must be >= 1");
    if (x.is_zero())
        return "0";
    if (x.is_nan())
        return "nan";
    mpfr_exp_t e;
    char* buf = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), x.raw(), MPFR_RNDN);
    std::string mant(buf);
    mpfr_free_str(buf);
    std::string sign;
    if (!mant.empty() && mant[0] == '-') {
        sign = "-";
        mant.erase(mant.begin());
    }
    // value = 0.mant * 10^e
    std::string out;
    if (e >= -3 && e <= digits + 4) {
        if (e <= 0) {
            out = "0." + std::string(static_cast<size_t>(-e), '0') + mant;
        } else if (static_cast<size_t>(e) >= mant.size()) {
            out = mant + std::string(static_cast<size_t>(e) - mant.size(), '0');
        } else {
            out = mant.substr(0, static_cast<size_t>(e)) + "." + mant.substr(static_cast<size_t>(e));
        }
    } else {
        out = mant.substr(0, 1);
        if (mant.size() > 1)
            out += "." + mant.substr(1);
        out += "e" + std::to_string(e - 1);
    }
    return sign + out;
}

std::string to_string_brief(const Real& x) {
    if (x.is_zero())
        return "0";
    char buf[64];
    mpfr_snprintf(buf, sizeof(buf), "%.1Re", x.raw());
    return buf;
}

Real parse_real(const std::string& text, mpfr_prec_t prec) {
    if (text.empty())
        throw domain_error("empty numeric literal");
    Real r(prec);
    char* end = nullptr;
    mpfr_strtofr(r.raw(), text.c_str(), &end, 10, MPFR_RNDN);
    if (end == nullptr || *end != '\0' || end == text.c_str())
        throw domain_error("malformed numeric literal: " + text);
    return r;
}

Complex parse_complex(const std::string& text, mpfr_prec_t prec) {
    if (text.empty())
        throw domain_error("empty complex literal");
    if (text.back() != 'i') {
        return Complex(parse_real(text, prec));
    }
    // find the sign splitting <re> from <im>i; signs after e/E are exponents
    size_t split = std::string::npos;
    for (size_t i = 1; i + 1 < text.size(); ++i) {
        if ((text[i] == '+' || text[i] == '-') && text[i - 1] != 'e' && text[i - 1] != 'E')
            split = i;
    }
    if (split == std::string::npos)
        throw domain_error("complex literal must be <re>[+|-]<im>i: " + text);
    Real re = parse_real(text.substr(0, split), prec);
    std::string ims = text.substr(split, text.size() - split - 1);
    if (ims == "+" || ims == "-")
        ims += "1";
    Real im = parse_real(ims, prec);
    return {re, im};
}

} // namespace zetamde
