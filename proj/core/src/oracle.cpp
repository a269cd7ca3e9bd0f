#include "zetamde/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "zetamde/errors.hpp"
#include "zetamde/gamma.hpp"

namespace zetamde {

namespace {

Complex cpow_real_base(const Real& base, const Complex& e) {
    return exp(e * Complex(log(base)));
}

} // namespace

Complex em_hurwitz(const Complex& s_in, const Real& a_in, const OracleBudget& budget,
                   const EvalContext& ctx) {
    const mpfr_prec_t p = ctx.working_bits;
    Complex s = s_in.to_prec(p);
    Real a = a_in.to_prec(p);
    if (s.im().is_zero() && s.re() == 1)
        throw pole_error("em_hurwitz: pole at s = 1");
    if (a <= 0 || a > 1)
        throw domain_error("em_hurwitz: a must be in (0, 1]");
    if (abs(s.im()) > Real(100000L, p))
        throw domain_error("em_hurwitz: |Im s| above the cost guard of 1e5");

    const double tol_log10 = -static_cast<double>(budget.digits + 5);
    double abs_t = abs(s.im()).to_double();
    double sigma = s.re().to_double();
    long K = static_cast<long>(std::ceil(1.1513 * (budget.digits + 6))) / 2 + 8;
    K = std::max(K, static_cast<long>(std::ceil((3.0 - sigma) / 2)) + 2);

    for (int attempt = 0; attempt < 8; ++attempt) {
        long M = std::max<long>(20, static_cast<long>(
                                        std::ceil((abs_t + 2.0 * static_cast<double>(K)) *
                                                  2.7182818284590452 / 6.2831853071795865)) +
                                        2);
        if (M > budget.terms_cap)
            throw budget_error("em_hurwitz: term budget exceeded");

        Complex sum(p);
        for (long n = 0; n < M; ++n)
            sum = sum + cpow_real_base(a + Real(n, p), -s);
        Real Ma = a + Real(M, p);
        Complex Ma_c(Ma);
        sum = sum + cpow_real_base(Ma, 1 - s) / (s - 1);
        sum = sum + cpow_real_base(Ma, -s) / 2;

        // tail terms B_{2k}/(2k)! * (s)_{2k-1} * Ma^{1-s-2k}
        Complex poch = s;                                  // (s)_{2k-1}
        Complex w = cpow_real_base(Ma, -s - 1);            // Ma^{1-s-2k}
        Complex ma2inv = Complex(1L, p) / (Ma_c * Ma_c);
        Real fac(2L, p);                                   // (2k)!
        Complex tail(p);
        Complex term(p);
        for (long k = 1; k <= K; ++k) {
            term = poch * w * (bernoulli_2k(static_cast<unsigned>(k), p) / fac);
            tail = tail + term;
            poch = poch * ((s + (2 * k - 1)) * (s + (2 * k)));
            w = w * ma2inv;
            fac *= (2 * k + 1);
            fac *= (2 * k + 2);
        }
        sum = sum + tail;

        // classical remainder bound: |first omitted| * |(s+2K+1)/(sigma+2K+1)|
        Complex omitted = poch * w * (bernoulli_2k(static_cast<unsigned>(K + 1), p) / fac);
        Real ratio = abs(s + (2 * K + 1)) / (s.re() + Real(2 * K + 1, p));
        double bound_log10 = abs(omitted).log10_abs() + ratio.log10_abs();
        if (bound_log10 <= tol_log10)
            return sum;
        K = K + K / 3 + 8;
    }
    throw precision_error("em_hurwitz: remainder bound not reached");
}

Complex direct_series(const Complex& s_in, const OracleBudget& budget, const EvalContext& ctx) {
    const mpfr_prec_t p = ctx.working_bits;
    Complex s = s_in.to_prec(p);
    double sigma = s.re().to_double();
    if (sigma <= 1.02)
        throw domain_error("direct_series(zeta): needs sigma > 1");
    // tail <= M^{1-sigma}/(sigma-1) <= 10^{-digits-5}
    double lm = (static_cast<double>(budget.digits + 5) * 2.302585 - std::log(sigma - 1.0)) /
                (sigma - 1.0);
    if (lm > std::log(static_cast<double>(budget.terms_cap)))
        throw budget_error("direct_series(zeta): term budget exceeded");
    long M = static_cast<long>(std::ceil(std::exp(lm))) + 2;
    Complex sum(p);
    for (long n = 1; n <= M; ++n)
        sum = sum + cpow_real_base(Real(n, p), -s);
    return sum;
}

Complex direct_series(const Complex& s_in, const Real& lambda_in, const Real& a_in,
                      const OracleBudget& budget, const EvalContext& ctx) {
    const mpfr_prec_t p = ctx.working_bits;
    Complex s = s_in.to_prec(p);
    Real a = a_in.to_prec(p);
    if (lambda_in.is_zero()) {
        double sigma = s.re().to_double();
        if (sigma <= 1.02)
            throw domain_error("direct_series(lerch): lambda = 0 needs sigma > 1");
        double lm = (static_cast<double>(budget.digits + 5) * 2.302585 - std::log(sigma - 1.0)) /
                    (sigma - 1.0);
        if (lm > std::log(static_cast<double>(budget.terms_cap)))
            throw budget_error("direct_series(lerch): term budget exceeded");
        long M = static_cast<long>(std::ceil(std::exp(lm))) + 2;
        Complex sum(p);
        for (long n = 0; n <= M; ++n)
            sum = sum + cpow_real_base(a + Real(n, p), -s);
        return sum;
    }
    if (s.re().sign() <= 0)
        throw domain_error("direct_series(lerch): needs sigma > 0");

    // iterated summation-by-parts:
    //   sum_{n>=M} c^n b_n = sum_i c^{M+i} (delta^i b)_M / (1-c)^{i+1}
    //                        + (c/(1-c))^j * sum_{n>=M} c^n (delta^j b)_n
    // with |delta^j b_n| <= |(s)_j| (n+a)^{-sigma-j}.
    double sigma = s.re().to_double();
    double abs_s = abs(s).to_double();
    const double tol_log10 = -static_cast<double>(budget.digits + 5);

    long M = std::max<long>(32, static_cast<long>(std::ceil(2 * abs_s)) + 16);
    for (int attempt = 0; attempt < 8; ++attempt) {
        if (M > budget.terms_cap)
            throw budget_error("direct_series(lerch): term budget exceeded");
        Real lam_p = lambda_in.to_prec(p);
        Complex c0 = cis(2 * const_pi(p) * lam_p);
        double l1c = abs(Complex(1L, p) - c0).log10_abs();
        // pick j: bound = |c/(1-c)|^j |(s)_j| (M+a-1)^{1-sigma-j}/(sigma+j-1)
        long j = 0;
        double lpoch = 0;
        double lM = std::log10(static_cast<double>(M) + sigma - 1.0);
        bool ok = false;
        for (j = 1; j <= 400; ++j) {
            lpoch += std::log10(std::hypot(sigma + (j - 1), abs(s.im()).to_double()));
            double b = -static_cast<double>(j) * l1c + lpoch +
                       (1.0 - sigma - j) * lM - std::log10(sigma + j - 1.0);
            if (b <= tol_log10 - 1) {
                ok = true;
                break;
            }
        }
        if (!ok) {
            M *= 4;
            continue;
        }
        // the j-fold difference table cancels down to |(s)_j| M^{-j} of the
        // term scale and the 1/(1-c)^{i+1} factors amplify its noise, so the
        // tail runs at a precision budgeted for both
        double lost_bits = 3.3219 * (static_cast<double>(j) * (lM - std::log10(std::max(
                                                                         1.0, abs_s))) -
                                     static_cast<double>(j + 1) * l1c) +
                           static_cast<double>(j);
        const mpfr_prec_t hp =
            p + 64 + static_cast<mpfr_prec_t>(std::max(0.0, lost_bits));
        Complex sh = s.to_prec(hp);
        Real ah = a.to_prec(hp);
        Real lam = lambda_in.to_prec(hp);
        Real two_pi_h = 2 * const_pi(hp);
        Complex c = cis(two_pi_h * lam);
        Complex one_minus_c = Complex(1L, hp) - c;

        Complex head(hp);
        for (long n = 0; n < M; ++n)
            head = head + cis(two_pi_h * lam * Real(n, hp)) * exp(-sh * Complex(log(ah + Real(n, hp))));
        // difference table
        std::vector<Complex> d;
        d.reserve(j + 1);
        for (long t = 0; t <= j; ++t)
            d.push_back(exp(-sh * Complex(log(ah + Real(M + t, hp)))));
        Complex tail(hp);
        Complex cpow_i = cis(two_pi_h * lam * Real(M, hp));  // c^{M+i}
        Complex inv1c = Complex(1L, hp) / one_minus_c;
        Complex coef = inv1c;  // 1/(1-c)^{i+1}
        for (long i = 0; i < j; ++i) {
            tail = tail + cpow_i * d[0] * coef;
            for (long t = 0; t + 1 <= j - i; ++t)
                d[t] = d[t + 1] - d[t];
            cpow_i = cpow_i * c;
            coef = coef * inv1c;
        }
        return (head + tail).to_prec(p);
    }
    throw budget_error("direct_series(lerch): could not certify tail");
}

Complex direct_series(const Complex& s_in, const std::vector<Complex>& chi_values,
                      const OracleBudget& budget, const EvalContext& ctx) {
    const mpfr_prec_t p = ctx.working_bits;
    Complex s = s_in.to_prec(p);
    const long m = static_cast<long>(chi_values.size());
    if (m < 1)
        throw domain_error("direct_series(dirichlet): empty character");
    double sigma = s.re().to_double();
    const double tol_log10 = -static_cast<double>(budget.digits + 5);

    // alternating real two-term case (e.g. chi mod 4): certified by the
    // alternating-series bound for sigma > 0
    std::vector<std::pair<long, int>> nz;
    bool real_pm = true;
    for (long n = 0; n < m; ++n) {
        if (chi_values[n].is_zero())
            continue;
        if (!chi_values[n].im().is_zero() || !chi_values[n].re().is_integer())
            real_pm = false;
        nz.emplace_back(n, chi_values[n].re().sign());
    }
    bool alternating = real_pm && nz.size() == 2 && nz[0].second == -nz[1].second;
    if (alternating && sigma > 0.05) {
        double lm = -tol_log10 * 2.302585 / sigma;
        if (lm > std::log(static_cast<double>(budget.terms_cap)))
            throw budget_error("direct_series(dirichlet): term budget exceeded");
        long nmax = static_cast<long>(std::ceil(std::exp(lm))) + 2 * m;
        Complex sum(p);
        bool int_exp = s.im().is_zero() && s.re().is_integer() && s.re() <= 8;
        long e = int_exp ? s.re().floor_long() : 0;
        for (long n = 1; n <= nmax; ++n) {
            long r = n % m;
            if (chi_values[r].is_zero())
                continue;
            if (int_exp) {
                Real t(n, p);
                mpfr_pow_si(t.raw(), t.raw(), -e, MPFR_RNDN);
                sum = sum + chi_values[r] * Complex(t);
            } else {
                sum = sum + chi_values[r] * cpow_real_base(Real(n, p), -s);
            }
        }
        return sum;
    }
    if (sigma <= 1.02)
        throw domain_error("direct_series(dirichlet): needs sigma > 1 for this character");
    // one summation-by-parts step: tail <= m M^{-sigma} (1 + |s|/sigma)
    double abs_s = abs(s).to_double();
    double lm = (-tol_log10 * 2.302585 + std::log(static_cast<double>(m)) +
                 std::log1p(abs_s / sigma)) /
                sigma;
    if (lm > std::log(static_cast<double>(budget.terms_cap)))
        throw budget_error("direct_series(dirichlet): term budget exceeded");
    long M = static_cast<long>(std::ceil(std::exp(lm))) + 2;
    Complex sum(p);
    for (long n = 1; n <= M; ++n) {
        long r = n % m;
        if (chi_values[r].is_zero())
            continue;
        sum = sum + chi_values[r] * cpow_real_base(Real(n, p), -s);
    }
    return sum;
}

int digits_agree(const Complex& x, const Complex& y) {
    const int working =
        static_cast<int>(static_cast<double>(y.prec()) * 0.30102999566398119521);
    Real d = abs(x - y.to_prec(x.prec() > y.prec() ? x.prec() : y.prec()));
    if (d.is_zero())
        return working;
    double scale = std::max(abs(y).log10_abs(), -static_cast<double>(working));
    int val = static_cast<int>(std::floor(-(d.log10_abs() - scale)));
    return std::max(0, std::min(val, working));
}

} // namespace zetamde
