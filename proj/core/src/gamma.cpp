#include "zetamde/gamma.hpp"

#include <gmp.h>

#include <mutex>
#include <vector>

#include "zetamde/errors.hpp"

namespace zetamde {

namespace {

// Exact tangent numbers T_1, T_2, ... via the integer triangle recurrence
// (Brent & Zimmermann); B_{2k} = (-1)^{k+1} * 2k * T_k / (4^k * (4^k - 1) / 3)
// ... concretely |B_{2k}| = 2k T_k / (2^{2k} (2^{2k} - 1)).
class BernoulliCache {
  public:
    Real get(unsigned k, mpfr_prec_t prec) {
        std::lock_guard<std::mutex> lock(mu_);
        if (k == 0)
            return Real(1L, prec);
        if (k > tangent_.size())
            extend(k);
        Real num(prec);
        mpfr_set_z(num.raw(), tangent_[k - 1], MPFR_RNDN);
        num *= static_cast<long>(2 * k);
        mpz_t den;
        mpz_init_set_ui(den, 1);
        mpz_mul_2exp(den, den, 2 * k);  // 2^{2k}
        mpz_t den2;
        mpz_init_set(den2, den);
        mpz_sub_ui(den2, den2, 1);
        mpz_mul(den, den, den2);
        Real d(prec);
        mpfr_set_z(d.raw(), den, MPFR_RNDN);
        mpz_clear(den);
        mpz_clear(den2);
        num /= d;
        if (k % 2 == 0)
            num = -num;
        return num;
    }

    ~BernoulliCache() {
        for (auto& z : tangent_)
            mpz_clear(z);
    }

  private:
    void extend(unsigned n) {
        n = n + n / 2 + 8;  // grow geometrically, the triangle is O(n^2)
        std::vector<mpz_t> t(n);
        for (unsigned i = 0; i < n; ++i)
            mpz_init(t[i]);
        mpz_set_ui(t[0], 1);
        for (unsigned k = 2; k <= n; ++k) {
            mpz_mul_ui(t[k - 1], t[k - 2], k - 1);
        }
        for (unsigned k = 2; k <= n; ++k) {
            for (unsigned j = k; j <= n; ++j) {
                // T[j] = (j-k)*T[j-1] + (j-k+2)*T[j]
                mpz_mul_ui(t[j - 1], t[j - 1], j - k + 2);
                mpz_addmul_ui(t[j - 1], t[j - 2], j - k);
            }
        }
        for (auto& z : tangent_)
            mpz_clear(z);
        tangent_ = std::move(t);
    }

    std::mutex mu_;
    std::vector<mpz_t> tangent_;
};

BernoulliCache& cache() {
    static BernoulliCache c;
    return c;
}

} // namespace

Real bernoulli_2k(unsigned k, mpfr_prec_t prec) { return cache().get(k, prec); }

Complex ln_gamma(const Complex& z0, const EvalContext& ctx) {
    const mpfr_prec_t p = ctx.working_bits;
    Complex z = z0.to_prec(p);
    if (z.im().is_zero() && z.re().is_integer() && z.re() <= 0)
        throw pole_error("ln_gamma: nonpositive integer argument");

    const long threshold = std::max<long>(20, static_cast<long>(p) / 8);
    Complex shift(p);
    long shifts = 0;
    while (z.re() < threshold) {
        shift += log(z);
        z = z + 1;
        if (++shifts > 100000000L)
            throw precision_error("ln_gamma: shift recurrence failed to terminate");
    }

    // Stirling: (z - 1/2) log z - z + log(2 pi)/2 + sum B_{2k}/(2k(2k-1) z^{2k-1})
    Real half(0.5, p);
    Real pi = const_pi(p);
    Complex result = (z - half) * log(z) - z + Complex(log(2 * pi) / 2);

    Complex zinv = Complex(1L, p) / z;
    Complex zinv2 = zinv * zinv;
    Complex power = zinv;  // z^{-(2k-1)}
    Complex sum(p);
    Real eps(p);
    mpfr_set_ui_2exp(eps.raw(), 1, -(p + 4), MPFR_RNDN);
    double prev = 1e308;
    bool converged = false;
    for (unsigned k = 1; k < 100000; ++k) {
        Real b = bernoulli_2k(k, p);
        Complex term = power * (b / Real(static_cast<long>(2 * k) * static_cast<long>(2 * k - 1), p));
        sum += term;
        double mag = abs(term).log10_abs();
        double floor_mag = abs(sum).log10_abs() + eps.log10_abs();
        if (mag < floor_mag) {
            converged = true;
            break;
        }
        if (mag > prev)
            throw precision_error("ln_gamma: asymptotic series diverged before target");
        prev = mag;
        power = power * zinv2;
    }
    if (!converged)
        throw precision_error("ln_gamma: series did not converge");
    return result + sum - shift;
}

} // namespace zetamde
