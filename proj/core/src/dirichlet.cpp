#include "zetamde/dirichlet.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "contour_util.hpp"
#include "zetamde/errors.hpp"
#include "zetamde/gamma.hpp"
#include "zetamde/lerch.hpp"

namespace zetamde {

namespace {

using detail::mul_i;

Complex over_2pi_i(const Complex& z, mpfr_prec_t p) { return -mul_i(z) / (2 * const_pi(p)); }

// cot z = i (E^2 + 1)/(E^2 - 1), E = e^{i z}
Complex cot(const Complex& z) {
    Complex e2 = exp(Complex(-2 * z.im(), 2 * z.re()));
    Complex den = e2 - 1;
    if (den.is_zero())
        throw pole_error("cot: argument at a pole");
    return mul_i((e2 + 1) / den);
}

// chi(n) e^{-i pi n^2/m} for the chi-supported n in 1..2m
struct WTable {
    long m;
    std::vector<std::pair<long, Complex>> terms;
    Real pi;
    Real half_over_m;  // pi/(2m)

    WTable(const DirichletCharacter& chi, mpfr_prec_t p)
        : m(chi.m), pi(const_pi(p)), half_over_m(const_pi(p) / (2 * chi.m)) {
        for (long n = 1; n <= 2 * m; ++n) {
            const Complex& v = chi.values[n % m];
            if (v.is_zero())
                continue;
            long r = (n * n) % (2 * m);
            terms.emplace_back(n, v * cis(-pi * Real(r, p) / m));
        }
    }

    Complex eval(const Complex& x) const {
        mpfr_prec_t p = x.prec();
        Complex sum(p);
        for (const auto& [n, coef] : terms)
            sum = sum + coef * cot((x - n) * half_over_m);
        return sum * Complex(half_over_m);
    }
};

// F(x) = -(1/(2 pi i)) e^{i pi z^2/m} z^{-s} W(z) * alpha*eps*cosh(x)
struct SiegelIntegrand {
    Complex s;
    Complex center;
    Complex aeps;
    const WTable* w;
    Real pi;
    long m;

    Complex operator()(const Real& x) const {
        mpfr_prec_t p = center.prec();
        Real sh(p), ch(p);
        sinh_cosh(sh, ch, x);
        Complex z = center + aeps * sh;
        Complex z2 = (z * z) / m;
        Complex num = exp(Complex(-pi * z2.im(), pi * z2.re()));
        Complex g = num * cpow(z, -s) * w->eval(z);
        return over_2pi_i(-(g * aeps * ch), p);
    }
};

} // namespace

DirichletCharacter analyze_character(long m, const std::vector<Complex>& values,
                                     const EvalContext& ctx) {
    const mpfr_prec_t p = ctx.working_bits;
    if (m < 1 || static_cast<long>(values.size()) != m)
        throw character_error("character table size must equal the modulus");
    DirichletCharacter chi(m, {}, p);
    chi.values.reserve(m);
    for (const auto& v : values)
        chi.values.push_back(v.to_prec(p));

    Real tol = pow10(-(ctx.working_digits() / 2), p);
    auto is_near = [&](const Complex& x, const Complex& y) { return abs(x - y) < tol; };

    for (long n = 0; n < m; ++n) {
        bool unit = std::gcd(n, m) == 1;
        if (!unit && !chi.values[n].is_zero())
            throw character_error("chi(n) must vanish exactly at gcd(n, m) > 1");
        if (unit && !(abs(abs(chi.values[n]) - Real(1L, p)) < tol))
            throw character_error("chi(n) must have unit modulus on units");
    }
    if (m > 1 && !chi.values[0].is_zero())
        throw character_error("chi(0) must be 0 for m > 1");
    if (!is_near(chi.values[1 % m], Complex(1L, p)))
        throw character_error("chi(1) must be 1");
    for (long u = 1; u < m; ++u) {
        if (std::gcd(u, m) != 1)
            continue;
        for (long v = u; v < m; ++v) {
            if (std::gcd(v, m) != 1)
                continue;
            if (!is_near(chi.values[(u * v) % m], chi.values[u] * chi.values[v]))
                throw character_error("table is not completely multiplicative");
        }
    }

    const Complex& chi_m1 = chi.values[(m - 1) % m];
    if (is_near(chi_m1, Complex(1L, p)))
        chi.parity_a = 0;
    else if (is_near(chi_m1, Complex(-1L, p)))
        chi.parity_a = 1;
    else
        throw character_error("chi(-1) must be +-1");

    Real two_pi = 2 * const_pi(p);
    Complex C(p);
    for (long n = 1; n <= m; ++n)
        C = C + chi.values[n % m] * cis(-two_pi * Real(n, p) / m);
    chi.gauss_C = C;

    // structural primitivity: conductor < m iff chi is trivial on some
    // kernel {n = 1 mod d, gcd(n, m) = 1} with d a proper divisor
    bool primitive = true;
    for (long d = 1; d < m && primitive; ++d) {
        if (m % d != 0)
            continue;
        bool induced = true;
        for (long n = 1; n < m && induced; ++n) {
            if (n % d != 1 % d || std::gcd(n, m) != 1)
                continue;
            if (!is_near(chi.values[n], Complex(1L, p)))
                induced = false;
        }
        if (induced)
            primitive = false;
    }
    chi.primitive = primitive;
    bool gauss_primitive = abs(abs(C) * abs(C) - Real(m, p)) < Real(0.01, p);
    if (gauss_primitive != primitive)
        throw precision_error("analyze_character: Gauss-sum and structural primitivity disagree");

    if (primitive) {
        // rho = exp(-i a pi/4 - log(C)/2 + log(m)/4)
        Complex ln_rho = Complex(Real(p), -const_pi(p) * Real(static_cast<long>(chi.parity_a), p) / 4) -
                         log(C) / 2 + Complex(log(Real(m, p)) / 4);
        chi.rho = exp(ln_rho);
    }
    return chi;
}

Complex w_eval(const Complex& x, const DirichletCharacter& chi, const EvalContext& ctx) {
    WTable table(chi, ctx.working_bits);
    return table.eval(x.to_prec(ctx.working_bits));
}

Complex lambda_eval(const Complex& s_in, const DirichletCharacter& chi, const EvalContext& ctx,
                    const Overrides& ov, LambdaDiag* diag, Real* tail) {
    const mpfr_prec_t p = ctx.working_bits;
    if (!chi.primitive)
        throw character_error("lambda_eval: character must be primitive (use the Hurwitz route)");
    Complex s = s_in.to_prec(p);
    if (s.im().sign() < 0)
        throw domain_error("lambda_eval: Im s must be >= 0");

    Real two_pi = 2 * const_pi(p);
    Complex r = sqrt(s * chi.m / Complex(Real(p), two_pi));
    Real X = r.re() - r.im();
    long N = std::max(0L, X.floor_long());

    double alpha = ov.alpha ? *ov.alpha : (abs(s.im()) >= 100 ? 1.0 : 0.25);
    const int digits_plan = ctx.target_digits + ctx.guard_digits;
    // the saddle is degenerate at rate 4 pi i/m (not 4 pi i): the integrand
    // decays as exp(-2 pi alpha^2 sinh^2 x / m), so the cutoff plans with
    // alpha/sqrt(m)
    QuadPlan plan = plan_params(digits_plan, alpha / std::sqrt(static_cast<double>(chi.m)), p);
    plan.alpha = alpha;
    detail::apply_plan_overrides(plan, ov, p, digits_plan);

    CenterPolicy policy = ov.center.value_or(CenterPolicy::automatic);
    bool half = policy == CenterPolicy::halfinteger;
    if (policy == CenterPolicy::automatic) {
        Real frac = X - floor(X);
        half = X < Real(0.25, p) || frac < Real(0.05, p) || frac > Real(0.95, p);
    }
    plan.center = half ? Complex(Real(N, p) + Real(0.5, p)) : r;
    plan.direction = cis(const_pi(p) / 4);

    WTable table(chi, p);
    SiegelIntegrand f{s, plan.center, plan.direction * Real(alpha, p), &table, const_pi(p),
                      chi.m};

    // chi-supported poles at integers j; j <= N lie above the contour
    auto chi_at = [&](long j) { return chi.values[j % chi.m]; };
    auto next_supported = [&](long j, long step) {
        while (j >= 1 && chi_at(j).is_zero())
            j += step;
        return j;
    };
    auto residue = [&](long j) {  // Res_x[F] = -chi(j) j^{-s}/(2 pi i)
        return -over_2pi_i(chi_at(j) * cpow(Complex(j, p), -s), p);
    };
    auto abscissa = [&](long j) {
        return detail::pole_abscissa(Complex(j, p), plan.center, alpha, plan.direction);
    };

    std::vector<Complex> pole_xs;
    {
        long j = next_supported(N, -1);
        for (int c = 0; c <= plan.num_sing + 1 && j >= 1; ++c, j = next_supported(j - 1, -1))
            pole_xs.push_back(abscissa(j));
        j = next_supported(N + 1, +1);
        for (int c = 0; c <= plan.num_sing + 1; ++c, j = next_supported(j + 1, +1))
            pole_xs.push_back(abscissa(j));
    }
    bool cutoff_pinned = ov.q_cut || ov.h || ov.steps;
    detail::finalize_plan(plan, f, pole_xs, ctx, ov.rule.has_value(), cutoff_pinned);

    Complex main(p);
    for (long k = 1; k <= N; ++k) {
        if (chi_at(k).is_zero())
            continue;
        main = main + chi_at(k) * exp(-s * Complex(log(Real(k, p))));
    }

    NodeSumStats stats;
    Complex total = main + node_sum(f, plan, ctx, &stats);

    std::vector<SingularityInfo> sings;
    std::vector<SingularityInfo> next;
    {
        long j = next_supported(N, -1);
        int c = 0;
        for (; c < plan.num_sing && j >= 1; ++c, j = next_supported(j - 1, -1))
            sings.push_back({abscissa(j), residue(j), Side::upper});
        if (j >= 1)
            next.push_back({abscissa(j), residue(j), Side::upper});
        j = next_supported(N + 1, +1);
        for (c = 0; c < plan.num_sing; ++c, j = next_supported(j + 1, +1))
            sings.push_back({abscissa(j), residue(j), Side::lower});
        next.push_back({abscissa(j), residue(j), Side::lower});
    }
    std::vector<double> mags;
    total = total + singular_correction(sings, plan, &mags);

    if (tail)
        *tail = tail_error_estimate(next, plan);
    if (diag) {
        diag->N = N;
        diag->n_main = N;
        diag->nodes = stats.nodes;
        diag->truncation_warning = stats.truncation_warning;
        diag->correction_log10 = std::move(mags);
    }
    return total;
}

namespace {

DirichletCharacter conj_character(const DirichletCharacter& chi, const EvalContext& ctx) {
    std::vector<Complex> vals;
    vals.reserve(chi.values.size());
    for (const auto& v : chi.values)
        vals.push_back(v.conj());
    return analyze_character(chi.m, vals, ctx);
}

// true when (z+a)/2 sits within 0.01 of a Gamma pole
bool gamma_degenerate(const Complex& z, int a, mpfr_prec_t p) {
    if (!(abs(z.im()) < Real(0.02, p)))
        return false;
    Real half = (z.re() + a) / 2;
    Real frac = half - floor(half + Real(0.5, p));
    return half < Real(0.01, p) && abs(frac) < Real(0.005, p);
}

} // namespace

EvalResult l_siegel(const Complex& s_in, const DirichletCharacter& chi, const EvalContext& ctx,
                    const Overrides& ov) {
    const mpfr_prec_t p = ctx.working_bits;
    if (!chi.primitive)
        throw character_error("l_siegel: character must be primitive (use the Hurwitz route)");
    Complex s = s_in.to_prec(p);
    if (s.im().sign() < 0) {
        DirichletCharacter cc = conj_character(chi, ctx);
        EvalResult r = l_siegel(s.conj(), cc, ctx, ov);
        r.value = r.value.conj();
        return r;
    }
    Complex sc = 1 - s.conj();
    if (gamma_degenerate(s, chi.parity_a, p) || gamma_degenerate(sc, chi.parity_a, p)) {
        EvalResult r = l_hurwitz(s, chi, ctx, ov);
        r.route = "hurwitz-expansion (siegel degenerate)";
        return r;
    }

    // ln pre(z) = ln rho + (z/2) ln(m/pi) + ln Gamma((z+a)/2)
    Complex ln_rho = log(chi.rho);
    Real ln_m_pi = log(Real(chi.m, p) / const_pi(p));
    auto ln_pre = [&](const Complex& z) {
        return ln_rho + (z / 2) * Complex(ln_m_pi) + ln_gamma((z + chi.parity_a) / 2, ctx);
    };

    LambdaDiag d1, d2;
    Real t1(p), t2(p);
    Complex lam1 = lambda_eval(s, chi, ctx, ov, &d1, &t1);
    Complex lam2 = lambda_eval(sc, chi, ctx, ov, &d2, &t2);
    Complex X = exp(ln_pre(sc).conj() - ln_pre(s));
    EvalResult res(lam1 + X * lam2.conj(), t1 + abs(X) * t2);
    res.n_main = d1.n_main + d2.n_main;
    res.main_N = d1.N;
    res.n_nodes = d1.nodes + d2.nodes;
    res.truncation_warning = d1.truncation_warning || d2.truncation_warning;
    res.correction_log10 = d1.correction_log10;
    res.correction_log10.insert(res.correction_log10.end(), d2.correction_log10.begin(),
                                d2.correction_log10.end());
    res.route = "siegel";
    return res;
}

namespace {

// digamma(a) by Euler-Maclaurin, for the s = 1 limit of the expansion
Real em_digamma(const Real& a, int digits, mpfr_prec_t p) {
    long K = static_cast<long>(1.1513 * (digits + 6)) / 2 + 8;
    long M = 2 * K + 20;
    Real Ma = a + Real(M, p);
    Real r = log(Ma) - 1 / (2 * Ma);
    Real w = 1 / (Ma * Ma);
    Real pw = w;
    for (long k = 1; k <= K; ++k) {
        r -= bernoulli_2k(static_cast<unsigned>(k), p) / (2 * k) * pw;
        pw *= w;
    }
    for (long n = 0; n < M; ++n)
        r -= 1 / (a + Real(n, p));
    return r;
}

} // namespace

EvalResult l_hurwitz(const Complex& s_in, const DirichletCharacter& chi, const EvalContext& ctx,
                     const Overrides& ov) {
    const mpfr_prec_t p = ctx.working_bits;
    Complex s = s_in.to_prec(p);
    if (s.im().is_zero() && s.re() == 1) {
        // termwise zeta(s, n/m) poles cancel since sum chi(n) = 0;
        // the limit is L(1, chi) = -(1/m) sum chi(n) psi(n/m)
        if (chi.m == 1)
            throw pole_error("l_hurwitz: pole at s = 1 for the trivial character");
        Complex sum(p);
        for (long n = 1; n <= chi.m; ++n) {
            const Complex& c = chi.values[n % chi.m];
            if (c.is_zero())
                continue;
            sum = sum + c * Complex(em_digamma(Real(n, p) / chi.m, ctx.target_digits, p));
        }
        EvalResult res(-(sum / chi.m), pow10(-(ctx.target_digits + 5), p));
        res.route = "hurwitz-expansion (digamma limit)";
        return res;
    }
    Complex sum(p);
    Real est(p);
    long n_main = 0, n_nodes = 0;
    bool trunc = false;
    for (long n = 1; n <= chi.m; ++n) {
        const Complex& c = chi.values[n % chi.m];
        if (c.is_zero())
            continue;
        EvalResult h = hurwitz(s, Real(n, p) / chi.m, ctx, ov);
        sum = sum + c * h.value;
        est += h.err_estimate;
        n_main += h.n_main;
        n_nodes += h.n_nodes;
        trunc = trunc || h.truncation_warning;
    }
    Complex scale = exp(-s * Complex(log(Real(chi.m, p))));
    EvalResult res(scale * sum, abs(scale) * est);
    res.n_main = n_main;
    res.n_nodes = n_nodes;
    res.truncation_warning = trunc;
    res.route = "hurwitz-expansion";
    return res;
}

namespace {

Complex parse_entry(const std::string& tok, mpfr_prec_t p) {
    if (tok == "0")
        return Complex(p);
    if (tok == "1")
        return Complex(1L, p);
    if (tok == "-1")
        return Complex(-1L, p);
    if (tok.size() > 3 && tok.substr(0, 2) == "e(" && tok.back() == ')') {
        std::string inner = tok.substr(2, tok.size() - 3);
        auto slash = inner.find('/');
        if (slash == std::string::npos)
            throw domain_error("character entry: e(k/n) expected, got " + tok);
        long k = std::stol(inner.substr(0, slash));
        long n = std::stol(inner.substr(slash + 1));
        if (n == 0)
            throw domain_error("character entry: zero denominator in " + tok);
        return cis(2 * const_pi(p) * Real(k, p) / n);
    }
    // a+bi decimal literal
    auto split = std::string::npos;
    for (size_t i = 1; i < tok.size(); ++i) {
        if ((tok[i] == '+' || tok[i] == '-') && tok[i - 1] != 'e' && tok[i - 1] != 'E')
            split = i;
    }
    if (tok.back() == 'i') {
        if (split == std::string::npos)
            throw domain_error("character entry: malformed complex literal " + tok);
        Real re(tok.substr(0, split), p);
        std::string ims = tok.substr(split, tok.size() - split - 1);
        if (ims == "+" || ims == "-")
            ims += "1";
        Real im(ims, p);
        if (re.is_nan() || im.is_nan())
            throw domain_error("character entry: malformed complex literal " + tok);
        return {re, im};
    }
    Real re(tok, p);
    if (re.is_nan())
        throw domain_error("character entry: malformed literal " + tok);
    return Complex(re);
}

} // namespace

DirichletCharacter load_character(const std::string& path, const EvalContext& ctx) {
    std::ifstream in(path);
    if (!in)
        throw domain_error("cannot open character file: " + path);
    std::string line1, line2;
    std::getline(in, line1);
    std::getline(in, line2);
    if (line1.rfind("m=", 0) != 0 || line2.rfind("values=", 0) != 0)
        throw domain_error("character file must have 'm=<int>' then 'values=<entries>'");
    long m = std::stol(line1.substr(2));
    std::vector<Complex> vals;
    std::stringstream ss(line2.substr(7));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t'))
            tok.erase(tok.begin());
        while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\r' || tok.back() == '\t'))
            tok.pop_back();
        vals.push_back(parse_entry(tok, ctx.working_bits));
    }
    return analyze_character(m, vals, ctx);
}

} // namespace zetamde
