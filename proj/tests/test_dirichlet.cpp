#include <doctest.h>

#include "support/checks.hpp"
#include "zetamde/dirichlet.hpp"
#include "zetamde/oracle.hpp"
#include "zetamde/zeta.hpp"

using namespace zetamde;
using checks::close_abs;

namespace {

std::string char_path(const char* name) { return std::string(ZETAMDE_CHAR_DIR "/") + name; }

} // namespace

TEST_CASE("analyze_character: the bundled tables") {
    EvalContext ctx = EvalContext::make(50);
    mpfr_prec_t p = ctx.working_bits;

    DirichletCharacter c8 = load_character(char_path("chi8_2.txt"), ctx);
    CHECK(c8.m == 8);
    CHECK(c8.parity_a == 0);
    CHECK(c8.primitive);
    // C = 2 sqrt 2, real (brute-force over n = 1..8)
    close_abs(c8.gauss_C, Complex(2 * sqrt(Real(2L, p))), 55, "C(chi8)");

    DirichletCharacter c7 = load_character(char_path("chi7_5.txt"), ctx);
    CHECK(c7.parity_a == 0);  // chi(6) = 1
    CHECK(c7.primitive);
    CHECK(abs(abs(c7.gauss_C) * abs(c7.gauss_C) - Real(7L, p)).log10_abs() < -50);

    DirichletCharacter c4 = load_character(char_path("chi4.txt"), ctx);
    CHECK(c4.parity_a == 1);
    CHECK(abs(abs(c4.gauss_C) * abs(c4.gauss_C) - Real(4L, p)).log10_abs() < -50);

    // imprimitive: the mod-8 lift of chi_4 fails the Siegel-route gate but
    // still works through the Hurwitz route
    DirichletCharacter ind = load_character(char_path("chi8_induced4.txt"), ctx);
    CHECK_FALSE(ind.primitive);
    CHECK_THROWS_AS(l_siegel(Complex(2L, p), ind, ctx), character_error);
    Complex via_h = l_hurwitz(Complex(2L, p), ind, ctx).value;
    // induced character: L_8(2) = L_4(2) (1 - chi(2) 2^{-2}) = catalan
    DirichletCharacter c4b = load_character(char_path("chi4.txt"), ctx);
    close_abs(via_h, l_hurwitz(Complex(2L, p), c4b, ctx).value, 45, "induced L");

    // wrong zero pattern: chi(2) must vanish mod 4
    std::vector<Complex> bad{Complex(p), Complex(1L, p), Complex(1L, p), Complex(-1L, p)};
    CHECK_THROWS_AS(analyze_character(4, bad, ctx), character_error);
    // multiplicativity broken: chi(2)^2 != chi(4) mod 5
    std::vector<Complex> bad2{Complex(p), Complex(1L, p), Complex(1L, p), Complex(1L, p),
                              Complex(-1L, p)};
    CHECK_THROWS_AS(analyze_character(5, bad2, ctx), character_error);
}

TEST_CASE("character entry grammar") {
    EvalContext ctx = EvalContext::make(30);
    mpfr_prec_t p = ctx.working_bits;
    DirichletCharacter c5 = load_character(char_path("chi5_quartic.txt"), ctx);
    CHECK(c5.primitive);
    CHECK(c5.parity_a == 1);  // chi(4) = -1
    close_abs(c5.values[2], Complex(Real(p), Real(1L, p)), 30, "e(1/4) = i");
}

TEST_CASE("w_eval: parity and the two displays") {
    EvalContext ctx = EvalContext::make(45);
    mpfr_prec_t p = ctx.working_bits;
    checks::Rng rng(5005);
    for (const char* name : {"chi7_5.txt", "chi8_2.txt", "chi4.txt"}) {
        DirichletCharacter chi = load_character(char_path(name), ctx);
        Complex x(Real(rng.uniform(0.1, 3.0), p), Real(rng.uniform(-1.0, 1.0), p));
        // W(-x) = -chi(-1) W(x)
        Complex lhs = w_eval(-x, chi, ctx);
        Complex sign = chi.values[(chi.m - 1) % chi.m];
        Complex rhs = -(sign * w_eval(x, chi, ctx));
        INFO("table ", name);
        CHECK(digits_agree(lhs, rhs) >= 45);

        // partial-fraction display: W = (pi i/m) sum chi(n) e^{-i pi n^2/m}/(1-e^{-i pi (x-n)/m})
        //                               - (pi i/2m) sum chi(n) e^{-i pi n^2/m}
        Real pi = const_pi(p);
        Complex t1(p), t2(p);
        for (long n = 1; n <= 2 * chi.m; ++n) {
            const Complex& v = chi.values[n % chi.m];
            if (v.is_zero())
                continue;
            Complex coef = v * cis(-pi * Real((n * n) % (2 * chi.m), p) / chi.m);
            // e^{-i pi (x-n)/m}
            Complex ex = exp((x - n) * Complex(Real(p), -pi / chi.m));
            t1 += coef / (Complex(1L, p) - ex);
            t2 += coef;
        }
        Complex alt = Complex(Real(p), pi / chi.m) * t1 - Complex(Real(p), pi / (2 * chi.m)) * t2;
        CHECK(digits_agree(w_eval(x, chi, ctx), alt) >= 45);
    }
}

TEST_CASE("lambda_eval: N formula and zero-residue skipping") {
    EvalContext ctx = EvalContext::make(40);
    mpfr_prec_t p = ctx.working_bits;
    DirichletCharacter c7 = load_character(char_path("chi7_5.txt"), ctx);
    Complex s(Real(0.6, p), Real(100000L, p));
    LambdaDiag diag;
    lambda_eval(s, c7, ctx, {}, &diag);
    Complex r = sqrt(s * 7 / Complex(Real(p), 2 * const_pi(p)));
    long expect_N = (r.re() - r.im()).floor_long();
    CHECK(diag.N == expect_N);

    // chi mod 8 supports only odd integers: every corrected pole must be odd,
    // i.e. with num_sing = 2 the correction list spans 4 odd indices
    DirichletCharacter c8 = load_character(char_path("chi8_2.txt"), ctx);
    Overrides ov;
    ov.num_sing = 2;
    LambdaDiag d8;
    lambda_eval(s, c8, ctx, ov, &d8);
    CHECK(d8.correction_log10.size() == 4);

    DirichletCharacter ind = load_character(char_path("chi8_induced4.txt"), ctx);
    CHECK_THROWS_AS(lambda_eval(s, ind, ctx), character_error);
}

TEST_CASE("dual-route agreement across moduli") {
    EvalContext ctx = EvalContext::make(50);
    mpfr_prec_t p = ctx.working_bits;
    Complex s(Real(0.6, p), Real(1000L, p));
    for (const char* name : {"chi3.txt", "chi4.txt", "chi5_quad.txt", "chi5_quartic.txt",
                             "chi7_5.txt", "chi8_2.txt", "chi8_odd.txt"}) {
        DirichletCharacter chi = load_character(char_path(name), ctx);
        EvalResult a = l_siegel(s, chi, ctx);
        EvalResult b = l_hurwitz(s, chi, ctx);
        INFO("table ", name);
        CHECK(digits_agree(a.value, b.value) >= 50);
    }
}

TEST_CASE("known constants through both routes") {
    EvalContext ctx = EvalContext::make(30);
    mpfr_prec_t p = ctx.working_bits;
    DirichletCharacter c4 = load_character(char_path("chi4.txt"), ctx);
    Real pi = const_pi(p);

    // L(1, chi_4) = pi/4; s = 1 is non-degenerate for the odd character so
    // this exercises the genuine Siegel formula at real s
    EvalResult s1 = l_siegel(Complex(1L, p), c4, ctx);
    CHECK(s1.route == "siegel");
    close_abs(s1.value, Complex(pi / 4), 30, "siegel L(1)");
    EvalResult h1 = l_hurwitz(Complex(1L, p), c4, ctx);
    close_abs(h1.value, Complex(pi / 4), 30, "hurwitz L(1)");

    // L(2, chi_4) = catalan; the Siegel Gamma factor degenerates at s = 2 and
    // the call falls back (recorded in the route)
    EvalResult s2 = l_siegel(Complex(2L, p), c4, ctx);
    close_abs(s2.value, Complex(const_catalan(p)), 30, "L(2) = catalan");
    CHECK(s2.route != "siegel");
    close_abs(l_hurwitz(Complex(2L, p), c4, ctx).value, Complex(const_catalan(p)), 30,
              "hurwitz L(2)");

    // m = 1: the trivial character reduces to zeta
    std::vector<Complex> one{Complex(1L, p)};
    DirichletCharacter triv = analyze_character(1, one, ctx);
    CHECK(triv.primitive);
    Complex st(Real(0.5, p), Real(600L, p));
    CHECK(digits_agree(l_hurwitz(st, triv, ctx).value, zeta(st, ctx).value) >= 30);
    CHECK(digits_agree(l_siegel(st, triv, ctx).value, zeta(st, ctx).value) >= 30);
}

TEST_CASE("conjugation: L(conj s, conj chi) = conj L(s, chi)") {
    EvalContext ctx = EvalContext::make(40);
    mpfr_prec_t p = ctx.working_bits;
    DirichletCharacter c7 = load_character(char_path("chi7_5.txt"), ctx);
    std::vector<Complex> conj_vals;
    for (const auto& v : c7.values)
        conj_vals.push_back(v.conj());
    DirichletCharacter c7c = analyze_character(7, conj_vals, ctx);
    Complex s(Real(0.7, p), Real(2000L, p));
    Complex lhs = l_siegel(s.conj(), c7c, ctx).value;
    Complex rhs = l_siegel(s, c7, ctx).value.conj();
    CHECK(digits_agree(lhs, rhs) >= 40);
}

TEST_CASE("euler product sanity at sigma = 3") {
    EvalContext ctx = EvalContext::make(30);
    mpfr_prec_t p = ctx.working_bits;
    DirichletCharacter c4 = load_character(char_path("chi4.txt"), ctx);
    Complex s(Real(3.0, p), Real(0.5, p));
    Complex L = l_siegel(s, c4, ctx).value;
    // product over primes < 1e4; tail of log L below sum_{n >= P} n^{-3} ~ 5e-9
    std::vector<long> primes;
    std::vector<bool> sieve(10000, true);
    for (long i = 2; i < 10000; ++i) {
        if (!sieve[i])
            continue;
        primes.push_back(i);
        for (long j = i * i; j < 10000; j += i)
            sieve[j] = false;
    }
    Complex prod(1L, p);
    for (long q : primes) {
        const Complex& cv = c4.values[q % 4];
        if (cv.is_zero())
            continue;
        prod = prod * (Complex(1L, p) / (Complex(1L, p) - cv * exp(-s * Complex(log(Real(q, p))))));
    }
    CHECK(abs(L - prod).log10_abs() <= -8.0);
}

namespace {

// chi on (Z/mZ)* cyclic with generator g: chi(g^k) = e^{2 pi i j k / phi(m)}
std::vector<Complex> cyclic_character(long m, long g, long j, long phi, mpfr_prec_t p) {
    std::vector<Complex> vals(m, Complex(p));
    long pw = 1;
    for (long k = 0; k < phi; ++k) {
        vals[pw] = cis(2 * const_pi(p) * Real(j * k, p) / phi);
        pw = (pw * g) % m;
    }
    return vals;
}

} // namespace

TEST_CASE("dual-route agreement: every primitive character mod 3,4,5,7,8") {
    EvalContext ctx = EvalContext::make(50);
    mpfr_prec_t p = ctx.working_bits;
    Complex s(Real(0.6, p), Real(1000L, p));

    std::vector<DirichletCharacter> chars;
    chars.push_back(analyze_character(3, cyclic_character(3, 2, 1, 2, p), ctx));
    chars.push_back(analyze_character(4, cyclic_character(4, 3, 1, 2, p), ctx));
    for (long j : {1, 2, 3})
        chars.push_back(analyze_character(5, cyclic_character(5, 2, j, 4, p), ctx));
    for (long j : {1, 2, 3, 4, 5})
        chars.push_back(analyze_character(7, cyclic_character(7, 3, j, 6, p), ctx));
    chars.push_back(load_character(char_path("chi8_2.txt"), ctx));
    chars.push_back(load_character(char_path("chi8_odd.txt"), ctx));
    REQUIRE(chars.size() == 12);

    for (const auto& chi : chars) {
        REQUIRE(chi.primitive);
        EvalResult a = l_siegel(s, chi, ctx);
        EvalResult b = l_hurwitz(s, chi, ctx);
        INFO("m = ", chi.m, ", chi(m-1) parity a = ", chi.parity_a);
        CHECK(abs(a.value - b.value).log10_abs() <= -50.0);
    }

    // one deeper cell of the grid: a sextic character mod 7 at t = 1e5 and
    // 100 digits through both routes
    EvalContext c100 = EvalContext::make(100);
    mpfr_prec_t q = c100.working_bits;
    DirichletCharacter sextic = analyze_character(7, cyclic_character(7, 3, 1, 6, q), c100);
    Complex s5(Real(0.6, q), Real(100000L, q));
    EvalResult a = l_siegel(s5, sextic, c100);
    EvalResult b = l_hurwitz(s5, sextic, c100);
    CHECK(abs(a.value - b.value).log10_abs() <= -100.0);
}
