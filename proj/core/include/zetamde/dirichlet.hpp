#pragma once

#include <string>
#include <vector>

#include "zetamde/result.hpp"

namespace zetamde {

// A Dirichlet character mod m given by its value table chi(0..m-1).
// gauss_C = sum chi(n) e^{-2 pi i n/m}; |C|^2 = m iff chi is primitive.
// rho = i^{-a/2} C^{-1/2} m^{1/4} with principal roots.
struct DirichletCharacter {
    long m = 0;
    std::vector<Complex> values;
    int parity_a = 0;  // 0 even, 1 odd
    Complex gauss_C;
    Complex rho;
    bool primitive = false;

    DirichletCharacter(long m_, std::vector<Complex> v, mpfr_prec_t prec)
        : m(m_), values(std::move(v)), gauss_C(prec), rho(prec) {}
};

// Validate the table (complete multiplicativity on units, zeros exactly at
// gcd > 1, unit modulus) and fill C, parity, rho and the primitivity flag.
DirichletCharacter analyze_character(long m, const std::vector<Complex>& values,
                                     const EvalContext& ctx);

// Character file: line 1 "m=<int>", line 2 "values=<entries>" with entry
// grammar 0 | 1 | -1 | e(k/n) | a+bi.
DirichletCharacter load_character(const std::string& path, const EvalContext& ctx);

// W(x) = (pi/2m) sum_{n=1}^{2m} chi(n) e^{-i pi n^2/m} cot(pi (x-n)/(2m))
Complex w_eval(const Complex& x, const DirichletCharacter& chi, const EvalContext& ctx);

struct LambdaDiag {
    long N = 0;
    long n_main = 0;
    long nodes = 0;
    bool truncation_warning = false;
    std::vector<double> correction_log10;
};

// lambda(s): main sum over chi(k) k^{-s} up to N = floor(Re r - Im r),
// r = sqrt(m s / (2 pi i)), plus the corrected residual integral of
// e^{i pi x^2/m} x^{-s} W(x)/(2 pi i). Requires a primitive character.
Complex lambda_eval(const Complex& s, const DirichletCharacter& chi, const EvalContext& ctx,
                    const Overrides& ov = {}, LambdaDiag* diag = nullptr, Real* tail = nullptr);

// Siegel route: L = [mu(s) + conj(mu(1 - conj s))] / [rho (m/pi)^{s/2} Gamma((s+a)/2)].
// Falls back to the Hurwitz expansion when a Gamma factor degenerates
// (real integer s of matching parity); the result's route field says which.
EvalResult l_siegel(const Complex& s, const DirichletCharacter& chi, const EvalContext& ctx,
                    const Overrides& ov = {});

// Hurwitz expansion: L(s, chi) = m^{-s} sum_n chi(n) zeta(s, n/m); works for
// imprimitive characters too.
EvalResult l_hurwitz(const Complex& s, const DirichletCharacter& chi, const EvalContext& ctx,
                     const Overrides& ov = {});

} // namespace zetamde
