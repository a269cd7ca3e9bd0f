// Command-line front end: zeta / hurwitz / lerch / dirichlet evaluation and
// the h-halving verify mode.
//
// Exit codes: 0 ok, 1 verify-mode convergence failure, 2 parse error,
// 3 domain error, 4 internal precision assertion.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "zetamde/dirichlet.hpp"
#include "zetamde/errors.hpp"
#include "zetamde/format.hpp"
#include "zetamde/lerch.hpp"
#include "zetamde/oracle.hpp"
#include "zetamde/zeta.hpp"

namespace {

using namespace zetamde;

struct RunRequest {
    std::string command;
    std::string s_text;
    int digits = 50;
    std::string lambda = "0";
    std::string a = "1";
    std::string char_path;
    std::string route = "siegel";
    std::string fn = "zeta";  // verify target
    int verify_rows = 6;
    bool json = false;
    // raw override flags
    std::optional<double> alpha, h, qcut;
    std::optional<int> num_sing;
    std::string rule, center;
};

Overrides make_overrides(const RunRequest& req) {
    Overrides ov;
    ov.alpha = req.alpha;
    ov.h = req.h;
    ov.q_cut = req.qcut;
    ov.num_sing = req.num_sing;
    if (req.rule == "simpson")
        ov.rule = Rule::simpson;
    else if (req.rule == "midpoint")
        ov.rule = Rule::midpoint;
    else if (!req.rule.empty())
        throw domain_error("--rule must be simpson or midpoint");
    if (req.center == "saddle")
        ov.center = CenterPolicy::saddle;
    else if (req.center == "halfinteger")
        ov.center = CenterPolicy::halfinteger;
    else if (!req.center.empty())
        throw domain_error("--center must be saddle or halfinteger");
    if (req.route == "siegel")
        ov.route = DirichletRoute::siegel;
    else if (req.route == "hurwitz")
        ov.route = DirichletRoute::hurwitz;
    else
        throw domain_error("--route must be siegel or hurwitz");
    return ov;
}

EvalResult dispatch(const std::string& fn, const RunRequest& req, const Complex& s,
                    const EvalContext& ctx, const Overrides& ov) {
    const mpfr_prec_t p = ctx.working_bits;
    if (fn == "zeta")
        return zeta(s, ctx, ov);
    if (fn == "hurwitz")
        return hurwitz(s, parse_real(req.a, p), ctx, ov);
    if (fn == "lerch")
        return lerch({s, parse_real(req.lambda, p), parse_real(req.a, p)}, ctx, ov);
    if (fn == "dirichlet") {
        if (req.char_path.empty())
            throw domain_error("dirichlet requires --char <path>");
        DirichletCharacter chi = load_character(req.char_path, ctx);
        if (ov.route && *ov.route == DirichletRoute::hurwitz)
            return l_hurwitz(s, chi, ctx, ov);
        return l_siegel(s, chi, ctx, ov);
    }
    throw domain_error("unknown function: " + fn);
}

// argument-text errors exit 2 (parse), evaluation errors exit 3 (domain)
struct parse_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Complex parse_s(const std::string& text, mpfr_prec_t bits) {
    try {
        return parse_complex(text, bits);
    } catch (const domain_error& e) {
        throw parse_failure(e.what());
    }
}

int run(const RunRequest& req) {
    EvalContext ctx = EvalContext::make(req.digits);
    Complex s = parse_s(req.s_text, ctx.working_bits);
    Overrides ov = make_overrides(req);

    auto start = std::chrono::steady_clock::now();
    EvalResult res = dispatch(req.command, req, s, ctx, ov);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                          start)
                    .count();

    if (req.json) {
        nlohmann::json j;
        j["re"] = to_string_sig(res.value.re(), req.digits);
        j["im"] = to_string_sig(res.value.im(), req.digits);
        j["digits"] = req.digits;
        j["err_estimate"] = to_string_brief(res.err_estimate);
        j["n_main"] = res.n_main;
        j["n_nodes"] = res.n_nodes;
        j["ms"] = ms;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << to_string_sig(res.value.re(), req.digits) << "\n"
                  << to_string_sig(res.value.im(), req.digits) << "\n";
        std::fprintf(stderr, "# route=%s N=%ld n_main=%ld n_nodes=%ld err<=%s ms=%.1f%s\n",
                     res.route.c_str(), res.main_N, res.n_main, res.n_nodes,
                     to_string_brief(res.err_estimate).c_str(), ms,
                     res.truncation_warning ? " TRUNCATION-WARNING" : "");
    }
    return 0;
}

// Re-evaluate at h0/2^j with q_cut fixed against a reference at twice the
// digits; rows must gain >= 1.8x digits per halving until the q_cut floor.
int verify(const RunRequest& req) {
    EvalContext ctx = EvalContext::make(req.digits);
    EvalContext ref_ctx = EvalContext::make(2 * req.digits);
    Complex s = parse_s(req.s_text, ctx.working_bits);
    Overrides ov = make_overrides(req);

    EvalResult ref = dispatch(req.fn, req, s.to_prec(ref_ctx.working_bits), ref_ctx, ov);

    // base plan gives the q_cut; row j runs with steps = M0 * 2^j. The
    // Siegel integrand decays m times slower, so its cutoff plans with
    // alpha/sqrt(m).
    double alpha = ov.alpha.value_or(abs(s.im()).to_double() >= 100 ? 1.0 : 0.25);
    double alpha_plan = alpha;
    if (req.fn == "dirichlet" && !req.char_path.empty()) {
        DirichletCharacter chi = load_character(req.char_path, ctx);
        alpha_plan = alpha / std::sqrt(static_cast<double>(chi.m));
    }
    QuadPlan base = plan_params(ctx.target_digits + ctx.guard_digits, alpha_plan, ctx.working_bits);
    if (ov.q_cut)
        base.q_cut = Real(*ov.q_cut, ctx.working_bits);
    long m_target = ov.h ? (base.q_cut / Real(*ov.h, ctx.working_bits)).ceil_long()
                         : base.steps();
    long rows = req.verify_rows;
    long m0 = std::max(2L, (m_target + (1L << (rows - 1)) - 1) / (1L << (rows - 1)));

    // truncation floor implied by q_cut: 2 pi alpha^2 sinh(q)^2 nats
    Real sq = sinh(base.q_cut);
    double floor_digits = (2 * const_pi(ctx.working_bits) *
                           Real(alpha_plan * alpha_plan, ctx.working_bits) * sq * sq)
                              .to_double() /
                          2.302585092994046;

    std::printf("# verify fn=%s s=%s digits=%d alpha=%g q_cut=%.6f floor~%.0f digits\n",
                req.fn.c_str(), req.s_text.c_str(), req.digits, alpha,
                base.q_cut.to_double(), floor_digits);
    std::printf("%10s %10s %12s\n", "steps", "nodes", "log10_err");

    std::vector<double> err_digits;
    for (long j = 0; j < rows; ++j) {
        Overrides rov = ov;
        rov.q_cut = base.q_cut.to_double();
        rov.steps = m0 << j;
        rov.h.reset();
        EvalResult row = dispatch(req.fn, req, s, ctx, rov);
        Real diff = abs(row.value - ref.value.to_prec(ref_ctx.working_bits));
        double log_err = diff.log10_abs();
        err_digits.push_back(-log_err);
        std::printf("%10ld %10ld %12.2f\n", *rov.steps, row.n_nodes, log_err);
    }

    // monotone near-linear fit: each halving gains >= 1.8x digits until the
    // floor (or the reference's own accuracy) is reached; rows with fewer
    // than 12 digits carry additive offsets and only need monotonicity
    bool ok = true;
    bool degenerate = err_digits[0] >= 0.8 * floor_digits ||
                      err_digits[0] >= 0.8 * static_cast<double>(req.digits);
    double ceiling = std::min(floor_digits, 1.6 * static_cast<double>(req.digits));
    for (size_t j = 0; j + 1 < err_digits.size(); ++j) {
        if (err_digits[j + 1] >= 0.8 * ceiling)
            break;  // at the floor; later rows are exempt
        if (err_digits[j + 1] <= err_digits[j]) {
            ok = false;
            break;
        }
        if (err_digits[j] < 12.0)
            continue;
        if (err_digits[j + 1] < 1.8 * err_digits[j]) {
            ok = false;
            break;
        }
    }
    if (degenerate) {
        std::printf("# DEGENERATE: first row already at the q_cut floor\n");
        return 1;
    }
    std::printf("# slope check: %s\n", ok ? "ok (>=1.8x digits per halving)" : "FAILED");
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"arbitrary-precision Riemann/Hurwitz/Lerch zeta and Dirichlet L evaluator"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help");

    RunRequest req;
    auto add_common = [&](CLI::App* sub) {
        sub->set_help_flag("--help", "print help");
        sub->add_option("--s", req.s_text, "complex argument, e.g. 0.6-1e8i")->required();
        sub->add_option("--digits", req.digits, "significant digits of re and im");
        sub->add_option("--alpha", req.alpha, "contour scaling factor");
        sub->add_option("--h", req.h, "step-size hint (snapped to q_cut)");
        sub->add_option("--qcut", req.qcut, "truncation abscissa");
        sub->add_option("--num-sing", req.num_sing, "singularities removed per side");
        sub->add_option("--rule", req.rule, "simpson|midpoint");
        sub->add_option("--center", req.center, "saddle|halfinteger");
        sub->add_flag("--json", req.json, "emit a JSON object");
    };

    CLI::App* zeta_cmd = app.add_subcommand("zeta", "Riemann zeta");
    add_common(zeta_cmd);
    CLI::App* hur_cmd = app.add_subcommand("hurwitz", "Hurwitz zeta");
    add_common(hur_cmd);
    hur_cmd->add_option("--a", req.a, "shift parameter in (0,1]");
    CLI::App* ler_cmd = app.add_subcommand("lerch", "Lerch zeta");
    add_common(ler_cmd);
    ler_cmd->add_option("--lambda", req.lambda, "phase parameter in [0,1)");
    ler_cmd->add_option("--a", req.a, "shift parameter in (0,1]");
    CLI::App* dir_cmd = app.add_subcommand("dirichlet", "Dirichlet L-function");
    add_common(dir_cmd);
    dir_cmd->add_option("--char", req.char_path, "character file")->required();
    dir_cmd->add_option("--route", req.route, "siegel|hurwitz");
    CLI::App* ver_cmd = app.add_subcommand("verify", "h-halving convergence table");
    add_common(ver_cmd);
    ver_cmd->add_option("--fn", req.fn, "zeta|hurwitz|lerch|dirichlet");
    ver_cmd->add_option("--lambda", req.lambda, "phase parameter in [0,1)");
    ver_cmd->add_option("--a", req.a, "shift parameter in (0,1]");
    ver_cmd->add_option("--char", req.char_path, "character file");
    ver_cmd->add_option("--route", req.route, "siegel|hurwitz");
    ver_cmd->add_option("--verify-rows", req.verify_rows, "number of h-halving rows");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        for (auto* sub : {zeta_cmd, hur_cmd, ler_cmd, dir_cmd}) {
            if (sub->parsed()) {
                req.command = sub->get_name();
                return run(req);
            }
        }
        if (ver_cmd->parsed()) {
            req.command = "verify";
            return verify(req);
        }
        return 2;
    } catch (const precision_error& e) {
        std::cerr << "internal precision assertion: " << e.what() << "\n";
        return 4;
    } catch (const parse_failure& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const budget_error& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
