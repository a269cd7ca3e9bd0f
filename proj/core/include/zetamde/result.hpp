#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zetamde/quadrature.hpp"

namespace zetamde {

enum class CenterPolicy { automatic, saddle, halfinteger };
enum class DirichletRoute { siegel, hurwitz };

// Caller knobs mirroring the experiment parameters: contour scaling alpha,
// step h (as a hint; the actual h is snapped to q_cut), truncation q_cut,
// singularities removed per side, discretization rule, expansion center.
struct Overrides {
    std::optional<double> alpha;
    std::optional<double> h;
    std::optional<double> q_cut;
    std::optional<long> steps;  // exact step count, used by verify mode
    std::optional<int> num_sing;
    std::optional<Rule> rule;
    std::optional<CenterPolicy> center;
    std::optional<DirichletRoute> route;
};

struct EvalResult {
    Complex value;
    Real err_estimate;          // internal heuristic tail estimate
    long n_main = 0;            // total main-sum terms
    long n_nodes = 0;           // total quadrature nodes
    long main_N = 0;            // N of the principal frame
    bool truncation_warning = false;
    std::vector<double> correction_log10;
    std::string route;

    EvalResult(Complex v, Real e) : value(std::move(v)), err_estimate(std::move(e)) {}
};

} // namespace zetamde
