#pragma once

#include <string>
#include <vector>

#include "rtf/rational.hpp"

namespace rtf {

// Closed-form density evaluators. Values are exact rationals for rational
// inputs; each carries a validity label since the closed forms are proven
// only for small enough independence ratios.
enum class Formula {
    rho_k3k3,           // 1/4 + delta/2
    rho_k3k4,           // 1/3 + delta/2 + 3 delta^2/2
    rho_k3k5,           // 2/5 + delta/2
    rho_k3k6_lower,     // 5/12 + delta/2 + 2 delta^2 (conjectured tight)
    rt_coeff_odd,       // (1 - 1/(R(3,s)-1)) / 2
    rt_coeff_even,      // (1 - 1/R(3,s)) / 2
    rho_k3_multicolour  // (1 - 1/r*(3,...,3)) / 2
};

struct FormulaParams {
    Ratio delta{0, 1};
    int s = 3;  // clique parameter for the rt coefficients
    int k = 2;  // color count for the multicolour density
    // labels flag evaluations beyond this delta as extrapolated; the proofs
    // pin 1e-13 for the two-triangle case and leave the others implicit
    double doc_threshold = 1e-13;
};

struct FormulaValue {
    Ratio value;
    double approx = 0;
    std::string expression;  // human-readable closed form
    std::string validity;
};

FormulaValue eval_formula(Formula f, const FormulaParams& p = {});

Formula parse_formula(const std::string& name);
std::string formula_name(Formula f);
std::vector<std::string> formula_names();

enum class OmegaPreset { constant, log_log, sqrt_log_log };

OmegaPreset parse_omega(const std::string& name);  // "1"/"c", "loglog", "sqrtloglog"

// n / exp(omega(n) * (log n)^{1 - 1/s}); natural logs throughout.
double eval_gs(double n, int s, OmegaPreset omega, double c = 1.0);

}  // namespace rtf
