#include "rtf/formulas.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "rtf/coloring.hpp"
#include "rtf/constructions.hpp"

namespace rtf {

namespace {

std::string range_label(const FormulaParams& p, double threshold) {
    if (p.delta.num == 0) return "limit value (delta = 0)";
    if (p.delta.value() < threshold) return "within documented range";
    return "extrapolated (delta beyond the documented smallness threshold)";
}

int r_star_triangles(int k) {
    if (k == 2 || k == 3) {
        auto r = r_star_search(k, std::vector<int>(k, 3), 8);
        if (r.status != SolveStatus::exact)
            throw std::runtime_error("formula: r* search did not finish");
        return r.value;
    }
    if (k == 4) return 16;  // literature value; beyond the search cap
    throw std::invalid_argument("formula: multicolour density needs k in [2,4]");
}

}  // namespace

FormulaValue eval_formula(Formula f, const FormulaParams& p) {
    const Ratio d = p.delta;
    const Ratio half{1, 2};
    FormulaValue out;
    switch (f) {
        case Formula::rho_k3k3:
            out.value = Ratio{1, 4} + d * half;
            out.expression = "1/4 + delta/2";
            out.validity = range_label(p, 1e-13);
            break;
        case Formula::rho_k3k4:
            out.value = Ratio{1, 3} + d * half + Ratio{3, 2} * d * d;
            out.expression = "1/3 + delta/2 + 3 delta^2/2";
            out.validity = range_label(p, p.doc_threshold);
            break;
        case Formula::rho_k3k5:
            out.value = Ratio{2, 5} + d * half;
            out.expression = "2/5 + delta/2";
            out.validity = range_label(p, p.doc_threshold);
            break;
        case Formula::rho_k3k6_lower:
            out.value = Ratio{5, 12} + d * half + Ratio{2, 1} * d * d;
            out.expression = "5/12 + delta/2 + 2 delta^2";
            out.validity = "lower bound (conjectured tight); " + range_label(p, p.doc_threshold);
            break;
        case Formula::rt_coeff_odd: {
            int r = ramsey_r3(p.s);
            out.value = half * (Ratio{1, 1} - Ratio{1, r - 1});
            out.expression = "(1 - 1/(R(3,s)-1))/2 with R(3," + std::to_string(p.s) +
                             ") = " + std::to_string(r);
            out.validity = "leading coefficient; lower-order terms omitted";
            break;
        }
        case Formula::rt_coeff_even: {
            int r = ramsey_r3(p.s);
            out.value = half * (Ratio{1, 1} - Ratio{1, r});
            out.expression = "(1 - 1/R(3,s))/2 with R(3," + std::to_string(p.s) +
                             ") = " + std::to_string(r);
            out.validity = "leading coefficient; lower-order terms omitted";
            break;
        }
        case Formula::rho_k3_multicolour: {
            int rstar = r_star_triangles(p.k);
            out.value = half * (Ratio{1, 1} - Ratio{1, rstar});
            out.expression = "(1 - 1/r*)/2 with r* = " + std::to_string(rstar);
            out.validity = p.k <= 3 ? "r* search-verified" : "r* from the cited literature";
            break;
        }
    }
    out.approx = out.value.value();
    return out;
}

namespace {
const std::vector<std::pair<std::string, Formula>> kFormulaNames = {
    {"rho_k3k3", Formula::rho_k3k3},
    {"rho_k3k4", Formula::rho_k3k4},
    {"rho_k3k5", Formula::rho_k3k5},
    {"rho_k3k6_lower", Formula::rho_k3k6_lower},
    {"rt_coeff_odd", Formula::rt_coeff_odd},
    {"rt_coeff_even", Formula::rt_coeff_even},
    {"rho_k3_multicolour", Formula::rho_k3_multicolour},
};
}  // namespace

Formula parse_formula(const std::string& name) {
    for (const auto& [key, f] : kFormulaNames)
        if (key == name) return f;
    throw std::invalid_argument("unknown formula identifier: " + name);
}

std::string formula_name(Formula f) {
    for (const auto& [key, val] : kFormulaNames)
        if (val == f) return key;
    return "?";
}

std::vector<std::string> formula_names() {
    std::vector<std::string> out;
    for (const auto& [key, f] : kFormulaNames) out.push_back(key);
    return out;
}

OmegaPreset parse_omega(const std::string& name) {
    if (name == "1" || name == "c" || name == "constant") return OmegaPreset::constant;
    if (name == "loglog") return OmegaPreset::log_log;
    if (name == "sqrtloglog") return OmegaPreset::sqrt_log_log;
    throw std::invalid_argument("unknown omega preset: " + name);
}

double eval_gs(double n, int s, OmegaPreset omega, double c) {
    if (n < 3 || s < 2) throw std::invalid_argument("eval_gs: need n >= 3, s >= 2");
    double w;
    switch (omega) {
        case OmegaPreset::constant: w = c; break;
        case OmegaPreset::log_log: w = std::log(std::log(n)); break;
        case OmegaPreset::sqrt_log_log: w = std::sqrt(std::log(std::log(n))); break;
        default: throw std::invalid_argument("eval_gs: bad preset");
    }
    return n / std::exp(w * std::pow(std::log(n), 1.0 - 1.0 / s));
}

}  // namespace rtf
