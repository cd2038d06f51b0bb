#include "rtf/report.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace rtf {

OutputFormat parse_format(const std::string& name) {
    if (name == "text") return OutputFormat::text;
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw std::invalid_argument("unknown output format: " + name);
}

CompareRow compare_row(const ConstructionReport& report) {
    CompareRow row;
    row.family = report.family;
    row.n = report.graph.order();
    row.edges = report.actual_edges;
    row.delta = Ratio{report.inner_degree, std::max(1, row.n)};
    row.density = Ratio{row.edges, std::int64_t(row.n) * row.n};

    FormulaParams params;
    params.delta = row.delta;
    if (report.family == "k3k3")
        row.formula = eval_formula(Formula::rho_k3k3, params).value;
    else if (report.family == "k3k4")
        row.formula = eval_formula(Formula::rho_k3k4, params).value;
    else if (report.family == "k3k5")
        row.formula = eval_formula(Formula::rho_k3k5, params).value;
    else if (report.family == "k3k6")
        row.formula = eval_formula(Formula::rho_k3k6_lower, params).value;
    else if (report.family == "thm12_odd") {
        params.s = report.s_param;
        row.formula = eval_formula(Formula::rt_coeff_odd, params).value;
    } else if (report.family == "thm12_even") {
        params.s = report.s_param;
        row.formula = eval_formula(Formula::rt_coeff_even, params).value;
    }
    row.gap = (row.density - row.formula).abs();
    row.alpha = report.alpha_cert.lower;
    row.alpha_ratio = Ratio{row.alpha, std::max(1, row.n)};
    row.ledger_ok = report.ledger_ok();
    row.freeness_ok = report.freeness_ok();
    return row;
}

std::string compare_report(const std::vector<ConstructionReport>& reports,
                           OutputFormat format) {
    std::vector<CompareRow> rows;
    rows.reserve(reports.size());
    for (const auto& r : reports) rows.push_back(compare_row(r));

    if (format == OutputFormat::json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows) {
            arr.push_back({{"family", r.family},
                           {"n", r.n},
                           {"delta", r.delta.str()},
                           {"edges", r.edges},
                           {"density", r.density.str()},
                           {"density_float", r.density.value()},
                           {"formula", r.formula.str()},
                           {"formula_float", r.formula.value()},
                           {"gap", r.gap.str()},
                           {"alpha", r.alpha},
                           {"alpha_ratio", r.alpha_ratio.str()},
                           {"ledger_ok", r.ledger_ok},
                           {"freeness_ok", r.freeness_ok}});
        }
        return arr.dump(2) + "\n";
    }

    std::ostringstream os;
    const char sep = format == OutputFormat::csv ? ',' : ' ';
    os << "family" << sep << "n" << sep << "delta" << sep << "edges" << sep << "density"
       << sep << "formula" << sep << "gap" << sep << "alpha" << sep << "alpha_ratio" << sep
       << "ledger" << sep << "freeness" << '\n';
    for (const auto& r : rows) {
        os << r.family << sep << r.n << sep << r.delta.str() << sep << r.edges << sep
           << r.density.str() << sep << r.formula.str() << sep << r.gap.str() << sep
           << r.alpha << sep << r.alpha_ratio.str() << sep
           << (r.ledger_ok ? "exact" : "MISMATCH") << sep
           << (r.freeness_ok ? "none-found" : "VIOLATED") << '\n';
    }
    return os.str();
}

std::string construction_csv(const ConstructionReport& report) {
    std::ostringstream os;
    os << "family,n,predicted_edges,actual_edges,ledger,alpha,alpha_status,freeness\n";
    os << report.family << ',' << report.graph.order() << ',' << report.predicted_edges
       << ',' << report.actual_edges << ',' << (report.ledger_ok() ? "exact" : "MISMATCH")
       << ',' << report.alpha_cert.lower << ','
       << (report.alpha_cert.exact() ? "exact" : "incomplete") << ','
       << (report.freeness_ok() ? "none-found" : "VIOLATED") << '\n';
    return os.str();
}

namespace {
std::string vertices_line(const VertexSet& s) {
    std::string out;
    s.for_each([&](int v) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v);
    });
    return out;
}
std::string status_word(SolveStatus s) {
    return s == SolveStatus::exact ? "exact" : "incomplete";
}
}  // namespace

std::string to_text(const AlphaCertificate& cert) {
    std::ostringstream os;
    os << "alpha " << cert.lower;
    if (cert.upper != cert.lower) os << " upper " << cert.upper;
    os << " status " << status_word(cert.status) << '\n';
    os << "witness " << vertices_line(cert.witness) << '\n';
    return os.str();
}

std::string to_text(const CliqueCertificate& cert) {
    std::ostringstream os;
    os << "clique " << cert.size << " status " << status_word(cert.status) << '\n';
    os << "witness " << vertices_line(cert.witness) << '\n';
    return os.str();
}

std::string to_text(const TrianglePacking& packing) {
    std::ostringstream os;
    os << "packing " << packing.size() << " status " << status_word(packing.status) << '\n';
    for (auto [a, b, c] : packing.triangles) os << a << ' ' << b << ' ' << c << '\n';
    return os.str();
}

std::string to_text(const CutResult& cut) {
    std::ostringstream os;
    os << "crossing " << cut.crossing << '\n';
    for (int i = 0; i < cut.parts.block_count(); ++i)
        os << "block " << i << ": " << vertices_line(cut.parts.block(i)) << '\n';
    return os.str();
}

std::string to_text(const PPartiteDistance& dist) {
    std::ostringstream os;
    os << "distance " << dist.distance << '\n';
    for (int i = 0; i < dist.parts.block_count(); ++i)
        os << "block " << i << ": " << vertices_line(dist.parts.block(i)) << '\n';
    return os.str();
}

std::string to_text(const ShearerVerdict& verdict) {
    std::ostringstream os;
    if (!verdict.applicable) return "inapplicable (input has a triangle)\n";
    os << "k " << verdict.k << " alpha " << verdict.alpha_value << ' '
       << (verdict.holds ? "holds" : "VIOLATED") << '\n';
    return os.str();
}

std::string to_text(const ConstructionReport& report) {
    std::ostringstream os;
    os << report.family << " n=" << report.graph.order() << " edges=" << report.actual_edges
       << " predicted=" << report.predicted_edges
       << (report.ledger_ok() ? " (ledger exact)" : " (LEDGER MISMATCH)") << '\n';
    os << "target (" << report.target.to_string() << "): "
       << (report.freeness_ok() ? "no monochromatic clique found"
                                : "VIOLATION in color " +
                                      std::to_string(report.freeness_violation->color))
       << '\n';
    os << "alpha " << report.alpha_cert.lower
       << (report.alpha_cert.exact() ? "" : " (lower bound)") << '\n';
    return os.str();
}

std::string to_text(const DrcOutcome& out) {
    std::ostringstream os;
    os << "q " << out.q << " attempts " << out.attempts << '\n';
    os << "common " << out.s_prime.count() << " bad_pairs " << out.bad_pairs << " kept "
       << out.s.count() << " target " << out.target
       << (out.target_met ? " met" : " missed") << '\n';
    return os.str();
}

std::string to_text(const DrcExpectation& est) {
    std::ostringstream os;
    os << "q " << est.q << " replicas " << est.replicas << '\n';
    os << "common mean " << est.mean_sprime << " se " << est.se_sprime << " exact "
       << est.exact_sprime << (est.sprime_within_3se ? " (within 3se)" : " (OUTSIDE 3se)")
       << '\n';
    os << "bad pairs mean " << est.mean_bad << " se " << est.se_bad << '\n';
    os << "degree-floor bound " << est.min_ratio_bound
       << (est.lower_bound_ok ? " (satisfied)" : " (VIOLATED)") << '\n';
    return os.str();
}

std::string to_text(const RtResult& result) {
    std::ostringstream os;
    switch (result.kind) {
        case RtResult::Kind::solved:
            os << "max_edges " << result.max_edges << " over " << result.candidates
               << " candidate graphs\n";
            break;
        case RtResult::Kind::infeasible:
            os << "infeasible (no graph meets the cap and the coloring spec)\n";
            break;
        case RtResult::Kind::incomplete:
            os << "incomplete (budget exhausted); best so far " << result.max_edges << '\n';
            break;
    }
    return os.str();
}

std::string to_text(const ExtractorResult& result) {
    std::ostringstream os;
    os << "relabelled " << (result.relabelled ? "yes" : "no") << " x " << result.x << " y "
       << result.y << " x' " << result.x_prime << " y' " << result.y_prime << '\n';
    os << "alpha_hat " << result.alpha_hat << " beta_hat " << result.beta_hat
       << " pair_fact " << (result.fact_check_ok ? "ok" : "VIOLATED") << '\n';
    os << "cut " << result.cut_edges << " cross_min_degree " << result.cross_min_degree
       << " e2 " << result.e_g2 << '\n';
    os << "side_a " << vertices_line(result.side_a) << '\n';
    os << "side_b " << vertices_line(result.side_b) << '\n';
    return os.str();
}

}  // namespace rtf
