#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rtf/constructions.hpp"
#include "rtf/formulas.hpp"
#include "rtf/generators.hpp"
#include "rtf/graph6.hpp"
#include "rtf/report.hpp"
#include "rtf/rt_exact.hpp"
#include "rtf/structure.hpp"
#include "rtf/threads.hpp"

using namespace rtf;

namespace {

struct GlobalOpts {
    std::uint64_t seed = 1;
    std::int64_t budget = 0;  // 0: per-operation default
    std::string format = "text";
    std::string out;
};

void emit(const GlobalOpts& g, const std::string& payload) {
    if (g.out.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(g.out);
    if (!f) throw std::runtime_error("cannot open output file " + g.out);
    f << payload;
}

Graph load_graph(const std::string& path) {
    auto graphs = graph6_read_file(path);
    if (graphs.empty()) throw std::runtime_error("no graph in " + path);
    return graphs.front();
}

EdgeColoring load_coloring(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open coloring file " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return EdgeColoring::from_text(ss.str());
}

Partition load_blocks(const std::string& path, int n) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open blocks file " + path);
    std::vector<VertexSet> blocks;
    std::string line;
    while (std::getline(f, line)) {
        std::istringstream is(line);
        VertexSet b(n);
        int v;
        bool any = false;
        while (is >> v) {
            b.set(v);
            any = true;
        }
        if (any) blocks.push_back(std::move(b));
    }
    return Partition(n, std::move(blocks));
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

// construction instances named like "k3k3:120", "k3k4:90:20", "thm12:odd:3:50"
ConstructionReport build_instance(const std::string& desc, std::uint64_t seed) {
    std::vector<std::string> parts;
    std::stringstream ss(desc);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.empty()) throw std::runtime_error("empty construction descriptor");
    const std::string& family = parts[0];
    auto arg = [&](std::size_t i) -> int {
        if (i >= parts.size())
            throw std::runtime_error("descriptor " + desc + " is missing a field");
        return std::stoi(parts[i]);
    };

    if (family == "k3k3") {
        int n = arg(1);
        auto f = fnd_provider(n / 2, 2 * (n / 2) / 5);
        return build_k3k3(n, f, f);
    }
    if (family == "k3k5") {
        int n = arg(1);
        auto f = fnd_provider(n / 5, 2 * (n / 5) / 5);
        return build_k3k5(n, std::vector<FndGraph>(5, f));
    }
    if (family == "k3k4") {
        int n = arg(1);
        int f2_order = parts.size() > 2 ? arg(2) : n / 3 - n / 9;
        auto f1 = fnd_provider(n / 3, 2 * (n / 3) / 5);
        auto f2 = fnd_provider(f2_order, 2 * f2_order / 5);
        return build_k3k4(n, f1, f2, f2.alpha_cert.witness);
    }
    if (family == "k3k6") {
        int n = arg(1);
        int f2_order = parts.size() > 2 ? arg(2) : 5;
        auto f1 = fnd_provider(n / 6, 2 * (n / 6) / 5);
        auto f2 = fnd_provider(f2_order, 2 * f2_order / 5);
        VertexSet i_set = f2.alpha_cert.witness;
        if (i_set.count() % 2) i_set.reset(i_set.first());  // even split required
        return build_k3k6(n, f1, f2, i_set);
    }
    if (family == "thm12") {
        if (parts.size() < 4) throw std::runtime_error("thm12 needs thm12:<parity>:<s>:<n>");
        TargetParity parity = parts[1] == "even" ? TargetParity::even : TargetParity::odd;
        int s = arg(2), n = arg(3);
        HProvider h = [](int nv, std::uint64_t sd) { return triangle_free_process(nv, sd); };
        return build_thm12_lower(n, s, parity, h, seed);
    }
    throw std::runtime_error("unknown construction family " + family);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rt-forge: extremal graph constructions with exact verification"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--seed", g.seed, "seed for randomized operations");
    app.add_option("--budget", g.budget, "node budget override for searches");
    app.add_option("--format", g.format, "output format: text, csv or json");
    app.add_option("--out", g.out, "write primary output to a file");

    // construct
    auto* c_construct = app.add_subcommand("construct", "assemble a lower-bound instance");
    std::string c_instance = "k3k3:10";
    std::string c_prefix;
    c_construct->add_option("--instance", c_instance,
                            "family descriptor, e.g. k3k3:120 or thm12:odd:3:50");
    c_construct->add_option("--prefix", c_prefix, "write PREFIX.g6/.coloring/.csv files");

    // verify (alias check-coloring)
    std::string v_graph, v_coloring, v_spec = "3,3";
    auto* c_verify = app.add_subcommand("verify", "check a coloring against a spec");
    auto* c_checkcol = app.add_subcommand("check-coloring", "alias of verify");
    for (auto* cmd : {c_verify, c_checkcol}) {
        cmd->add_option("--graph", v_graph)->required();
        cmd->add_option("--coloring", v_coloring)->required();
        cmd->add_option("--spec", v_spec, "clique sizes per color, e.g. 3,4");
    }

    // solver subcommands
    std::string s_graph;
    std::string a_mode = "exact";
    auto* c_alpha = app.add_subcommand("alpha", "independence number");
    c_alpha->add_option("--graph", s_graph)->required();
    c_alpha->add_option("--mode", a_mode, "exact or bound");

    auto* c_clique = app.add_subcommand("clique", "maximum clique");
    c_clique->add_option("--graph", s_graph)->required();

    int cut_p = 2;
    std::string cut_mode = "local";
    int cut_restarts = 0;
    auto* c_maxcut = app.add_subcommand("maxcut", "max-cut partition");
    c_maxcut->add_option("--graph", s_graph)->required();
    c_maxcut->add_option("--p", cut_p);
    c_maxcut->add_option("--mode", cut_mode, "local or exact");
    c_maxcut->add_option("--restarts", cut_restarts);

    std::string pack_mode = "exact";
    auto* c_packing = app.add_subcommand("packing", "edge-disjoint triangle packing");
    c_packing->add_option("--graph", s_graph)->required();
    c_packing->add_option("--mode", pack_mode, "greedy or exact");

    auto* c_pdist = app.add_subcommand("pdist", "distance to complete p-partite");
    c_pdist->add_option("--graph", s_graph)->required();
    c_pdist->add_option("--p", cut_p);
    c_pdist->add_option("--mode", cut_mode, "local or exact");

    auto* c_shearer = app.add_subcommand("shearer", "triangle-free independence oracle");
    c_shearer->add_option("--graph", s_graph)->required();

    // freeness
    std::string f_graph, f_spec = "3,3";
    int f_complete = 0;
    auto* c_freeness = app.add_subcommand("freeness", "search for a clique-free coloring");
    c_freeness->add_option("--graph", f_graph);
    c_freeness->add_option("--complete", f_complete, "use a complete host of this order");
    c_freeness->add_option("--spec", f_spec);

    // rstar
    std::string r_sizes = "3,3";
    int r_cap = 12;
    auto* c_rstar = app.add_subcommand("rstar", "joint vertex+edge coloring maximum order");
    c_rstar->add_option("--sizes", r_sizes);
    c_rstar->add_option("--cap", r_cap);

    // rt-exact
    int rt_n = 5, rt_cap_alpha = 1;
    std::string rt_spec = "3,3";
    auto* c_rt = app.add_subcommand("rt-exact", "exact small-order extremal value");
    c_rt->add_option("--n", rt_n);
    c_rt->add_option("--spec", rt_spec);
    c_rt->add_option("--alpha-cap", rt_cap_alpha);

    // drc
    std::string drc_host = "complete";
    int drc_block = 64, drc_replicas = 0, drc_retries = 64;
    double drc_density = 0.75, drc_gamma = 0.5;
    auto* c_drc = app.add_subcommand("drc", "dependent random choice sampling");
    c_drc->add_option("--host", drc_host, "complete or random");
    c_drc->add_option("--block", drc_block);
    c_drc->add_option("--density", drc_density);
    c_drc->add_option("--gamma", drc_gamma);
    c_drc->add_option("--replicas", drc_replicas, "run the expectation study instead");
    c_drc->add_option("--retries", drc_retries);

    // tfp
    int tfp_n = 64;
    auto* c_tfp = app.add_subcommand("tfp", "random maximal triangle-free graph");
    c_tfp->add_option("--n", tfp_n);

    // extract
    std::string e_graph, e_coloring;
    bool e_nofact = false;
    auto* c_extract = app.add_subcommand("extract", "two-coloring structure extractor");
    c_extract->add_option("--graph", e_graph)->required();
    c_extract->add_option("--coloring", e_coloring)->required();
    c_extract->add_flag("--no-fact-check", e_nofact);

    // reduce
    std::string red_graph, red_coloring, red_blocks, red_gamma = "1/10", red_tags = "";
    auto* c_reduce = app.add_subcommand("reduce", "weighted reduced coloring over blocks");
    c_reduce->add_option("--graph", red_graph)->required();
    c_reduce->add_option("--coloring", red_coloring)->required();
    c_reduce->add_option("--blocks", red_blocks)->required();
    c_reduce->add_option("--gamma", red_gamma);
    c_reduce->add_option("--tags", red_tags, "block colors, e.g. 1,2,2")->required();

    // refine
    std::string ref_graph, ref_blocks, ref_threshold = "1/10";
    std::int64_t ref_cap = 0;
    auto* c_refine = app.add_subcommand("refine", "low-crossing-degree vertex moves");
    c_refine->add_option("--graph", ref_graph)->required();
    c_refine->add_option("--blocks", ref_blocks)->required();
    c_refine->add_option("--threshold", ref_threshold);
    c_refine->add_option("--cap", ref_cap);

    // formulas
    std::string fo_id;
    std::string fo_delta = "0";
    int fo_s = 3, fo_k = 2;
    bool fo_list = false;
    auto* c_formulas = app.add_subcommand("formulas", "closed-form density evaluators");
    c_formulas->add_option("--id", fo_id);
    c_formulas->add_option("--delta", fo_delta);
    c_formulas->add_option("--s", fo_s);
    c_formulas->add_option("--k", fo_k);
    c_formulas->add_flag("--list", fo_list);

    // gs evaluator rides along with formulas
    double gs_n = 0;
    std::string gs_omega = "1";
    c_formulas->add_option("--gs-n", gs_n, "evaluate the sublinear bound at this n");
    c_formulas->add_option("--omega", gs_omega, "1/c, loglog or sqrtloglog");

    // report
    std::vector<std::string> rep_instances;
    auto* c_report = app.add_subcommand("report", "comparison table over constructions");
    c_report->add_option("--instance", rep_instances, "repeatable family descriptor");

    // global flags remain usable after a subcommand name
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        OutputFormat fmt = parse_format(g.format);
        auto budget_or = [&](std::int64_t dflt) { return g.budget > 0 ? g.budget : dflt; };

        if (*c_construct) {
            auto report = build_instance(c_instance, g.seed);
            std::string text = to_text(report);
            if (!c_prefix.empty()) {
                graph6_write_file(c_prefix + ".g6", {report.graph});
                std::ofstream col(c_prefix + ".coloring");
                col << report.coloring.to_text();
                std::ofstream csv(c_prefix + ".csv");
                csv << construction_csv(report);
            }
            if (fmt == OutputFormat::text)
                emit(g, text);
            else
                emit(g, compare_report({report}, fmt));
            return report.ledger_ok() && report.freeness_ok() ? 0 : 2;
        }
        if (*c_verify || *c_checkcol) {
            Graph graph = load_graph(v_graph);
            auto witness =
                mono_clique(graph, load_coloring(v_coloring), FreenessSpec::parse(v_spec),
                            budget_or(200'000'000));
            if (!witness) {
                emit(g, "free: no monochromatic clique\n");
                return 0;
            }
            std::ostringstream os;
            os << "violation in color " << witness->color << ":";
            witness->clique.for_each([&](int v) { os << ' ' << v; });
            os << '\n';
            emit(g, os.str());
            return 2;
        }
        if (*c_alpha) {
            AlphaOptions opts;
            opts.mode = a_mode == "bound" ? AlphaMode::bound : AlphaMode::exact;
            opts.node_budget = g.budget;
            opts.seed = g.seed;
            emit(g, to_text(alpha(load_graph(s_graph), opts)));
            return 0;
        }
        if (*c_clique) {
            SolverLimits lim;
            lim.node_budget = budget_or(lim.node_budget);
            emit(g, to_text(max_clique(load_graph(s_graph), lim)));
            return 0;
        }
        if (*c_maxcut) {
            CutOptions opts;
            opts.restarts = cut_restarts;
            opts.seed = g.seed;
            auto mode = cut_mode == "exact" ? CutMode::exact : CutMode::local;
            emit(g, to_text(max_cut_partition(load_graph(s_graph), cut_p, mode, opts)));
            return 0;
        }
        if (*c_packing) {
            auto mode = pack_mode == "greedy" ? PackingMode::greedy : PackingMode::exact;
            emit(g, to_text(triangle_packing(load_graph(s_graph), mode)));
            return 0;
        }
        if (*c_pdist) {
            auto mode = cut_mode == "exact" ? CutMode::exact : CutMode::local;
            emit(g, to_text(p_partite_distance(load_graph(s_graph), cut_p, mode)));
            return 0;
        }
        if (*c_shearer) {
            emit(g, to_text(shearer_check(load_graph(s_graph))));
            return 0;
        }
        if (*c_freeness) {
            Graph host = f_complete > 0 ? complete_graph(f_complete) : load_graph(f_graph);
            auto res = freeness_search(host, FreenessSpec::parse(f_spec),
                                       budget_or(4'000'000'000LL));
            if (res.found()) {
                emit(g, "coloring found\n" + res.coloring->to_text());
                return 0;
            }
            emit(g, res.proven_none() ? "none: search completed\n"
                                      : "incomplete: budget exhausted\n");
            return res.proven_none() ? 1 : 3;
        }
        if (*c_rstar) {
            auto sizes = parse_int_list(r_sizes);
            auto res = r_star_search(int(sizes.size()), sizes, r_cap,
                                     budget_or(2'000'000'000LL));
            std::ostringstream os;
            os << "r* " << res.value
               << (res.status == SolveStatus::exact ? "" : " (incomplete)") << '\n';
            if (res.witness) os << res.witness->to_text();
            emit(g, os.str());
            return 0;
        }
        if (*c_rt) {
            RtQuery q{rt_n, FreenessSpec::parse(rt_spec), rt_cap_alpha};
            auto res = rt_exact(q, budget_or(500'000'000));
            std::ostringstream os;
            os << to_text(res);
            if (res.witness) os << graph6_encode(*res.witness) << '\n';
            if (res.witness_coloring) os << res.witness_coloring->to_text();
            emit(g, os.str());
            return 0;
        }
        if (*c_drc) {
            auto host = drc_host == "random"
                            ? TripartiteHost::random_density(drc_block, drc_density,
                                                             drc_gamma, g.seed)
                            : TripartiteHost::complete(drc_block, drc_gamma);
            if (drc_replicas > 0) {
                emit(g, to_text(drc_expectation_mc(host, drc_replicas, g.seed)));
                return 0;
            }
            auto t0 = std::chrono::steady_clock::now();
            auto out = drc_sample(host, g.seed, drc_retries);
            auto ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
            if (fmt == OutputFormat::csv) {
                std::ostringstream os;
                os << "seed,block,gamma,q,common,bad_pairs,kept,runtime_ms\n"
                   << g.seed << ',' << drc_block << ',' << drc_gamma << ',' << out.q << ','
                   << out.s_prime.count() << ',' << out.bad_pairs << ',' << out.s.count()
                   << ',' << ms << '\n';
                emit(g, os.str());
            } else {
                emit(g, to_text(out));
            }
            return out.target_met ? 0 : 3;
        }
        if (*c_tfp) {
            Graph graph = triangle_free_process(tfp_n, g.seed);
            emit(g, graph6_encode(graph) + "\n");
            return 0;
        }
        if (*c_extract) {
            auto res = k3k3_extract(load_graph(e_graph), load_coloring(e_coloring),
                                    !e_nofact, budget_or(400'000'000));
            emit(g, to_text(res));
            return 0;
        }
        if (*c_reduce) {
            Graph graph = load_graph(red_graph);
            auto parts = load_blocks(red_blocks, graph.order());
            auto r = reduced_coloring(graph, load_coloring(red_coloring), parts,
                                      Ratio::parse(red_gamma), parse_int_list(red_tags));
            std::ostringstream os;
            os << "order " << r.m << '\n';
            for (int p = 0; p < r.m; ++p)
                for (int q = p + 1; q < r.m; ++q)
                    if (r.has_edge(p, q))
                        os << p << ' ' << q << " color " << r.color(p, q) << " weight "
                           << r.weight(p, q) << '\n';
            emit(g, os.str());
            return 0;
        }
        if (*c_refine) {
            Graph graph = load_graph(ref_graph);
            auto res = refine_partition(graph, load_blocks(ref_blocks, graph.order()),
                                        Ratio::parse(ref_threshold), ref_cap);
            std::ostringstream os;
            os << "moves " << res.trace.size() << (res.completed ? "" : " (cap tripped)")
               << " min_cross_degree " << res.min_cross_degree << '\n';
            for (const auto& mv : res.trace)
                os << "move " << mv.v << ' ' << mv.from << "->" << mv.to << " inner "
                   << mv.inner_before << "->" << mv.inner_after << '\n';
            emit(g, os.str());
            return res.completed ? 0 : 3;
        }
        if (*c_formulas) {
            std::ostringstream os;
            if (fo_list) {
                for (const auto& name : formula_names()) os << name << '\n';
                emit(g, os.str());
                return 0;
            }
            if (gs_n > 0) {
                os << eval_gs(gs_n, fo_s, parse_omega(gs_omega)) << '\n';
                emit(g, os.str());
                return 0;
            }
            FormulaParams params;
            params.delta = Ratio::parse(fo_delta);
            params.s = fo_s;
            params.k = fo_k;
            auto v = eval_formula(parse_formula(fo_id), params);
            os << v.value.str() << " = " << v.approx << "  [" << v.expression << "; "
               << v.validity << "]\n";
            emit(g, os.str());
            return 0;
        }
        if (*c_report) {
            std::vector<ConstructionReport> reports;
            for (const auto& desc : rep_instances)
                reports.push_back(build_instance(desc, g.seed));
            emit(g, compare_report(reports, fmt));
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
