// cfree: command-line front end.
//
// Objects go to --out (stdout by default), summaries to stderr.
// Exit codes: 0 ok, 1 a checked property failed, 2 usage error, 3 runtime error.

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cfree/colorstats.hpp"
#include "cfree/constructions.hpp"
#include "cfree/dot.hpp"
#include "cfree/error.hpp"
#include "cfree/experiment.hpp"
#include "cfree/graphcore.hpp"
#include "cfree/hypergen.hpp"
#include "cfree/io.hpp"
#include "cfree/kuhn_osthus.hpp"
#include "cfree/oracles.hpp"

using namespace cfree;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitError = 3;

struct Globals {
    std::uint64_t seed = 1;
    std::string out;
    std::uint64_t budget_nodes = 100'000'000;
    double budget_seconds = 0.0;
    std::string verify = "deep";

    SearchBudget budget() const { return {budget_nodes, budget_seconds}; }
    bool deep() const { return verify == "deep"; }
};

std::string yes(bool b) { return b ? "true" : "false"; }

BipartiteGraph load_bipartite(const std::string& path, const std::string& classes) {
    Graph g = io::load_graph(path);
    if (classes.empty()) return BipartiteGraph::from_graph(std::move(g));
    auto a = io::load_vertex_list(classes);
    return BipartiteGraph::with_class_a(std::move(g), a);
}

UniformHypergraph load_underlying(const std::string& path) {
    auto any = io::load_any(path);
    if (auto* h = std::get_if<UniformHypergraph>(&any)) return *h;
    if (auto* o = std::get_if<OrientedHypergraph>(&any)) return o->underlying();
    throw Error(ErrorKind::invalid_input, path + " holds a graph, expected a hypergraph");
}

std::string coloring_text(const std::vector<int>& colors) {
    std::string s;
    for (std::size_t i = 0; i < colors.size(); ++i) s += (i ? " " : "") + std::to_string(colors[i]);
    return s;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cycle-free subgraph constructions, extractors and exact oracles"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals G;
    app.add_option("--seed", G.seed, "Random seed");
    app.add_option("--out", G.out, "Output path (default stdout)");
    app.add_option("--budget-nodes", G.budget_nodes, "Search node budget")->check(CLI::PositiveNumber);
    app.add_option("--budget-seconds", G.budget_seconds, "Search time budget, 0 = none")->check(CLI::NonNegativeNumber);
    app.add_option("--verify", G.verify, "Oracle certification: deep or fast")->check(CLI::IsMember({"deep", "fast"}));

    int status = 0;

    // --- generators ---------------------------------------------------------
    auto* gen = app.add_subcommand("gen-hypergraph", "Random a-uniform hypergraph, optionally repaired to girth > k");
    GenConfig gcfg;
    bool oriented = false, top_up = false;
    gen->add_option("--a", gcfg.a, "Uniformity")->required();
    gen->add_option("--n", gcfg.n, "Vertices")->required();
    gen->add_option("--m", gcfg.m, "Hyperedges")->required();
    gen->add_option("--k", gcfg.k, "Repair to Berge-girth > k (0 = no repair)")->default_val(0);
    gen->add_flag("--oriented", oriented, "Keep the draw order (ohg output)");
    gen->add_flag("--top-up", top_up, "After repairing, add girth-safe hyperedges up to m");
    gen->callback([&] {
        GenConfig cfg = gcfg;
        cfg.seed = G.seed;
        const bool repair = cfg.k > 0;
        if (!repair) cfg.k = 2;
        if (oriented) {
            OrientedHypergraph o = top_up && repair ? random_high_girth_oriented(cfg) : random_oriented(cfg);
            if (repair && !top_up) o = repair_girth(o, cfg.k);
            io::save_text(G.out, io::to_text(o));
            std::cerr << "hyperedges " << o.edge_count() << "\n";
        } else {
            UniformHypergraph h = top_up && repair ? random_high_girth_hypergraph(cfg) : random_hypergraph(cfg);
            if (repair && !top_up) h = repair_girth(h, cfg.k);
            io::save_text(G.out, io::to_text(h));
            std::cerr << "hyperedges " << h.edge_count() << "\n";
        }
    });

    auto* rep = app.add_subcommand("repair", "Delete hyperedges until the Berge-girth exceeds k");
    std::string rep_in;
    int rep_k = 2;
    rep->add_option("--in", rep_in, "Hypergraph file (uhg or ohg)")->required();
    rep->add_option("--k", rep_k, "Girth threshold")->required();
    rep->callback([&] {
        auto any = io::load_any(rep_in);
        if (auto* o = std::get_if<OrientedHypergraph>(&any)) {
            auto fixed = repair_girth(*o, rep_k);
            std::cerr << "deleted " << o->edge_count() - fixed.edge_count() << "\n";
            io::save_text(G.out, io::to_text(fixed));
        } else if (auto* h = std::get_if<UniformHypergraph>(&any)) {
            auto r = repair_girth_logged(*h, rep_k);
            std::cerr << "deleted " << r.deleted.size() << "\n";
            io::save_text(G.out, io::to_text(r.hypergraph));
        } else {
            throw Error(ErrorKind::invalid_input, "repair needs a hypergraph");
        }
    });

    auto* gbip = app.add_subcommand("gen-bipartite", "Connected bipartite graph with high girth and minimum degree");
    Vertex gb_n = 0;
    int gb_girth = 10, gb_mindeg = 2;
    bool gb_sparse = false;
    std::string gb_classes;
    gbip->add_option("--n", gb_n, "Vertices per side")->required();
    gbip->add_option("--girth", gb_girth, "Girth lower bound")->default_val(10);
    gbip->add_option("--mindeg", gb_mindeg, "Minimum degree")->default_val(2);
    gbip->add_flag("--no-densify", gb_sparse, "Skip the densification pass");
    gbip->add_option("--classes", gb_classes, "Write class A here");
    gbip->callback([&] {
        auto g = high_girth_bipartite(gb_n, gb_girth, gb_mindeg, G.seed, !gb_sparse);
        io::save_text(G.out, io::to_text(g.graph()));
        if (!gb_classes.empty()) {
            std::ostringstream ss;
            io::write_vertex_list(ss, g.a_order());
            io::save_text(gb_classes, ss.str());
        }
        std::cerr << "edges " << g.graph().edge_count() << " girth " << girth(g.graph()) << "\n";
    });

    // --- coloring -----------------------------------------------------------
    auto* derand = app.add_subcommand("color-derand", "Conditional-expectation b-coloring");
    std::string cd_in, cd_coloring, cd_sub;
    int cd_b = 2;
    derand->add_option("--in", cd_in, "Hypergraph file")->required();
    derand->add_option("--b", cd_b, "Colors")->required();
    derand->add_option("--coloring", cd_coloring, "Write the coloring here");
    derand->add_option("--sub", cd_sub, "Write the non-monochromatic subhypergraph here");
    derand->callback([&] {
        auto h = load_underlying(cd_in);
        auto d = derandomized_coloring(h, cd_b);
        std::size_t power = 1;
        for (int i = 0; i < h.uniformity() - 1; ++i) power *= static_cast<std::size_t>(cd_b);
        const std::size_t bound = h.edge_count() / power;
        std::ostringstream csv;
        csv << "n,m,a,b,monochromatic,mono_bound,nonmono\n"
            << h.vertex_count() << "," << h.edge_count() << "," << h.uniformity() << "," << cd_b << ","
            << d.monochromatic << "," << bound << "," << d.colorable.edge_count() << "\n";
        io::save_text(G.out, csv.str());
        if (!cd_coloring.empty()) io::save_text(cd_coloring, coloring_text(d.coloring.colors()) + "\n");
        if (!cd_sub.empty()) io::save_text(cd_sub, io::to_text(d.colorable));
        if (d.monochromatic > bound) status = kExitFail;
    });

    auto* qex = app.add_subcommand("q-exhaustive", "Largest subhypergraph whose color multisets lie in a family");
    std::string q_in, q_family = "nonmono";
    int q_b = 2;
    bool q_heuristic = false;
    qex->add_option("--in", q_in, "Hypergraph file")->required();
    qex->add_option("--b", q_b, "Colors")->required();
    qex->add_option("--family", q_family, "nonmono or rainbow")->check(CLI::IsMember({"nonmono", "rainbow"}));
    qex->add_flag("--heuristic", q_heuristic, "Seeded local search instead of exhaustive scan");
    qex->callback([&] {
        auto h = load_underlying(q_in);
        const int a = h.uniformity();
        auto family = q_family == "rainbow" ? MultisetFamily::rainbow(a, q_b) : MultisetFamily::non_monochromatic(a, q_b);
        auto best = best_subhypergraph(h, q_b, family, q_heuristic, G.seed);
        std::string bound;
        if (q_family == "rainbow") {
            bound = a <= q_b ? to_string(rainbow_bound(a, q_b)) : "0";
        } else {
            BigInt p = 1;
            for (int i = 0; i < a - 1; ++i) p *= q_b;
            bound = to_string(Rational(p - 1, p));
        }
        const double m = static_cast<double>(h.edge_count());
        std::ostringstream csv;
        csv << "n,m,a,b,q,bound,ratio,optimal,coloring\n"
            << h.vertex_count() << "," << h.edge_count() << "," << a << "," << q_b << "," << best.q << "," << bound
            << "," << format_double(m > 0 ? static_cast<double>(best.q) / m : 0.0) << "," << yes(best.optimal) << ","
            << coloring_text(best.coloring.colors()) << "\n";
        io::save_text(G.out, csv.str());
    });

    auto* crl = app.add_subcommand("check-randomlike", "Color-multiset (or sequence) counts near their expectation");
    std::string cr_in, cr_mode = "sampled";
    int cr_b = 2;
    double cr_eps = 0.1, cr_delta = 0.05;
    std::size_t cr_samples = 0;
    crl->add_option("--in", cr_in, "uhg or ohg file")->required();
    crl->add_option("--b", cr_b, "Colors")->required();
    crl->add_option("--eps", cr_eps, "Tolerance as a fraction of m")->required();
    crl->add_option("--mode", cr_mode, "exhaustive or sampled")->check(CLI::IsMember({"exhaustive", "sampled"}));
    crl->add_option("--samples", cr_samples, "Sampled colorings (default: Hoeffding size for --delta)");
    crl->add_option("--delta", cr_delta, "Failure probability for the default sample size");
    crl->callback([&] {
        auto any = io::load_any(cr_in);
        CheckMode mode = CheckMode::exhaustive();
        if (cr_mode == "sampled") {
            mode = CheckMode::sampled(G.seed, cr_samples ? cr_samples : hoeffding_sample_size(cr_eps, cr_delta));
        }
        RandomlikeReport r;
        Vertex n = 0;
        std::size_t m = 0;
        int a = 0;
        if (auto* o = std::get_if<OrientedHypergraph>(&any)) {
            r = check_randomlike_oriented(*o, cr_b, cr_eps, mode);
            n = o->vertex_count(), m = o->edge_count(), a = o->uniformity();
        } else if (auto* h = std::get_if<UniformHypergraph>(&any)) {
            r = check_randomlike(*h, cr_b, cr_eps, mode);
            n = h->vertex_count(), m = h->edge_count(), a = h->uniformity();
        } else {
            throw Error(ErrorKind::invalid_input, "check-randomlike needs a hypergraph");
        }
        std::ostringstream csv;
        csv << "n,m,a,b,eps,mode,colorings,pass,tolerance,worst_deviation,worst_pattern,worst_count,worst_expected\n"
            << n << "," << m << "," << a << "," << cr_b << "," << format_double(cr_eps) << "," << cr_mode << ","
            << r.colorings_checked << "," << yes(r.pass) << "," << format_double(r.tolerance) << ",";
        if (r.worst) {
            csv << format_double(r.worst->deviation) << ",(" << coloring_text(r.worst->colors) << "),"
                << r.worst->count << "," << format_double(r.worst->expected) << "\n";
        } else {
            csv << "NA,NA,NA,NA\n";
        }
        io::save_text(G.out, csv.str());
        if (!r.pass) status = kExitFail;
    });

    // --- extraction ---------------------------------------------------------
    auto* ext = app.add_subcommand("extract", "Largest C4-step layer of a bipartite graph");
    std::string ex_in, ex_classes, ex_report;
    ext->add_option("--in", ex_in, "Graph file")->required();
    ext->add_option("--classes", ex_classes, "Class A vertex list (default: 2-coloring)");
    ext->add_option("--report", ex_report, "CSV report path (default stderr)");
    ext->callback([&] {
        auto g = load_bipartite(ex_in, ex_classes);
        auto layering = build_layering(g);
        Graph out = extract_c4free(g);
        const bool c4free = !has_cycle_of_length(out, 4, G.budget());
        io::save_text(G.out, io::to_text(out));
        std::ostringstream csv;
        csv << "e,h,extracted,c4free\n"
            << g.graph().edge_count() << "," << layering.layer_count << "," << out.edge_count() << "," << yes(c4free)
            << "\n";
        if (ex_report.empty()) {
            std::cerr << csv.str();
        } else {
            io::save_text(ex_report, csv.str());
        }
        if (!c4free) status = kExitFail;
    });

    // --- constructions ------------------------------------------------------
    auto* bcl = app.add_subcommand("blowup-clique", "Replace each hyperedge by a clique");
    std::string bc_in;
    int bc_k = 0;
    bcl->add_option("--in", bc_in, "uhg file")->required();
    bcl->add_option("--k", bc_k, "Require uniformity 2k-1 (0 = any)");
    bcl->callback([&] {
        auto h = load_underlying(bc_in);
        if (bc_k > 0 && h.uniformity() != 2 * bc_k - 1) {
            throw Error(ErrorKind::uniformity_mismatch, "uniformity must be 2k-1 = " + std::to_string(2 * bc_k - 1));
        }
        auto b = clique_blowup(h);
        io::save_text(G.out, io::to_text(b.graph));
        std::cerr << "edges " << b.graph.edge_count() << "\n";
    });

    auto* bbi = app.add_subcommand("blowup-bipartite", "Replace each oriented hyperedge by K_{k-1,l}");
    std::string bb_in;
    int bb_k = 0, bb_l = 0;
    bbi->add_option("--in", bb_in, "ohg file")->required();
    bbi->add_option("--k", bb_k, "k")->required();
    bbi->add_option("--l", bb_l, "l")->required();
    bbi->callback([&] {
        auto b = bipartite_blowup(io::load_oriented(bb_in), bb_k, bb_l);
        io::save_text(G.out, io::to_text(b.graph));
        std::cerr << "edges " << b.graph.edge_count() << "\n";
    });

    auto* pd = app.add_subcommand("paste-doubled", "Base graph, its mirror, and B-vertex connector paths");
    std::string pd_in, pd_classes, pd_dot;
    int pd_l = 3;
    pd->add_option("--in", pd_in, "Bipartite base graph")->required();
    pd->add_option("--classes", pd_classes, "Class A vertex list");
    pd->add_option("--l", pd_l, "Cycle half-length (connectors have l-2 edges)")->default_val(3);
    pd->add_option("--dot", pd_dot, "Also write DOT here");
    pd->callback([&] {
        auto pg = paste_doubled(load_bipartite(pd_in, pd_classes), pd_l);
        io::save_text(G.out, io::to_text(pg.graph));
        if (!pd_dot.empty()) export_dot(to_dot(pg), pd_dot);
        std::cerr << "vertices " << pg.graph.vertex_count() << " edges " << pg.graph.edge_count() << "\n";
    });

    auto* ph = app.add_subcommand("paste-hyperdouble", "Double every vertex of a linear 3-graph into a fat edge");
    std::string ph_in, ph_dot;
    ph->add_option("--in", ph_in, "uhg file")->required();
    ph->add_option("--dot", ph_dot, "Also write DOT here");
    ph->callback([&] {
        auto pg = paste_hyperdouble(load_underlying(ph_in));
        io::save_text(G.out, io::to_text(pg.graph));
        if (!ph_dot.empty()) export_dot(to_dot(pg), ph_dot);
        std::cerr << "vertices " << pg.graph.vertex_count() << " edges " << pg.graph.edge_count()
                  << " claim " << yes(claim_one_thin_between_fat(pg)) << "\n";
    });

    auto* vp = app.add_subcommand("verify-pasted", "Is the graph pasted together from C_2l's?");
    std::string vp_in;
    int vp_l = 3;
    vp->add_option("--in", vp_in, "Graph file")->required();
    vp->add_option("--l", vp_l, "Cycle half-length")->default_val(3);
    vp->callback([&] {
        auto cert = verify_pasted(io::load_graph(vp_in), vp_l, G.budget());
        std::ostringstream csv;
        csv << "cycles,pasted,reason\n" << cert.cycles.size() << "," << yes(cert.pasted) << "," << cert.reason << "\n";
        io::save_text(G.out, csv.str());
        if (!cert.pasted) status = kExitFail;
    });

    auto* vc = app.add_subcommand("verify-cfree", "Is the graph free of cycles of length L?");
    std::string vc_in;
    int vc_L = 4;
    vc->add_option("--in", vc_in, "Graph file")->required();
    vc->add_option("--L", vc_L, "Cycle length")->required();
    vc->callback([&] {
        const bool has = has_cycle_of_length(io::load_graph(vc_in), vc_L, G.budget());
        io::save_text(G.out, "L,free\n" + std::to_string(vc_L) + "," + yes(!has) + "\n");
        if (has) status = kExitFail;
    });

    // --- oracles ------------------------------------------------------------
    auto* orc = app.add_subcommand("oracle", "Exact solvers: c4free, bipgirth, maxcut, c2kfree");
    std::string or_kind, or_in, or_sub;
    int or_girth = 4, or_k = 2;
    bool or_heuristic = false;
    orc->add_option("kind", or_kind, "Which oracle")->required()->check(
        CLI::IsMember({"c4free", "bipgirth", "maxcut", "c2kfree"}));
    orc->add_option("--in", or_in, "Graph file")->required();
    orc->add_option("--girth-gt", or_girth, "bipgirth: girth must exceed this")->default_val(4);
    orc->add_option("--k", or_k, "c2kfree: cycle half-length")->default_val(2);
    orc->add_flag("--heuristic", or_heuristic, "Greedy lower bound instead of exact search");
    orc->add_option("--subgraph", or_sub, "Write the optimal subgraph here");
    orc->callback([&] {
        Graph g = io::load_graph(or_in);
        std::ostringstream csv;
        if (or_kind == "c4free") {
            auto r = max_c4free_subgraph(g, G.budget(), or_heuristic);
            csv << "e,size,optimal\n" << g.edge_count() << "," << r.size << "," << yes(r.optimal) << "\n";
            if (!or_sub.empty()) io::save_text(or_sub, io::to_text(r.subgraph));
        } else if (or_kind == "bipgirth") {
            auto r = max_bipartite_girth_subgraph(g, or_girth, G.budget(), or_heuristic);
            csv << "e,girth_gt,size,optimal\n"
                << g.edge_count() << "," << or_girth << "," << r.size << "," << yes(r.optimal) << "\n";
            if (!or_sub.empty()) io::save_text(or_sub, io::to_text(r.subgraph));
        } else if (or_kind == "maxcut") {
            auto r = max_cut(g, G.budget());
            csv << "e,size,side\n" << g.edge_count() << "," << r.size << "," << coloring_text(r.side) << "\n";
        } else {
            const bool free = certify_c2k_free(g, or_k, G.budget());
            csv << "k,c2k_free\n" << or_k << "," << yes(free) << "\n";
        }
        io::save_text(G.out, csv.str());
    });

    // --- experiments --------------------------------------------------------
    auto* exp = app.add_subcommand("experiment", "Seeded pipeline with a CSV row per instance");
    std::string ex_id;
    ExperimentSpec spec;
    exp->add_option("--id", ex_id, "thm3 | thm4 | prop1 | lemma4 | paste1 | paste2 | kuhn-osthus")->required();
    exp->add_option("--k", spec.k, "k");
    exp->add_option("--l", spec.l, "l");
    exp->add_option("--a", spec.a, "Uniformity");
    exp->add_option("--b", spec.b, "Colors");
    exp->add_option("--n", spec.n, "Vertices (per side for bipartite bases)");
    exp->add_option("--m", spec.m, "Hyperedges / edges");
    exp->add_option("--eps", spec.eps, "Tolerance");
    exp->add_option("--family", spec.family, "nonmono or rainbow");
    exp->add_option("--count", spec.count, "Instances")->default_val(1);
    exp->add_option("--in", spec.input, "Input graph (kuhn-osthus, paste1)");
    exp->callback([&] {
        spec.id = parse_experiment_id(ex_id);
        spec.seed = G.seed;
        spec.deep = G.deep();
        spec.budget = G.budget();
        auto report = run_experiment(spec);
        io::save_text(G.out, report.csv);
        for (const auto& f : report.failures) std::cerr << "FAIL " << f << "\n";
        if (!report.hard_ok) status = kExitFail;
    });

    auto* dot = app.add_subcommand("export-dot", "Graphviz rendering");
    std::string dot_in, dot_kind = "plain", dot_classes;
    int dot_l = 3;
    dot->add_option("--in", dot_in, "Input file")->required();
    dot->add_option("--kind", dot_kind, "plain | layers | doubled | hyperdouble")
        ->check(CLI::IsMember({"plain", "layers", "doubled", "hyperdouble"}));
    dot->add_option("--classes", dot_classes, "Class A vertex list (layers, doubled)");
    dot->add_option("--l", dot_l, "doubled: cycle half-length")->default_val(3);
    dot->callback([&] {
        std::string text;
        if (dot_kind == "plain") {
            text = to_dot(io::load_graph(dot_in));
        } else if (dot_kind == "layers") {
            auto g = load_bipartite(dot_in, dot_classes);
            text = to_dot(g.graph(), build_layering(g));
        } else if (dot_kind == "doubled") {
            text = to_dot(paste_doubled(load_bipartite(dot_in, dot_classes), dot_l));
        } else {
            text = to_dot(paste_hyperdouble(load_underlying(dot_in)));
        }
        export_dot(text, G.out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return status;
}
