#pragma once

#include "impcol/audit.hpp"
#include "impcol/gadgets.hpp"
#include "impcol/generate.hpp"
#include "impcol/mad.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace impcol::cli {

enum Exit { Ok = 0, False = 1, Usage = 2, Resource = 3 };

namespace detail {

inline GraphFile load(const std::string& path, std::istream& in)
{
    return path == "-" ? parse_graph(in) : read_graph_file(path);
}

inline PlaneGraph require_plane(const GraphFile& gf)
{
    if (!gf.is_plane())
        throw ArgumentError("graph '" + gf.name + "' has no rotation system");
    return gf.plane();
}

inline std::string join(const std::vector<VertexId>& ids, char sep = ',')
{
    std::string s;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i)
            s += sep;
        s += std::to_string(ids[i]);
    }
    return s;
}

inline void write_configs(std::ostream& out, const std::vector<ReducibleConfig>& configs)
{
    for (const auto& c : configs)
        out << "CONFIG " << kind_name(c.kind) << " witness=" << join(c.witness) << '\n';
}

/// Reads `color <id> 0|K` lines; `status` lines and comments are skipped.
inline Coloring read_coloring(std::istream& in)
{
    Coloring c;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word) || word == "status")
            continue;
        VertexId v;
        std::string col, extra;
        if (word != "color" || !(ls >> v >> col) || (ls >> extra))
            throw ParseError(lineno, "expected 'color <id> 0|K'");
        auto parsed = parse_color(col);
        if (!parsed)
            throw ParseError(lineno, "bad color '" + col + "'");
        if (!c.emplace(v, *parsed).second)
            throw ParseError(lineno, "vertex " + std::to_string(v) + " colored twice");
    }
    return c;
}

inline void write_coloring(std::ostream& out, const Coloring& c)
{
    for (const auto& [v, col] : c)
        out << "color " << v << ' ' << color_char(col) << '\n';
}

inline void write_structure(std::ostream& out, std::size_t i, const SpecialStructure& s)
{
    out << "STRUCTURE " << i << ' '
        << (s.kind == SpecialStructure::Kind::SpecialFace ? "special-face" : "special-configuration")
        << " u=" << s.u << " v=" << join(s.v) << " x=" << join(s.x) << " y=" << join(s.y)
        << " faces=" << join(std::vector<VertexId>(s.faces.begin(), s.faces.end())) << '\n';
}

} // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               std::istream& in = std::cin)
{
    CLI::App app{"Improper (0,k)-coloring toolkit for sparse plane graphs", "impcol"};
    app.require_subcommand(1);

    std::string file, gadget_file, coloring_file, rules = "main06", method = "enumerate";
    int d1 = 0, d2 = 6, k = 6, size = 40, vertex = -1;
    std::uint64_t seed = 1;
    long timeout_ms = 60'000;
    std::size_t threshold = kEnumerationThreshold;
    std::size_t pair_threshold = kForcingPairThreshold;
    std::optional<std::size_t> limit;

    auto add_file = [&](CLI::App* sub) { sub->add_option("file", file, "graph file, '-' for stdin")->required(); };
    auto add_timeout = [&](CLI::App* sub) { sub->add_option("--timeout", timeout_ms, "solver timeout in ms"); };
    auto add_spec = [&](CLI::App* sub) {
        sub->add_option("--d1", d1, "degree bound of color 0");
        sub->add_option("--d2", d2, "degree bound of color K");
    };

    auto* class_check = app.add_subcommand("class-check", "planarity and forbidden cycle report");
    add_file(class_check);
    auto* solve_cmd = app.add_subcommand("solve", "find a (d1,d2)-coloring");
    add_file(solve_cmd);
    add_spec(solve_cmd);
    add_timeout(solve_cmd);
    auto* verify_cmd = app.add_subcommand("verify", "check a coloring");
    add_file(verify_cmd);
    add_spec(verify_cmd);
    verify_cmd->add_option("--coloring", coloring_file, "file of 'color <id> 0|K' lines")->required();
    auto* enumerate_cmd = app.add_subcommand("enumerate", "list every coloring");
    add_file(enumerate_cmd);
    add_spec(enumerate_cmd);
    add_timeout(enumerate_cmd);
    enumerate_cmd->add_option("--limit", limit, "stop after this many colorings");
    enumerate_cmd->add_option("--threshold", threshold, "largest graph enumerated without a limit");
    auto* detect_cmd = app.add_subcommand("detect", "list reducible configurations");
    add_file(detect_cmd);
    auto* hyper_cmd = app.add_subcommand("hypergraph", "special structures and sponsorship");
    add_file(hyper_cmd);
    auto* discharge_cmd = app.add_subcommand("discharge", "run a discharging rule set");
    add_file(discharge_cmd);
    discharge_cmd->add_option("--rules", rules, "main06 or mindeg")->check(CLI::IsMember({"main06", "mindeg"}));
    discharge_cmd->add_option("--k", k, "parameter of mindeg");
    auto* audit_cmd = app.add_subcommand("audit", "discharge and collect configurations");
    add_file(audit_cmd);
    auto* mad_cmd = app.add_subcommand("mad", "maximum average degree");
    add_file(mad_cmd);
    auto* gen_cmd = app.add_subcommand("gen", "generate a connected graph in class C");
    gen_cmd->add_option("--seed", seed, "random seed");
    gen_cmd->add_option("--size", size, "vertex budget");
    auto* gbuild_cmd = app.add_subcommand("gadget-build", "replace a 2-vertex by a path gadget");
    add_file(gbuild_cmd);
    gbuild_cmd->add_option("--vertex", vertex, "the 2-vertex to replace")->required();
    auto* gverify_cmd = app.add_subcommand("gadget-verify", "check a gadget's forcing property");
    add_file(gverify_cmd);
    gverify_cmd->add_option("--k", k, "color K degree bound")->required();
    gverify_cmd->add_option("--method", method, "enumerate or solver")->check(CLI::IsMember({"enumerate", "solver"}));
    gverify_cmd->add_option("--threshold", threshold, "largest u3 gadget enumerated");
    gverify_cmd->add_option("--pair-threshold", pair_threshold, "largest pair gadget checked");
    add_timeout(gverify_cmd);
    auto* reduce_cmd = app.add_subcommand("reduce", "attach k-1 gadget copies to every vertex");
    add_file(reduce_cmd);
    reduce_cmd->add_option("--gadget", gadget_file, "u3-forcing gadget")->required();
    reduce_cmd->add_option("--k", k, "target K degree bound")->required();
    auto* compose_cmd = app.add_subcommand("compose", "replace marked template edges by gadget copies");
    add_file(compose_cmd);
    compose_cmd->add_option("--gadget", gadget_file, "pair gadget")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Ok : Usage;
    }

    SolverOptions opts;
    opts.timeout = std::chrono::milliseconds(timeout_ms);

    try {
        if (*class_check) {
            const GraphFile gf = detail::load(file, in);
            const PlaneGraph pg = detail::require_plane(gf);
            const EulerReport e = euler_check(pg);
            const Graph& g = pg.graph();
            out << "vertices " << e.n << "\nedges " << e.m << "\nfaces " << e.f << '\n';
            out << "plane " << (e.is_plane ? "true" : "false") << '\n';
            for (int len : {3, 4, 6})
                out << "cycle" << len << ' ' << (has_cycle_of_length(g, len) ? "present" : "absent") << '\n';
            const auto gi = girth(g);
            out << "girth " << (gi ? std::to_string(*gi) : "none") << '\n';
            const bool ok = in_class_C(pg);
            out << "class-C " << (ok ? "true" : "false") << '\n';
            return ok ? Ok : False;
        }
        if (*solve_cmd) {
            const GraphFile gf = detail::load(file, in);
            const SolveResult r = solve(gf.graph, SolveSpec{d1, d2, gf.precoloring}, opts);
            out << "status " << (r.sat ? "SAT" : "UNSAT") << '\n';
            detail::write_coloring(out, r.coloring);
            return r.sat ? Ok : False;
        }
        if (*verify_cmd) {
            const GraphFile gf = detail::load(file, in);
            std::ifstream cin_file(coloring_file);
            if (!cin_file)
                throw ArgumentError("cannot open '" + coloring_file + "'");
            const Coloring c = detail::read_coloring(cin_file);
            const VerifyResult r = verify_coloring(gf.graph, c, SolveSpec{d1, d2, gf.precoloring});
            for (const auto& v : r.violations) {
                if (v.kind == Violation::Kind::DegreeBound)
                    out << "VIOLATION degree vertex=" << v.vertex << " color=" << color_char(v.color)
                        << " same=" << v.same_color_degree << '\n';
                else
                    out << "VIOLATION precolor vertex=" << v.vertex << " color=" << color_char(v.color) << '\n';
            }
            out << "valid " << (r.valid ? "true" : "false") << '\n';
            return r.valid ? Ok : False;
        }
        if (*enumerate_cmd) {
            const GraphFile gf = detail::load(file, in);
            const auto all = enumerate_colorings(gf.graph, SolveSpec{d1, d2, gf.precoloring}, limit, threshold, opts);
            out << "order " << detail::join(gf.graph.vertices(), ' ') << '\n';
            for (const auto& c : all) {
                std::string s;
                for (const auto& [v, col] : c)
                    s += color_char(col);
                out << "COLORING " << s << '\n';
            }
            out << "count " << all.size() << '\n';
            return all.empty() ? False : Ok;
        }
        if (*detect_cmd) {
            const GraphFile gf = detail::load(file, in);
            detail::write_configs(out, gf.is_plane() ? detect_reducible(gf.plane()) : detect_reducible(gf.graph));
            return Ok;
        }
        if (*hyper_cmd) {
            const PlaneGraph pg = detail::require_plane(detail::load(file, in));
            const auto structures = find_special_structures(pg);
            for (std::size_t i = 0; i < structures.size(); ++i)
                detail::write_structure(out, i, structures[i]);
            const StructureHypergraph h = build_hypergraph(pg, structures);
            for (VertexId v : h.vertices)
                out << "VERTEX " << v << " d=" << h.degree.at(v) << " dhat=" << h.dhat.at(v)
                    << " slack=" << h.slack(v) << '\n';
            try {
                const StructureHypergraph o = choose_roots_and_sponsor(h);
                out << "ROOTS " << detail::join(o.roots) << '\n';
                for (std::size_t i = 0; i < o.sponsor.size(); ++i)
                    out << "SPONSOR " << i << ' ' << o.sponsor[i] << '\n';
                return Ok;
            } catch (const SponsorshipUndefined& e) {
                out << "sponsorship undefined\n";
                detail::write_configs(out, e.witnesses());
                return False;
            }
        }
        if (*discharge_cmd) {
            const PlaneGraph pg = detail::require_plane(detail::load(file, in));
            const RuleSet rs = rules == "mindeg" ? RuleSet::mindeg(k) : RuleSet::main06();
            try {
                write_ledger(out, apply_rules(pg, rs));
            } catch (const SponsorshipUndefined& e) {
                err << "error: " << e.what() << '\n';
                detail::write_configs(err, e.witnesses());
                return Usage;
            }
            return Ok;
        }
        if (*audit_cmd) {
            const PlaneGraph pg = detail::require_plane(detail::load(file, in));
            try {
                const AuditReport r = audit(pg);
                out << "TOTAL " << to_string(r.total) << '\n';
                out << "discharged " << (r.discharged ? "true" : "false") << '\n';
                for (const Element& e : r.negative_elements)
                    out << "NEGATIVE " << to_string(e) << ' ' << to_string(r.ledger.final.at(e)) << '\n';
                detail::write_configs(out, r.configs);
                return Ok;
            } catch (const AuditFailure& e) {
                out << "FAILURE " << e.what() << '\n';
                return False;
            }
        }
        if (*mad_cmd) {
            const GraphFile gf = detail::load(file, in);
            out << "mad " << to_string(mad(gf.graph)) << '\n';
            return Ok;
        }
        if (*gen_cmd) {
            const PlaneGraph pg = generate_class_C(seed, size);
            write_graph(out, to_file(pg, "gen_" + std::to_string(seed) + "_" + std::to_string(size)));
            return Ok;
        }
        if (*gbuild_cmd) {
            const GraphFile gf = detail::load(file, in);
            const TerminalGadget t = gf.is_plane() ? build_path_gadget(gf.plane(), vertex)
                                                   : build_path_gadget(gf.graph, vertex);
            write_graph(out, t.to_file(gf.name + "_path"));
            return Ok;
        }
        if (*gverify_cmd) {
            const TerminalGadget t = TerminalGadget::from_file(detail::load(file, in));
            ForcingVerdict v;
            if (t.contract == TerminalGadget::Contract::PairForcing) {
                out << "contract pair\n";
                v = verify_forcing_pair(t, k, pair_threshold, opts);
            } else if (t.contract == TerminalGadget::Contract::U3Forcing) {
                out << "contract u3\n";
                v = verify_u3_forcing(t, k, method == "solver" ? ForcingMethod::Solver : ForcingMethod::Enumerate,
                                      threshold, opts);
            } else {
                throw ArgumentError("gadget declares neither u3 nor an x, y terminal pair");
            }
            out << "colorable " << (v.colorable ? "true" : "false") << '\n';
            out << "forcing " << (v.forcing ? "true" : "false") << '\n';
            return v.forcing ? Ok : False;
        }
        if (*reduce_cmd) {
            const GraphFile gf = detail::load(file, in);
            const TerminalGadget t = TerminalGadget::from_file(read_graph_file(gadget_file));
            if (gf.is_plane() && t.rotation)
                write_graph(out, to_file(reduce_01_to_0k(gf.plane(), t, k), gf.name + "_reduced"));
            else
                write_graph(out, to_file(reduce_01_to_0k(gf.graph, t, k), gf.name + "_reduced"));
            return Ok;
        }
        if (*compose_cmd) {
            const GraphFile gf = detail::load(file, in);
            const TerminalGadget t = TerminalGadget::from_file(read_graph_file(gadget_file));
            const Composition c = compose_parallel(GadgetTemplate::from_file(gf), t);
            GraphFile res = to_file(c.graph, gf.name + "_composed");
            res.rotation = c.rotation;
            res.precoloring = gf.precoloring;
            write_graph(out, res);
            return Ok;
        }
    } catch (const ResourceLimit& e) {
        err << "resource limit: " << e.what() << '\n';
        return Resource;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return Usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return Usage;
    }
    return Usage;
}

} // namespace impcol::cli
