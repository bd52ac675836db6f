#include "homfull/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "homfull/constructions.hpp"
#include "homfull/generators.hpp"
#include "homfull/harness.hpp"
#include "homfull/homomorphism.hpp"
#include "homfull/io.hpp"
#include "homfull/iso.hpp"
#include "homfull/operators.hpp"
#include "homfull/recognition.hpp"

namespace homfull {

namespace {

struct Options {
    std::string kind;
    std::string format = "text";
    std::uint64_t seed = 1;
    std::size_t max_n = 8;
    bool quiet = false;
    bool machine = false;
};

class Session {
public:
    Session(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

    /// Human-readable line, suppressed by --quiet and --machine.
    void say(const std::string& line) {
        if (!opt_.quiet && !opt_.machine) out_ << line << '\n';
    }
    void machine(const std::string& line) {
        if (opt_.machine) out_ << line << '\n';
    }
    int verdict(bool yes, const std::vector<std::string>& witness, const std::string& human) {
        machine(std::string("VERDICT ") + (yes ? "true" : "false"));
        for (const auto& w : witness) machine("WITNESS " + w);
        say(human + ": " + (yes ? "yes" : "no"));
        for (const auto& w : witness) say("  " + w);
        return yes ? kExitYes : kExitNo;
    }

    /// Writes a value to `path` ("" or "-" for the output stream) in the chosen format.
    void emit(const AnyValue& value, const std::vector<std::string>& comments, const std::string& path = "") {
        auto write = [&](std::ostream& os) {
            if (opt_.format == "dot") {
                write_dot(os, value);
            } else {
                serialize(os, value, comments);
            }
        };
        if (path.empty() || path == "-") {
            if (!opt_.quiet) write(out_);
            return;
        }
        std::ofstream f(path);
        if (!f) throw Error(Errc::invalid_argument, "cannot write " + path);
        write(f);
    }

    const Options& opt() const { return opt_; }

private:
    const Options& opt_;
    std::ostream& out_;
};

std::string ids(const std::vector<VertexId>& v) {
    std::string s;
    for (VertexId x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
}

std::string pair_text(VertexPair p) { return "pair " + std::to_string(p.u) + " " + std::to_string(p.v); }

std::string map_text(const VertexMap& m) {
    std::string s = "map";
    for (std::size_t i = 0; i < m.mapping.size(); ++i) s += " " + std::to_string(i) + "->" + std::to_string(m.mapping[i]);
    return s;
}

std::string partition_text(const Partition& p) {
    std::string s = "partition";
    for (const auto& block : p.blocks) s += " {" + ids(block) + "}";
    return s;
}

std::vector<std::string> witness_lines(const Witness& w) {
    std::vector<std::string> out;
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, VertexPair>) {
                out.push_back(pair_text(x));
            } else if constexpr (std::is_same_v<T, ForbiddenQuad>) {
                out.push_back("quad " + ids({x.vertices.begin(), x.vertices.end()}) +
                              (x.shape == ForbiddenShape::two_k2 ? " 2K2" : " P4"));
            } else if constexpr (std::is_same_v<T, InducedDipath>) {
                out.push_back(pair_text({std::min(x.tail, x.head), std::max(x.tail, x.head)}));
                out.push_back("dipath " + ids({x.tail, x.middle, x.head}));
            } else if constexpr (std::is_same_v<T, VertexMap>) {
                out.push_back(map_text(x));
            } else if constexpr (std::is_same_v<T, std::vector<PairEmbedding>>) {
                for (const auto& pe : x)
                    out.push_back("embedding " + std::to_string(pe.pair.u) + " " + std::to_string(pe.pair.v) + " " +
                                  map_text(pe.embedding));
            } else if constexpr (std::is_same_v<T, Partition>) {
                out.push_back(partition_text(x));
            }
        },
        w);
    return out;
}

template <class G>
G require(const AnyValue& v, const std::string& what) {
    if (const auto* g = std::get_if<G>(&v)) return *g;
    throw Error(Errc::kind_mismatch, what + " expects a " + std::string(kind_name(G::kind)) + " file, got " +
                                         std::string(kind_name(kind_of(v))));
}

int cmd_recognize(Session& s, const std::string& path) {
    const AnyValue v = parse_file(path);
    std::string kind = s.opt().kind;
    if (kind.empty()) kind = kind_of(v) == Kind::graph ? "graph" : "oriented";
    if (kind == "graph") {
        const Graph g = require<Graph>(v, "--kind graph");
        const Verdict r = is_hom_full_graph(g);
        return s.verdict(r.answer, witness_lines(r.witness), "hom-full graph");
    }
    const OrientedGraph g = require<OrientedGraph>(v, "--kind " + kind);
    if (kind == "antisym") {
        const Verdict r = is_hom_full_antisym(g);
        return s.verdict(r.answer, witness_lines(r.witness), "hom-full antisymmetric");
    }
    const Verdict r = is_hom_full_oriented(g);
    return s.verdict(r.answer, witness_lines(r.witness), "hom-full oriented");
}

int cmd_images(Session& s, const std::string& path) {
    const AnyValue v = parse_file(path);
    std::string kind = s.opt().kind;
    if (kind.empty()) kind = kind_of(v) == Kind::graph ? "graph" : "oriented";
    auto show = [&](const auto& images) {
        s.machine("IMAGES " + std::to_string(images.size()));
        s.say("images: " + std::to_string(images.size()));
        for (std::size_t i = 0; i < images.size(); ++i)
            s.emit(images[i].graph, {"image " + std::to_string(i), partition_text(images[i].partition)});
        return kExitYes;
    };
    if (kind == "graph") return show(graph_images(require<Graph>(v, "--kind graph")));
    const OrientedGraph g = require<OrientedGraph>(v, "--kind " + kind);
    if (kind == "antisym") return show(antisymmetric_images(g));
    return show(oriented_images(g));
}

int cmd_construct(Session& s, const std::string& which, const std::vector<std::string>& inputs,
                  const std::vector<std::string>& outputs) {
    auto out_path = [&](std::size_t i) { return i < outputs.size() ? outputs[i] : std::string(); };
    auto expect_inputs = [&](std::size_t n) {
        if (inputs.size() != n)
            throw Error(Errc::usage_error, "construct " + which + " takes " + std::to_string(n) + " input file(s)");
    };
    if (which == "dagiso") {
        if (inputs.empty()) throw Error(Errc::usage_error, "construct dagiso needs at least one input");
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            const auto r = dagiso_gadget(require<OrientedGraph>(parse_file(inputs[i]), "dagiso"));
            s.emit(r.output, provenance(r), out_path(i));
        }
        return kExitYes;
    }
    if (which == "homfull") {
        expect_inputs(2);
        const auto r = homfull_gadget(require<OrientedGraph>(parse_file(inputs[0]), "homfull"),
                                      require<OrientedGraph>(parse_file(inputs[1]), "homfull"));
        s.emit(r.output, provenance(r), out_path(0));
        return kExitYes;
    }
    if (which == "fullorient") {
        expect_inputs(1);
        const auto r = fullorient_gadget(require<Graph>(parse_file(inputs[0]), "fullorient"));
        s.emit(r.output, provenance(r), out_path(0));
        return kExitYes;
    }
    if (which == "embed") {
        expect_inputs(1);
        const auto [host, map] = embed_in_oclique(require<OrientedGraph>(parse_file(inputs[0]), "embed"));
        std::vector<std::string> comments{"construction embed"};
        for (std::size_t i = 0; i < map.mapping.size(); ++i)
            comments.push_back("map G " + std::to_string(i) + " -> " + std::to_string(map.mapping[i]));
        s.emit(host, comments, out_path(0));
        return kExitYes;
    }
    throw Error(Errc::usage_error, "unknown construction '" + which + "'");
}

int cmd_orient(Session& s, const std::string& mode, const std::vector<std::string>& inputs, const std::string& output) {
    if (inputs.empty()) throw Error(Errc::usage_error, "orient needs an input graph");
    const Graph g = require<Graph>(parse_file(inputs[0]), "orient");
    auto found = [&](const std::optional<OrientedGraph>& o, const std::string& what) {
        s.machine(std::string("VERDICT ") + (o ? "true" : "false"));
        if (!o) {
            s.say(what + ": none");
            return kExitNo;
        }
        s.emit(*o, {what}, output);
        return kExitYes;
    };
    if (mode == "oclique") return found(has_oclique_orientation(g), "oriented-clique orientation");
    if (mode == "homfull") return found(has_homfull_orientation(g), "hom-full orientation");
    if (mode == "cotree") return found(quasi_transitive_orientation(g), "cotree orientation");
    if (mode == "gadget") {
        if (inputs.size() != 2) throw Error(Errc::usage_error, "orient gadget takes a graph and its orientation");
        return found(orient_gadget(g, require<OrientedGraph>(parse_file(inputs[1]), "orient gadget")),
                     "oriented gadget");
    }
    throw Error(Errc::usage_error, "unknown orientation mode '" + mode + "'");
}

int cmd_gadget(Session& s, const std::string& which, const std::string& output) {
    if (which == "J") {
        const auto& j = derive_gadget_J();
        s.emit(j.graph,
               {"gadget J", "label u " + std::to_string(j.u), "label u' " + std::to_string(j.u_prime),
                "label v " + std::to_string(j.v), "label v' " + std::to_string(j.v_prime), "label w " + std::to_string(j.w)},
               output);
        return kExitYes;
    }
    if (which == "fig1") {
        const auto& f = derive_fig1_fixture();
        s.emit(f.graph,
               {"fixture fig1", "label u " + std::to_string(f.u), "label u' " + std::to_string(f.u_prime),
                "label v " + std::to_string(f.v), "label v' " + std::to_string(f.v_prime), "label x " + std::to_string(f.x)},
               output);
        return kExitYes;
    }
    throw Error(Errc::usage_error, "unknown gadget '" + which + "' (J or fig1)");
}

int cmd_gen(Session& s, const std::string& family, std::size_t n, double p, const std::string& output) {
    Rng rng(s.opt().seed);
    const std::map<std::string, std::function<AnyValue()>> families{
        {"homfull", [&] { return AnyValue(homfull_graph_generator(n, s.opt().seed)); }},
        {"bn", [&] { return AnyValue(bn_oclique(n)); }},
        {"tournament", [&] { return AnyValue(regular_tournament(n)); }},
        {"transitive", [&] { return AnyValue(transitive_tournament(n)); }},
        {"empty", [&] { return AnyValue(empty_graph(n)); }},
        {"complete", [&] { return AnyValue(complete_graph(n)); }},
        {"path", [&] { return AnyValue(path_graph(n)); }},
        {"cycle", [&] { return AnyValue(cycle_graph(n)); }},
        {"dpath", [&] { return AnyValue(directed_path(n)); }},
        {"dcycle", [&] { return AnyValue(directed_cycle(n)); }},
        {"random-graph", [&] { return AnyValue(random_graph(n, p, rng)); }},
        {"random-oriented", [&] { return AnyValue(random_oriented(n, rng)); }},
        {"random-dag", [&] { return AnyValue(random_dag(n, p, rng)); }},
    };
    const auto it = families.find(family);
    if (it == families.end()) throw Error(Errc::usage_error, "unknown family '" + family + "'");
    s.emit(it->second(), {}, output);
    return kExitYes;
}

int cmd_verify(Session& s, std::ostream& out, const std::string& theorem, const std::string& output, bool timings) {
    std::vector<std::string> which;
    if (theorem == "all") {
        which = theorem_ids();
    } else {
        which.push_back(theorem);
    }
    HarnessConfig cfg;
    cfg.max_n = s.opt().max_n;
    cfg.seed = s.opt().seed;
    const HarnessReport report = run_harness(which, cfg);
    if (output.empty() || output == "-") {
        if (!s.opt().quiet) write_report(out, report, timings);
    } else {
        std::ofstream f(output);
        if (!f) throw Error(Errc::invalid_argument, "cannot write " + output);
        write_report(f, report, timings);
        s.say(std::string("harness: ") + (report.passed() ? "pass" : "fail"));
    }
    return report.passed() ? kExitYes : kExitNo;
}

int cmd_iso(Session& s, const std::string& a, const std::string& b) {
    const AnyValue va = parse_file(a);
    const AnyValue vb = parse_file(b);
    if (kind_of(va) != kind_of(vb)) throw Error(Errc::kind_mismatch, "iso needs two files of the same kind");
    const auto m = std::visit(
        [&](const auto& g) -> std::optional<VertexMap> {
            using G = std::decay_t<decltype(g)>;
            return are_isomorphic(g, std::get<G>(vb));
        },
        va);
    std::vector<std::string> w;
    if (m) w.push_back(map_text(*m));
    return s.verdict(m.has_value(), w, "isomorphic");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Homomorphically full graphs and oriented graphs", "homfull"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--kind", opt.kind, "reading of the input")->check(CLI::IsMember({"graph", "antisym", "oriented"}));
    app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "dot"}));
    app.add_option("--seed", opt.seed, "random seed");
    app.add_option("--max-n", opt.max_n, "largest order for harness instances");
    app.add_flag("--quiet", opt.quiet, "print nothing but machine lines and errors");
    app.add_flag("--machine", opt.machine, "print VERDICT and WITNESS lines");

    std::string file;
    std::string file2;
    std::string which;
    std::string output;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    std::string theorem = "all";
    bool no_timings = false;
    std::size_t order = 0;
    double density = 0.5;

    auto* recognize = app.add_subcommand("recognize", "decide hom-fullness");
    recognize->add_option("file", file)->required();
    auto* closure_cmd = app.add_subcommand("closure", "undirected closure of an oriented graph");
    closure_cmd->add_option("file", file)->required();
    closure_cmd->add_option("-o,--output", output);
    auto* core_cmd = app.add_subcommand("core", "core of an oriented graph");
    core_cmd->add_option("file", file)->required();
    core_cmd->add_option("-o,--output", output);
    auto* images_cmd = app.add_subcommand("images", "homomorphic images up to isomorphism");
    images_cmd->add_option("file", file)->required();
    auto* construct = app.add_subcommand("construct", "build a reduction gadget (dagiso, homfull, fullorient, embed)");
    construct->add_option("construction", which)->required();
    construct->add_option("inputs", inputs)->required();
    construct->add_option("-o,--output", outputs, "one output per result");
    auto* orient = app.add_subcommand("orient", "orient a graph (oclique, homfull, cotree, gadget)");
    orient->add_option("mode", which)->required();
    orient->add_option("inputs", inputs)->required();
    orient->add_option("-o,--output", output);
    auto* gadget = app.add_subcommand("gadget", "print a derived gadget (J, fig1)");
    gadget->add_option("name", which)->required();
    gadget->add_option("-o,--output", output);
    auto* gen = app.add_subcommand("gen", "generate a graph");
    gen->add_option("family", which)->required();
    gen->add_option("n", order)->required();
    gen->add_option("-p,--density", density, "edge probability for random families");
    gen->add_option("-o,--output", output);
    auto* verify = app.add_subcommand("verify", "run the theorem harness");
    verify->add_option("--theorem", theorem, "suite id or all");
    verify->add_option("-o,--output", output, "report file");
    verify->add_flag("--no-timings", no_timings, "omit elapsed times from the report");
    auto* iso = app.add_subcommand("iso", "isomorphism test");
    iso->add_option("first", file)->required();
    iso->add_option("second", file2)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        const auto subs = app.get_subcommands();
        out << (subs.empty() ? app.help() : subs.front()->help());
        return kExitYes;
    } catch (const CLI::ParseError& e) {
        const auto subs = app.get_subcommands();
        err << "error: UsageError: " << e.what() << '\n' << (subs.empty() ? app.help() : subs.front()->help());
        return kExitError;
    }

    Session s(opt, out);
    try {
        if (recognize->parsed()) return cmd_recognize(s, file);
        if (closure_cmd->parsed()) {
            s.emit(closure(require<OrientedGraph>(parse_file(file), "closure")), {"closure"}, output);
            return kExitYes;
        }
        if (core_cmd->parsed()) {
            const OrientedGraph g = require<OrientedGraph>(parse_file(file), "core");
            const auto vs = oriented_core_vertices(g);
            s.emit(induced_subgraph(g, std::span<const VertexId>(vs)), {"core vertices " + ids(vs)}, output);
            return kExitYes;
        }
        if (images_cmd->parsed()) return cmd_images(s, file);
        if (construct->parsed()) return cmd_construct(s, which, inputs, outputs);
        if (orient->parsed()) return cmd_orient(s, which, inputs, output);
        if (gadget->parsed()) return cmd_gadget(s, which, output);
        if (gen->parsed()) return cmd_gen(s, which, order, density, output);
        if (verify->parsed()) return cmd_verify(s, out, theorem, output, !no_timings);
        if (iso->parsed()) return cmd_iso(s, file, file2);
    } catch (const Error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
        if (e.code() == Errc::usage_error) {
            const auto subs = app.get_subcommands();
            if (!subs.empty()) err << subs.front()->help();
        }
        return kExitError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}

}  // namespace homfull
